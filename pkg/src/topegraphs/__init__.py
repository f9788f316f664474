"""Partial cubes, pc-minors, sign systems and tope-graph recognition."""
