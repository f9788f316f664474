from __future__ import annotations

import random

import pytest

from topegraphs.graph import PartialCube
from topegraphs.minors import contract, enumerate_partial_cubes, generate, restrict


def scramble(pc: PartialCube, rng: random.Random) -> PartialCube:
    """Random coordinate permutation, reorientation and vertex relabelling."""
    perm = list(range(pc.k))
    rng.shuffle(perm)
    flip = rng.getrandbits(pc.k) if pc.k else 0
    coords = []
    for c in pc.coords:
        d = 0
        for f in range(pc.k):
            if c >> f & 1:
                d |= 1 << perm[f]
        coords.append(d ^ flip)
    rng.shuffle(coords)
    return PartialCube(tuple(coords), pc.k)


def elementary_minors(pc: PartialCube) -> list[PartialCube]:
    out = []
    for f in range(pc.k):
        out.append(contract(pc, f))
        out.append(restrict(pc, f, "+"))
        out.append(restrict(pc, f, "-"))
    return out


def q_minus_members(n: int) -> list[PartialCube]:
    return [generate("q_minus_star", n)] + [generate("q_minus_minus_m", n, m) for m in range(1, n + 1)]


@pytest.fixture(scope="session")
def corpus10() -> list[PartialCube]:
    return list(enumerate_partial_cubes(10))


@pytest.fixture(scope="session")
def corpus8(corpus10) -> list[PartialCube]:
    return [g for g in corpus10 if g.n <= 8]


@pytest.fixture(scope="session")
def corpus6(corpus8) -> list[PartialCube]:
    return [g for g in corpus8 if g.n <= 6]


@pytest.fixture(scope="session")
def curated() -> list[PartialCube]:
    """Larger graphs where the COM verdict is not forced by size.

    Every partial cube on at most nine vertices is a COM tope graph (the
    smallest excluded minor has ten vertices), so the small corpus cannot
    separate the recognizers; these can.
    """
    gs = q_minus_members(4)
    gs += [m for g in q_minus_members(4) for m in elementary_minors(g)]
    gs += [
        generate("cube", 4),
        generate("cube_minus_vertex", 4),
        generate("cube_minus_antipodes", 4),
        generate("even_cycle", 10),
        generate("path", 10),
    ]
    return gs


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
