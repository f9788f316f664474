"""Recognizers for tope graphs of COMs, OMs, AOMs and LOPs."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .canon import canonical_key
from .errors import ParameterError
from .graph import PartialCube
from .metric import (
    _first_gateless,
    antipodal_masks,
    conformal_masks,
    cross_mask,
    is_affine,
    is_antipodal,
)
from .minors import MinorWitness, excluded_family, pc_minor
from .zones import iterated_zone_check


@dataclass(frozen=True)
class ClassificationReport:
    is_partial_cube: bool
    is_com: bool
    is_om: bool
    is_aom: bool
    is_lop: bool
    rank: int
    certificate: Any = None

    def as_dict(self) -> dict:
        cert = self.certificate
        if isinstance(cert, NonGatedCertificate):
            cert = {"subgraph": sorted(cert.subgraph), "vertex": cert.vertex}
        return {
            "is_partial_cube": self.is_partial_cube,
            "is_com": self.is_com,
            "is_om": self.is_om,
            "is_aom": self.is_aom,
            "is_lop": self.is_lop,
            "rank": self.rank,
            "certificate": cert,
        }


@dataclass(frozen=True)
class NonGatedCertificate:
    subgraph: frozenset
    vertex: int


@dataclass(frozen=True)
class BoundedRankResult:
    ok: bool
    member: PartialCube | None = None
    witness: MinorWitness | None = None

    def __bool__(self):
        return self.ok


def com_certificate(pc: PartialCube, masks: list[int] | None = None) -> NonGatedCertificate | None:
    """First non-gated antipodal subgraph in scan order, with its lowest gateless vertex."""
    for m in antipodal_masks(pc) if masks is None else masks:
        x = _first_gateless(pc, m)
        if x is not None:
            return NonGatedCertificate(pc.vertices(m), x)
    return None


def classify_graph(pc: PartialCube) -> ClassificationReport:
    masks = antipodal_masks(pc)
    cert = com_certificate(pc, masks)
    com = cert is None
    om = com and is_antipodal(pc)
    lop = com and all(m.bit_count() == 1 << cross_mask(pc, m).bit_count() for m in masks)
    aom = False
    if com and is_affine(pc) is not None:
        aom = all(_first_gateless(pc, m) is None for m in conformal_masks(pc))
    return ClassificationReport(True, com, om, aom, lop, graph_rank(pc), cert)


def is_com_via_zones(pc: PartialCube) -> bool:
    return iterated_zone_check(pc)


_family_lock = threading.Lock()


@lru_cache(maxsize=None)
def _family(kind: str, r: int) -> tuple[tuple[PartialCube, str], ...]:
    with _family_lock:
        return tuple((g, canonical_key(g)) for g in excluded_family(kind, r))


def is_com_bounded_rank(pc: PartialCube, r: int, lop: bool = False) -> BoundedRankResult:
    """No pc-minor from the finite excluded list for rank at most ``r``."""
    if r < 3:
        raise ParameterError("r must be at least 3")
    for member, _ in _family("Q_mm_r" if lop else "Q_minus_r", r):
        w = pc_minor(pc, member)
        if w is not None:
            return BoundedRankResult(False, member, w)
    return BoundedRankResult(True)


def _crossing(pc: PartialCube) -> list[int]:
    """For each class, the mask of classes it crosses (all four quadrants occur)."""
    k = pc.k
    out = [0] * k
    for f in range(k):
        for g in range(f + 1, k):
            quads = {(c >> f & 1, c >> g & 1) for c in pc.coords}
            if len(quads) == 4:
                out[f] |= 1 << g
                out[g] |= 1 << f
    return out


def graph_rank(pc: PartialCube) -> int:
    """Largest r such that contracting all but r classes gives Q_r.

    The kept classes must pairwise cross, so only cliques of the crossing
    relation are tried; a projection is Q_r iff it has 2^r distinct vertices.
    """
    if pc.k == 0:
        return 0
    n = pc.n
    crossing = _crossing(pc)
    cs = pc.coords

    def is_cube(keep: int, r: int) -> bool:
        return len({c & keep for c in cs}) == 1 << r

    def cliques(r: int, chosen: int, cand: int):
        if r == 0:
            yield chosen
            return
        while cand:
            f = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            yield from cliques(r - 1, chosen | 1 << f, cand & crossing[f])

    top = min(pc.k, n.bit_length() - 1)
    for r in range(top, 1, -1):
        for keep in cliques(r, 0, pc.full):
            if is_cube(keep, r):
                return r
    return 1
