"""The dictionary between partial cubes and sign systems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalMismatch, NoTopes, NotPartialCubeSystem
from .graph import PartialCube, bits, is_isometric
from .metric import _first_gateless, _const, antipodal_masks
from .signs import SignSystem, SignVector, simplify


@dataclass(frozen=True)
class TopeGraphResult:
    pc: PartialCube
    coordinate_map: dict = field(default_factory=dict)
    """pc coordinate -> tuple of original coordinates (its parallel class)"""
    topes: tuple = ()


def tope_graph(L: SignSystem) -> TopeGraphResult:
    """Tope graph of the simplification of ``L``, in its own orientation."""
    simp = simplify(L)
    S = simp.system
    k = S.ground_size
    topes = S.topes()
    if not topes:
        raise NoTopes("system has no full-support vector")
    coords = tuple(t.minus for t in topes)
    full = (1 << k) - 1
    both, allm = 0, full
    for c in coords:
        both |= c
        allm &= c
    if both != full or allm:
        missing = next(bits((full & ~both) | allm))
        raise NotPartialCubeSystem(f"coordinate {missing} takes only one sign on the topes")
    cs = set(coords)
    if not is_isometric(cs):
        raise NotPartialCubeSystem("tope set is not isometric in the cube")
    pairs = S.pairs
    for c in coords:
        for f in range(k):
            b = 1 << f
            d = c ^ b
            if c & b or d not in cs:
                continue
            mid = (full & ~c & ~b, c)
            if mid not in pairs:
                raise NotPartialCubeSystem(
                    f"edge {SignVector(k, full & ~c, c)} - {SignVector(k, full & ~d, d)} has no covector")
    return TopeGraphResult(PartialCube(coords, k), dict(simp.mapping), tuple(topes))


def _to_pair(full: int, c: int, support: int) -> tuple[int, int]:
    return (~c & support & full, c & support)


def covectors_definitional(pc: PartialCube) -> frozenset:
    """All X with X o (-T) a vertex for every vertex T.

    For any vertex T, X o (-T) is a vertex agreeing with X on its support,
    so the candidates are restrictions of vertices to each possible support.
    """
    full = pc.full
    idx = pc.index
    out = set()
    for z in range(1 << pc.k):
        supp = full & ~z
        neg = {~t & z for t in pc.coords}
        for base in {c & supp for c in pc.coords}:
            if all(base | p in idx for p in neg):
                out.add(_to_pair(full, base, supp))
    return frozenset(out)


def covectors_structural(pc: PartialCube) -> frozenset:
    """Signatures of the antipodal gated subgraphs."""
    out = set()
    for m in antipodal_masks(pc):
        if _first_gateless(pc, m) is None:
            out.add(_signature_pair(pc, m))
    return frozenset(out)


def _signature_pair(pc: PartialCube, m: int) -> tuple[int, int]:
    a, o = _const(pc, m)
    return (pc.full & ~o, a)


def antipodal_signatures(pc: PartialCube) -> frozenset:
    return frozenset(_signature_pair(pc, m) for m in antipodal_masks(pc))


def covectors_of(pc: PartialCube) -> SignSystem:
    a = covectors_definitional(pc)
    b = covectors_structural(pc)
    if a != b:
        raise InternalMismatch(
            f"covector constructions disagree: {len(a)} definitional vs {len(b)} structural")
    return SignSystem.from_pairs(pc.k, a)
