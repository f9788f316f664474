"""Convexity, antipodes, gates, affinity and conformality.

Vertex sets are frozensets in the public functions; the underscored helpers
work on integer bitsets over the vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyResult, NotAffine, NotConvex
from .graph import PartialCube, bits, mask_of
from .signs import SignVector


def _const(pc: PartialCube, mask: int) -> tuple[int, int]:
    """(and, or) of the coordinates of the vertices in ``mask``."""
    a, o = pc.full, 0
    cs = pc.coords
    for v in bits(mask):
        a &= cs[v]
        o |= cs[v]
    return a, o


def cross_mask(pc: PartialCube, mask: int) -> int:
    """Classes crossing the vertex set (both signs occur)."""
    a, o = _const(pc, mask)
    return o & ~a


def hull_mask(pc: PartialCube, mask: int) -> int:
    if not mask:
        raise EmptyResult("convex hull of an empty set")
    a, o = _const(pc, mask)
    plus_const = pc.full & ~o
    out = 0
    for w, c in enumerate(pc.coords):
        if c & plus_const == 0 and c & a == a:
            out |= 1 << w
    return out


def interval_mask(pc: PartialCube, u: int, v: int) -> int:
    """conv(u, v): in a partial cube this is the interval I(u, v)."""
    cu, cv = pc.coords[u], pc.coords[v]
    same = pc.full & ~(cu ^ cv)
    t = cu & same
    out = 0
    for w, c in enumerate(pc.coords):
        if c & same == t:
            out |= 1 << w
    return out


def _as_mask(S: Iterable[int] | int) -> int:
    return S if isinstance(S, int) else mask_of(S)


def convex_hull(pc: PartialCube, S: Iterable[int]) -> frozenset:
    return pc.vertices(hull_mask(pc, _as_mask(S)))


def is_convex(pc: PartialCube, S: Iterable[int]) -> bool:
    m = _as_mask(S)
    return bool(m) and hull_mask(pc, m) == m


def _require_convex(pc: PartialCube, m: int) -> None:
    if not m or hull_mask(pc, m) != m:
        raise NotConvex("vertex set is not convex")


def _antipode_in(pc: PartialCube, m: int, cross: int, x: int) -> int | None:
    y = pc.index.get(pc.coords[x] ^ cross)
    if y is not None and m >> y & 1:
        return y
    return None


def antipode(pc: PartialCube, S: Iterable[int], x: int) -> int | None:
    m = _as_mask(S)
    _require_convex(pc, m)
    if not m >> x & 1:
        raise NotConvex(f"vertex {x} is not in the set")
    return _antipode_in(pc, m, cross_mask(pc, m), x)


def _is_antipodal_mask(pc: PartialCube, m: int) -> bool:
    if not m or hull_mask(pc, m) != m:
        return False
    cross = cross_mask(pc, m)
    return all(_antipode_in(pc, m, cross, x) is not None for x in bits(m))


def is_antipodal(pc: PartialCube, S: Iterable[int] | None = None) -> bool:
    """Whether ``S`` (default: the whole graph) is an antipodal subgraph."""
    m = pc.all_mask if S is None else _as_mask(S)
    return _is_antipodal_mask(pc, m)


def interval_hulls(pc: PartialCube) -> list[tuple[int, int, int]]:
    """Distinct conv(u, v) in scan order as (mask, u, v), u <= v."""
    seen = set()
    out = []
    for u in range(pc.n):
        for v in range(u, pc.n):
            m = interval_mask(pc, u, v)
            if m not in seen:
                seen.add(m)
                out.append((m, u, v))
    return out


def antipodal_masks(pc: PartialCube) -> list[int]:
    out = []
    for m, u, v in interval_hulls(pc):
        # conv(u, v) is antipodal exactly when every vertex x has x ^ cross in it
        if _is_antipodal_mask(pc, m):
            out.append(m)
    return out


def antipodal_subgraphs(pc: PartialCube) -> list[frozenset]:
    return [pc.vertices(m) for m in antipodal_masks(pc)]


def _gate_coord(pc: PartialCube, m: int, cross: int, x: int) -> int:
    rep = pc.coords[next(bits(m))]
    return (pc.coords[x] & cross) | (rep & ~cross)


def gate(pc: PartialCube, S: Iterable[int], x: int) -> int | None:
    """Gate of ``x`` in the convex set ``S`` via X(S) o X(x)."""
    m = _as_mask(S)
    _require_convex(pc, m)
    return pc.index.get(_gate_coord(pc, m, cross_mask(pc, m), x))


def _first_gateless(pc: PartialCube, m: int) -> int | None:
    cross = cross_mask(pc, m)
    rep = pc.coords[next(bits(m))]
    base = rep & ~cross
    idx = pc.index
    for x, c in enumerate(pc.coords):
        if (c & cross) | base not in idx:
            return x
    return None


def is_gated(pc: PartialCube, S: Iterable[int]) -> bool:
    m = _as_mask(S)
    _require_convex(pc, m)
    return _first_gateless(pc, m) is None


def signature(pc: PartialCube, S: Iterable[int]) -> SignVector:
    m = _as_mask(S)
    _require_convex(pc, m)
    a, o = _const(pc, m)
    return SignVector(pc.k, pc.full & ~o, a)


def subcube(pc: PartialCube, m: int) -> tuple[PartialCube, list[int]]:
    """The convex set ``m`` as a partial cube on its crossing classes."""
    cross = cross_mask(pc, m)
    cls = list(bits(cross))
    verts = list(bits(m))
    coords = []
    for v in verts:
        c = pc.coords[v]
        coords.append(sum(1 << i for i, f in enumerate(cls) if c >> f & 1))
    return PartialCube(tuple(coords), len(cls)), verts


# affinity -------------------------------------------------------------------


@dataclass(frozen=True)
class AffinityCertificate:
    pairs: dict = field(default_factory=dict)
    """(u, v) -> (w, -w) for u <= v"""
    na_pairs: frozenset = frozenset()
    """pairs (u, v), u < v, whose hull is a proper subgraph"""


def global_antipodes(pc: PartialCube) -> list[int | None]:
    idx = pc.index
    return [idx.get(c ^ pc.full) for c in pc.coords]


def is_affine(pc: PartialCube) -> AffinityCertificate | None:
    """Intrinsic affinity test: for all u, v some (w, -w) is crossed disjointly.

    conv(u, w) and conv(v, -w) are crossed by disjoint class sets iff ``w``
    agrees with ``u`` on every class separating ``u`` from ``v``.  If ``u``
    has a global antipode it is its own witness; otherwise the
    lowest-index vertex with an antipode that qualifies is chosen.
    """
    anti = global_antipodes(pc)
    have = [w for w in range(pc.n) if anti[w] is not None]
    if not have:
        return None
    cs = pc.coords
    pairs = {}
    na = set()
    for u in range(pc.n):
        for v in range(u, pc.n):
            sep = cs[u] ^ cs[v]
            if u != v and sep != pc.full:
                na.add((u, v))
            if anti[u] is not None:
                pairs[(u, v)] = (u, anti[u])
                continue
            for w in have:
                if (cs[w] ^ cs[u]) & sep == 0:
                    pairs[(u, v)] = (w, anti[w])
                    break
            else:
                return None
    return AffinityCertificate(pairs, frozenset(na))


def antipodal_extension(pc: PartialCube) -> PartialCube:
    """Glue a reversed copy along the global antipodal pairs.

    The copy ``v'`` of ``v`` gets the complemented coordinates of ``v`` and a
    new class set to '-'; ``w`` is joined to ``(-w)'``.  The original
    vertices keep their indices and form the '+' side of the new class.
    """
    if is_affine(pc) is None:
        raise NotAffine("partial cube is not affine")
    new = 1 << pc.k
    copies = tuple((~c & pc.full) | new for c in pc.coords)
    return PartialCube(pc.coords + copies, pc.k + 1)


def _is_conformal(pc: PartialCube, m: int, anti: list) -> bool:
    cross = cross_mask(pc, m)
    for v in bits(m):
        local = _antipode_in(pc, m, cross, v) is not None
        if local != (anti[v] is not None):
            return False
    sub, _ = subcube(pc, m)
    return is_affine(sub) is not None


def conformal_masks(pc: PartialCube) -> list[int]:
    if is_affine(pc) is None:
        raise NotAffine("host is not affine")
    anti = global_antipodes(pc)
    return [m for m, _, _ in interval_hulls(pc) if _is_conformal(pc, m, anti)]


def conformal_subgraphs(pc: PartialCube) -> list[frozenset]:
    return [pc.vertices(m) for m in conformal_masks(pc)]
