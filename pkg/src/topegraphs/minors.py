"""pc-minors: contraction, restriction, expansion and minor testing.

Also holds the generators for the cube-derived families and the
enumeration of all partial cubes by expansion from a single vertex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .canon import canonical_key
from .errors import (
    EnumerationAborted,
    InvalidExpansion,
    NotAntipodal,
    ParameterError,
)
from .graph import PartialCube, bits, is_isometric
from .metric import cross_mask, hull_mask, is_antipodal


def _sign_is_minus(sign: str) -> bool:
    if sign in ("-", "minus", "−"):
        return True
    if sign in ("+", "plus"):
        return False
    raise ParameterError(f"sign must be '+' or '-', got {sign!r}")


def project(coords: Iterable[int], keep: list[int]) -> list[int]:
    """Project coordinates onto the classes in ``keep``, deduplicating in first-seen order."""
    seen = {}
    for c in coords:
        p = 0
        for i, f in enumerate(keep):
            if c >> f & 1:
                p |= 1 << i
        if p not in seen:
            seen[p] = len(seen)
    return list(seen)


def contract_many(pc: PartialCube, classes: Iterable[int]) -> PartialCube:
    drop = set(classes)
    for f in drop:
        pc.check_class(f)
    keep = [f for f in range(pc.k) if f not in drop]
    return PartialCube(tuple(project(pc.coords, keep)), len(keep))


def contract(pc: PartialCube, f: int) -> PartialCube:
    """pi_f: delete coordinate f, merging the endpoints of every E_f edge."""
    pc.check_class(f)
    return contract_many(pc, [f])


def restrict_to(pc: PartialCube, mask: int) -> PartialCube:
    """A convex vertex set as a partial cube on the classes that cross it."""
    keep = list(bits(cross_mask(pc, mask)))
    return PartialCube(tuple(project((pc.coords[v] for v in bits(mask)), keep)), len(keep))


def restrict(pc: PartialCube, f: int, sign: str) -> PartialCube:
    """rho: keep one halfspace of E_f.

    Coordinate f is dropped, as is every coordinate that becomes constant
    on the halfspace, so the result is again a partial cube with every
    class realized on both sides.
    """
    pc.check_class(f)
    return restrict_to(pc, pc.halfspace_mask(f, _sign_is_minus(sign)))


def is_peripheral(pc: PartialCube, f: int) -> str:
    pc.check_class(f)
    b = 1 << f
    idx = pc.index
    minus_ok = plus_ok = True
    for c in pc.coords:
        if c ^ b not in idx:
            if c & b:
                minus_ok = False
            else:
                plus_ok = False
    if minus_ok and plus_ok:
        return "both"
    if minus_ok:
        return "minus"
    if plus_ok:
        return "plus"
    return "none"


# expansions -------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionSpec:
    v1: frozenset
    v2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "v1", frozenset(self.v1))
        object.__setattr__(self, "v2", frozenset(self.v2))


def _check_spec(pc: PartialCube, v1: frozenset, v2: frozenset) -> None:
    allv = set(range(pc.n))
    if not v1 <= allv or not v2 <= allv:
        raise InvalidExpansion("vertex out of range")
    if v1 | v2 != allv:
        raise InvalidExpansion("v1 and v2 do not cover the graph")
    if not v1 & v2:
        raise InvalidExpansion("v1 and v2 do not intersect")
    cs = pc.coords
    for part in (v1, v2):
        if not is_isometric({cs[v] for v in part}):
            raise InvalidExpansion("a side is not isometric")
    only1, only2 = v1 - v2, v2 - v1
    for u, w in pc.edges:
        if (u in only1 and w in only2) or (u in only2 and w in only1):
            raise InvalidExpansion(f"edge {u}-{w} joins v1\\v2 to v2\\v1")


def _expand_unchecked(pc: PartialCube, v1, v2) -> PartialCube:
    new = 1 << pc.k
    out = []
    for v, c in enumerate(pc.coords):
        if v in v1:
            out.append(c)
        if v in v2:
            out.append(c | new)
    return PartialCube(tuple(out), pc.k + 1)


def expand(pc: PartialCube, spec: ExpansionSpec) -> PartialCube:
    """Expansion along (v1, v2): v1 copies sit on the '+' side of the new class."""
    _check_spec(pc, spec.v1, spec.v2)
    return _expand_unchecked(pc, spec.v1, spec.v2)


def _components_without(pc: PartialCube, removed: int) -> list[int]:
    """Connected components (as bitsets) of the graph minus the vertex bitset."""
    adj = pc.adjacency
    left = pc.all_mask & ~removed
    comps = []
    while left:
        s = (left & -left).bit_length() - 1
        comp = 1 << s
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                b = 1 << w
                if left & b and not comp & b:
                    comp |= b
                    stack.append(w)
        comps.append(comp)
        left &= ~comp
    return comps


def expansion_specs(pc: PartialCube, max_extra: int | None = None) -> Iterator[tuple[int, int]]:
    """All (v1, v2) bitset pairs defining valid expansions, up to swapping sides.

    ``max_extra`` bounds |v1 & v2|, the number of vertices the expansion adds.
    """
    n = pc.n
    cs = pc.coords
    limit = n if max_extra is None else min(n, max_extra)
    for v0 in range(1, 1 << n):
        if v0.bit_count() > limit:
            continue
        comps = _components_without(pc, v0)
        c = len(comps)
        # first component always goes to side 1: swapping sides only reorients
        for assign in range(1 << max(c - 1, 0)):
            v1 = v2 = v0
            for i, comp in enumerate(comps):
                if i == 0 or not assign >> (i - 1) & 1:
                    v1 |= comp
                else:
                    v2 |= comp
            if is_isometric({cs[v] for v in bits(v1)}) and is_isometric({cs[v] for v in bits(v2)}):
                yield v1, v2


def enumerate_partial_cubes(max_vertices: int, max_seconds: float | None = None) -> Iterator[PartialCube]:
    """Every partial cube on at most ``max_vertices`` vertices, once each.

    Breadth-first by vertex count: every partial cube on n > 1 vertices is
    an expansion of a smaller one (contract any class), so once all
    smaller graphs have been expanded the level is complete and is emitted
    in canonical-key order.
    """
    if max_vertices < 1:
        raise ParameterError("max_vertices must be at least 1")
    start = time.monotonic()
    levels: dict[int, dict[str, PartialCube]] = {n: {} for n in range(1, max_vertices + 1)}
    k1 = PartialCube((0,), 0)
    levels[1][canonical_key(k1)] = k1
    for n in range(1, max_vertices + 1):
        level = levels[n]
        for key in sorted(level):
            g = level[key]
            yield g
            for v1, v2 in expansion_specs(g, max_vertices - n):
                if max_seconds is not None and time.monotonic() - start > max_seconds:
                    raise EnumerationAborted(f"enumeration exceeded {max_seconds} s")
                h = _expand_unchecked(g, frozenset(bits(v1)), frozenset(bits(v2)))
                hk = canonical_key(h)
                tgt = levels[h.n]
                if hk not in tgt:
                    tgt[hk] = h
        del levels[n]


def antipodal_expansions(pc: PartialCube) -> list[PartialCube]:
    """Expansions with v2 = -v1, deduplicated, in canonical-key order."""
    if not is_antipodal(pc):
        raise NotAntipodal("input is not antipodal")
    idx = pc.index
    anti = [idx[c ^ pc.full] for c in pc.coords]
    found: dict[str, PartialCube] = {}
    n = pc.n
    for m in range(1, 1 << n):
        v1 = frozenset(bits(m))
        v2 = frozenset(anti[v] for v in v1)
        try:
            _check_spec(pc, v1, v2)
        except InvalidExpansion:
            continue
        h = _expand_unchecked(pc, v1, v2)
        found.setdefault(canonical_key(h), h)
    return [found[k] for k in sorted(found)]


# minor testing --------------------------------------------------------------


@dataclass(frozen=True)
class MinorWitness:
    restricted_signs: dict = field(default_factory=dict)
    """host class -> '+' or '-' for the restrictions"""
    contracted_classes: frozenset = frozenset()
    vertex_subset: tuple = ()


def apply_witness(host: PartialCube, w: MinorWitness) -> PartialCube:
    """Restrict to every listed halfspace, then contract the listed classes."""
    m = host.all_mask
    for f, s in w.restricted_signs.items():
        m &= host.halfspace_mask(f, s == "-")
    keep = [f for f in bits(cross_mask(host, m)) if f not in w.contracted_classes]
    return PartialCube(tuple(project((host.coords[v] for v in bits(m)), keep)), len(keep))


def _edge_count(cs: list[int], k: int) -> int:
    s = set(cs)
    return sum(1 for c in cs for f in range(k) if c >> f & 1 and c ^ (1 << f) in s)


def pc_minor(host: PartialCube, pattern: PartialCube) -> MinorWitness | None:
    """Find restrictions then contractions of ``host`` giving ``pattern``.

    Seeds are vertex subsets of size at most |pattern|; only their convex
    hulls matter, so distinct hulls are generated breadth-first
    (conv(S + v) = conv(conv(S) + v)) and each is tested once, in the order
    it is first reached.  For a hull crossed by k'' classes every
    (k'' - k')-subset of them is tried for contraction in lexicographic
    order.
    """
    np_, kp = pattern.n, pattern.k
    if np_ > host.n or kp > host.k:
        return None
    pkey = canonical_key(pattern)
    pedges = len(pattern.edges)
    cs = host.coords

    def test(m: int, seed: tuple) -> MinorWitness | None:
        if m.bit_count() < np_:
            return None
        cross = list(bits(cross_mask(host, m)))
        if len(cross) < kp:
            return None
        members = [cs[v] for v in bits(m)]
        for drop in combinations(cross, len(cross) - kp):
            dset = set(drop)
            keep = [f for f in cross if f not in dset]
            proj = project(members, keep)
            if len(proj) != np_ or _edge_count(proj, kp) != pedges:
                continue
            if canonical_key(PartialCube(tuple(proj), kp)) == pkey:
                a, o = 0, 0
                a = host.full
                for c in members:
                    a &= c
                    o |= c
                signs = {}
                for f in range(host.k):
                    if a >> f & 1:
                        signs[f] = "-"
                    elif not o >> f & 1:
                        signs[f] = "+"
                return MinorWitness(signs, frozenset(drop), seed)
        return None

    seen: dict[int, tuple] = {}
    frontier = []
    for v in range(host.n):
        m = 1 << v
        seen[m] = (v,)
        frontier.append(m)
        w = test(m, (v,))
        if w is not None:
            return w
    for _ in range(1, np_):
        nxt = []
        for h in frontier:
            seed = seen[h]
            for v in range(host.n):
                if h >> v & 1:
                    continue
                m = hull_mask(host, h | 1 << v)
                if m in seen:
                    continue
                s = seed + (v,)
                seen[m] = s
                nxt.append(m)
                w = test(m, s)
                if w is not None:
                    return w
        frontier = nxt
    return None


# families ---------------------------------------------------------------------

FAMILIES = (
    "cube",
    "cube_minus_vertex",
    "cube_minus_antipodes",
    "q_minus_star",
    "q_minus_minus_m",
    "path",
    "even_cycle",
)


def _from_deleted(n: int, deleted: set) -> PartialCube:
    return PartialCube(tuple(c for c in range(1 << n) if c not in deleted), n)


def generate(family: str, n: int, m: int | None = None) -> PartialCube:
    """Named graphs; the base vertex v is all-'+', so -v is all-'-'.

    ``path`` and ``even_cycle`` take the number of vertices.  Deleted
    neighbours of v are those at the lowest coordinates.
    """
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    mins = {"cube": 0, "cube_minus_vertex": 2, "cube_minus_antipodes": 3,
            "q_minus_star": 4, "q_minus_minus_m": 4, "path": 1, "even_cycle": 4}
    if n < mins[family]:
        raise ParameterError(f"{family} needs n >= {mins[family]}")
    full = (1 << n) - 1
    if family == "cube":
        return PartialCube(tuple(range(1 << n)), n)
    if family == "cube_minus_vertex":
        return _from_deleted(n, {full})
    if family == "cube_minus_antipodes":
        return _from_deleted(n, {0, full})
    if family == "q_minus_star":
        return _from_deleted(n, {full, 1})
    if family == "q_minus_minus_m":
        if m is None or not 1 <= m <= n:
            raise ParameterError("q_minus_minus_m needs 1 <= m <= n")
        return _from_deleted(n, {0, full} | {1 << i for i in range(m)})
    if family == "path":
        return PartialCube(tuple((1 << i) - 1 for i in range(n)), n - 1)
    if n % 2:
        raise ParameterError("even_cycle needs an even number of vertices")
    h = n // 2
    hf = (1 << h) - 1
    return PartialCube(tuple((1 << i) - 1 for i in range(h)) + tuple(hf ^ ((1 << i) - 1) for i in range(h)), h)


def excluded_family(kind: str, r: int) -> list[PartialCube]:
    if r < 3:
        raise ParameterError("r must be at least 3")
    out: list[PartialCube] = []
    if kind == "Q_minus_r":
        for n in range(4, r + 2):
            out.append(generate("q_minus_star", n))
            for m in range(1, n + 1):
                out.append(generate("q_minus_minus_m", n, m))
        out.append(generate("q_minus_minus_m", r + 2, r + 2))
        out.append(generate("cube", r + 1))
    elif kind == "Q_mm_r":
        for n in range(3, r + 2):
            out.append(generate("cube_minus_antipodes", n))
        out.append(generate("cube", r + 1))
    else:
        raise ParameterError(f"unknown excluded family {kind!r}")
    seen = set()
    uniq = []
    for g in out:
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            uniq.append(g)
    return uniq
