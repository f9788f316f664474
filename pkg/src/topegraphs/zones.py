"""Zone graphs and the iterated zone-graph test."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .canon import canonical_key
from .errors import NotPartialCube
from .graph import Graph, PartialCube, bits, embed_partial_cube
from .metric import cross_mask, hull_mask


@dataclass(frozen=True)
class ZoneResult:
    graph: Graph
    well_embedded: bool
    class_partition: dict = field(default_factory=dict)
    """host class (other than f) on a crossed convex cycle -> block index"""
    edges: tuple = ()
    """the E_f edges, in the order used for the zone-graph vertices"""
    pc: PartialCube | None = None
    """embedding of the zone graph, when it is a partial cube"""
    cycle_classes: dict = field(default_factory=dict)
    """zone edge (i, j) -> frozenset of host classes crossing its convex cycle, minus f"""


def _convex_cycle(pc: PartialCube, m: int) -> int | None:
    """Crossing-class mask if the convex set ``m`` induces a cycle, else None."""
    cross = cross_mask(pc, m)
    if m.bit_count() != 2 * cross.bit_count():
        return None
    adj = pc.adjacency
    for v in bits(m):
        if sum(1 for w in adj[v] if m >> w & 1) != 2:
            return None
    return cross


def zone_graph(pc: PartialCube, f: int) -> ZoneResult:
    pc.check_class(f)
    b = 1 << f
    ef = [(u, v) for u, v in pc.edges if pc.coords[u] ^ pc.coords[v] == b]
    zedges = []
    sets: dict[tuple[int, int], frozenset] = {}
    for i in range(len(ef)):
        for j in range(i + 1, len(ef)):
            m = (1 << ef[i][0]) | (1 << ef[i][1]) | (1 << ef[j][0]) | (1 << ef[j][1])
            cross = _convex_cycle(pc, hull_mask(pc, m))
            if cross is not None:
                zedges.append((i, j))
                sets[(i, j)] = frozenset(bits(cross & ~b))
    g = Graph(len(ef), frozenset(zedges))

    # class sets of crossed convex cycles may meet only if they are equal
    distinct = sorted(set(sets.values()), key=sorted)
    criterion = all(not (a & c) for i, a in enumerate(distinct) for c in distinct[i + 1:])

    zpc = None
    if g.is_connected():
        try:
            zpc = embed_partial_cube(g)
        except NotPartialCube:
            zpc = None

    well = criterion and zpc is not None
    partition: dict[int, int] = {}
    if well:
        # zone classes must correspond one-to-one with the blocks
        block_of_class: dict[int, frozenset] = {}
        for (i, j), s in sets.items():
            zc = (zpc.coords[i] ^ zpc.coords[j]).bit_length() - 1
            if block_of_class.setdefault(zc, s) != s:
                well = False
                break
        if well and len(set(block_of_class.values())) != len(block_of_class):
            well = False
        if well:
            for zc in sorted(block_of_class):
                for h in block_of_class[zc]:
                    partition[h] = zc
    if not well:
        partition = {}
        for bi, s in enumerate(distinct):
            for h in sorted(s):
                partition.setdefault(h, bi)
    return ZoneResult(g, well, partition, tuple(ef), zpc, sets)


_memo: dict[str, bool] = {}
_memo_lock = threading.Lock()


def iterated_zone_check(pc: PartialCube) -> bool:
    """All iterated zone graphs are well-embedded partial cubes."""
    key = canonical_key(pc)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    ok = True
    for f in range(pc.k):
        z = zone_graph(pc, f)
        if not z.well_embedded or not iterated_zone_check(z.pc):
            ok = False
            break
    with _memo_lock:
        _memo[key] = ok
    return ok
