"""Graphs, partial-cube recognition and the hypercube embedding.

A :class:`PartialCube` stores one integer per vertex: bit ``f`` of
``coords[v]`` is set when ``v`` lies in the minus halfspace of the
Theta-class ``f``.  Edges are never stored; they are exactly the pairs of
vertices at Hamming distance one, which is what an isometric embedding
guarantees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadIndex,
    DisconnectedGraph,
    InvalidGraph,
    NonConvexWSet,
    NotBipartite,
    NotPartialCube,
    TooManyClasses,
)

MAX_CLASSES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. vertex_count-1``."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraph("negative vertex count")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidGraph(f"edge {u}-{v} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return len(_bfs(self.adjacency, 0)) == self.vertex_count

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if not seen[s]:
                comp = sorted(_bfs(self.adjacency, s))
                for v in comp:
                    seen[v] = True
                out.append(comp)
        return out


def _bfs(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs shortest-path lengths by one breadth-first search per vertex."""
    n = g.vertex_count
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    rows = []
    for s in range(n):
        d = _bfs(g.adjacency, s)
        rows.append(tuple(d[t] for t in range(n)))
    return tuple(rows)


@dataclass(frozen=True)
class ThetaClass:
    index: int
    minus_halfspace: frozenset
    plus_halfspace: frozenset
    edge_set: frozenset


@dataclass(frozen=True, eq=False)
class PartialCube:
    """A partial cube given by its isometric hypercube coordinates.

    ``coords[v]`` has bit ``f`` set iff vertex ``v`` is on the minus side of
    class ``f``.  Construct through :meth:`from_coords` (validating) or
    :func:`embed_partial_cube`.
    """

    coords: tuple
    k: int

    @classmethod
    def from_coords(cls, coords: Iterable[int], k: int, validate: bool = True) -> "PartialCube":
        coords = tuple(coords)
        pc = cls(coords, k)
        if validate:
            pc.validate()
        return pc

    @classmethod
    def from_strings(cls, rows: Iterable[str], validate: bool = True) -> "PartialCube":
        rows = list(rows)
        if not rows:
            raise InvalidGraph("empty graph")
        k = len(rows[0])
        coords = []
        for r in rows:
            if len(r) != k or set(r) - {"+", "-"}:
                raise InvalidGraph(f"bad coordinate string {r!r}")
            coords.append(sum(1 << f for f, ch in enumerate(r) if ch == "-"))
        return cls.from_coords(coords, k, validate)

    def validate(self) -> None:
        if not self.coords:
            raise InvalidGraph("empty graph")
        if self.k > MAX_CLASSES:
            raise TooManyClasses(f"{self.k} classes exceed the limit of {MAX_CLASSES}")
        if len(set(self.coords)) != len(self.coords):
            raise InvalidGraph("duplicate coordinates")
        full = self.full
        if any(c & ~full for c in self.coords):
            raise InvalidGraph("coordinate outside the ground set")
        both = 0
        allm = full
        for c in self.coords:
            both |= c
            allm &= c
        if both != full or allm != 0:
            raise InvalidGraph("some class has an empty halfspace")
        if not is_isometric(set(self.coords)):
            raise NotPartialCube("coordinates do not induce an isometric subgraph")

    # basic structure -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def vertex_count(self) -> int:
        return len(self.coords)

    @cached_property
    def full(self) -> int:
        return (1 << self.k) - 1

    @cached_property
    def index(self) -> dict:
        return {c: i for i, c in enumerate(self.coords)}

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        idx = self.index
        adj = []
        for c in self.coords:
            nb = []
            for f in range(self.k):
                w = idx.get(c ^ (1 << f))
                if w is not None:
                    nb.append(w)
            adj.append(tuple(sorted(nb)))
        return tuple(adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, w) for u, nb in enumerate(self.adjacency) for w in nb if u < w))

    @cached_property
    def minus_masks(self) -> tuple[int, ...]:
        """Vertex bitset of the minus halfspace of each class."""
        masks = [0] * self.k
        for v, c in enumerate(self.coords):
            for f in bits(c):
                masks[f] |= 1 << v
        return tuple(masks)

    def halfspace_mask(self, f: int, minus: bool) -> int:
        m = self.minus_masks[f]
        return m if minus else self.all_mask ^ m

    def check_class(self, f: int) -> None:
        if not (0 <= f < self.k):
            raise BadIndex(f"class index {f} out of range 0..{self.k - 1}")

    def distance(self, u: int, v: int) -> int:
        return (self.coords[u] ^ self.coords[v]).bit_count()

    def dist(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs distance table (graph distance equals Hamming distance)."""
        cs = self.coords
        return tuple(tuple((a ^ b).bit_count() for b in cs) for a in cs)

    def vector(self, v: int) -> str:
        c = self.coords[v]
        return "".join("-" if c >> f & 1 else "+" for f in range(self.k))

    def graph(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))

    def vertices(self, mask: int) -> frozenset:
        return frozenset(bits(mask))

    def __eq__(self, other):
        if not isinstance(other, PartialCube):
            return NotImplemented
        return self.k == other.k and self.coords == other.coords

    def __hash__(self):
        return hash((self.k, self.coords))

    def __repr__(self):
        return f"PartialCube(n={self.n}, k={self.k})"


def is_isometric(cs: set) -> bool:
    """True iff the coordinate set induces an isometric subgraph of its cube.

    Uses the local criterion: every ordered pair ``u != v`` has a neighbour
    of ``u`` one step closer to ``v``.
    """
    for u in cs:
        for v in cs:
            d = u ^ v
            if not d:
                continue
            while d:
                b = d & -d
                if u ^ b in cs:
                    break
                d ^= b
            else:
                return False
    return True


def theta_classes(pc: PartialCube) -> list[ThetaClass]:
    out = []
    for f in range(pc.k):
        minus = pc.minus_masks[f]
        plus = pc.all_mask ^ minus
        es = frozenset((u, v) for u, v in pc.edges if (pc.coords[u] ^ pc.coords[v]) == 1 << f)
        out.append(ThetaClass(f, pc.vertices(minus), pc.vertices(plus), es))
    return out


def _bipartite(g: Graph) -> bool:
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _is_convex(g: Graph, d, members: set) -> bool:
    for a in members:
        for b in members:
            dab = d[a][b]
            if dab < 2:
                continue
            for c in g.adjacency[a]:
                if d[c][b] == dab - 1 and c not in members:
                    return False
    return True


def _first_nonconvex_edge(g: Graph, d) -> tuple[int, int] | None:
    n = g.vertex_count
    for u, v in g.sorted_edges:
        wuv = {x for x in range(n) if d[x][u] < d[x][v]}
        wvu = {x for x in range(n) if d[x][v] < d[x][u]}
        if not _is_convex(g, d, wuv) or not _is_convex(g, d, wvu):
            return (u, v)
    return None


def embed_partial_cube(g: Graph) -> PartialCube:
    """Djokovic test and canonical embedding.

    Vertex 0 maps to the all-'+' vector; classes are numbered by the first
    edge (in sorted order) that belongs to them.
    Raises :class:`NotBipartite`, :class:`NonConvexWSet` or
    :class:`DisconnectedGraph`.
    """
    n = g.vertex_count
    if n == 0:
        raise InvalidGraph("empty graph")
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if n == 1:
        return PartialCube((0,), 0)
    if not _bipartite(g):
        raise NotBipartite("graph is not bipartite")
    d = distances(g)
    edge_class: dict[tuple[int, int], int] = {}
    plus_sides: list[int] = []
    broken = False
    for u, v in g.sorted_edges:
        if (u, v) in edge_class:
            continue
        side = 0
        for x in range(n):
            if d[x][u] < d[x][v]:
                side |= 1 << x
        if not side & 1:
            side ^= (1 << n) - 1
        f = len(plus_sides)
        plus_sides.append(side)
        for a, b in g.sorted_edges:
            if (side >> a & 1) != (side >> b & 1):
                if (a, b) in edge_class:
                    broken = True
                edge_class[(a, b)] = f
    if not broken:
        coords = []
        for x in range(n):
            c = 0
            for f, side in enumerate(plus_sides):
                if not side >> x & 1:
                    c |= 1 << f
            coords.append(c)
        broken = any(d[x][y] != (coords[x] ^ coords[y]).bit_count() for x in range(n) for y in range(x))
    if broken:
        edge = _first_nonconvex_edge(g, d)
        if edge is None:
            raise NotPartialCube("embedding is not isometric")
        raise NonConvexWSet(edge)
    if len(plus_sides) > MAX_CLASSES:
        raise TooManyClasses(f"{len(plus_sides)} classes exceed the limit of {MAX_CLASSES}")
    return PartialCube(tuple(coords), len(plus_sides))
