import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import scramble
from oracles import connected_bipartite_graphs, is_partial_cube_winkler, isomorphic_by_permutation, nx_from_coords
from topegraphs.canon import canonical_key, isomorphic
from topegraphs.errors import (
    DisconnectedGraph,
    InvalidGraph,
    NonConvexWSet,
    NotBipartite,
    NotPartialCube,
    TooManyClasses,
)
from topegraphs.graph import Graph, PartialCube, distances, embed_partial_cube, theta_classes
from topegraphs.minors import generate


def cycle(n):
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def from_nx(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), frozenset((pos[u], pos[v]) for u, v in g.edges))


def test_distances_small():
    assert distances(Graph(2, frozenset({(0, 1)})))[0][1] == 1
    assert distances(cycle(6))[0][3] == 3
    assert distances(path(4))[0][3] == 3


def test_distances_disconnected():
    with pytest.raises(DisconnectedGraph):
        distances(Graph(3, frozenset({(0, 1)})))


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        Graph(2, frozenset({(1, 1)}))
    with pytest.raises(InvalidGraph):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(InvalidGraph):
        embed_partial_cube(Graph(0))
    assert Graph(2, frozenset({(1, 0)})).edges == {(0, 1)}


def test_single_vertex():
    pc = embed_partial_cube(Graph(1))
    assert pc.k == 0 and pc.coords == (0,)


def test_embed_c6():
    pc = embed_partial_cube(cycle(6))
    assert pc.k == 3
    assert pc.coords[0] == 0


def test_embed_failures():
    with pytest.raises(NotBipartite):
        embed_partial_cube(cycle(5))
    k23 = Graph(5, frozenset((a, b) for a in (0, 1) for b in (2, 3, 4)))
    with pytest.raises(NonConvexWSet) as info:
        embed_partial_cube(k23)
    assert info.value.reason == "NonConvexWSet"
    k4 = Graph(4, frozenset(combinations(range(4), 2)))
    with pytest.raises(NotBipartite):
        embed_partial_cube(k4)
    with pytest.raises(DisconnectedGraph):
        embed_partial_cube(Graph(4, frozenset({(0, 1), (2, 3)})))


def test_too_many_classes():
    with pytest.raises(TooManyClasses):
        embed_partial_cube(path(66))
    with pytest.raises(TooManyClasses):
        PartialCube.from_coords([(1 << i) - 1 for i in range(66)], 65)


def test_from_coords_validation():
    with pytest.raises(NotPartialCube):
        PartialCube.from_coords([0, 3], 2)  # two vertices at distance 2
    with pytest.raises(InvalidGraph):
        PartialCube.from_coords([0, 1], 2)  # class 1 never '-'
    with pytest.raises(InvalidGraph):
        PartialCube.from_coords([0, 0, 1], 1)


def test_theta_classes_examples():
    q3 = generate("cube", 3)
    tcs = theta_classes(q3)
    assert len(tcs) == 3
    for t in tcs:
        assert len(t.edge_set) == 4
        assert {u for e in t.edge_set for u in e} == set(range(8))
    p3 = embed_partial_cube(path(3))
    assert [len(t.edge_set) for t in theta_classes(p3)] == [1, 1]
    c6 = embed_partial_cube(cycle(6))
    assert [len(t.edge_set) for t in theta_classes(c6)] == [2, 2, 2]


def test_embedding_invariants(corpus8):
    for pc in corpus8:
        g = pc.graph()
        d = distances(g)
        for u in range(pc.n):
            for v in range(pc.n):
                assert d[u][v] == pc.distance(u, v)
        for t in theta_classes(pc):
            assert t.minus_halfspace | t.plus_halfspace == frozenset(range(pc.n))
            assert t.minus_halfspace and t.plus_halfspace
            ends = [x for e in t.edge_set for x in e]
            assert len(ends) == len(set(ends))  # matching
            for u, v in t.edge_set:
                # W(u,v) is the side of u
                w = {x for x in range(pc.n) if d[x][u] < d[x][v]}
                side = t.minus_halfspace if u in t.minus_halfspace else t.plus_halfspace
                assert w == side


def test_embed_roundtrip(corpus8):
    for pc in corpus8:
        again = embed_partial_cube(pc.graph())
        assert again.n == pc.n and again.k == pc.k
        assert again.coords[0] == 0
        assert isomorphic(again, pc)


def test_embed_matches_winkler_oracle():
    # every connected bipartite graph on up to 7 vertices, plus non-bipartite ones
    from networkx.generators.atlas import graph_atlas_g

    for g in graph_atlas_g():
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        expected = is_partial_cube_winkler(g)
        try:
            embed_partial_cube(from_nx(g))
            got = True
        except NotPartialCube:
            got = False
        assert got == expected, list(g.edges)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_embed_random_graphs(n, data):
    edges = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    if not nx.is_connected(g):
        return
    try:
        pc = embed_partial_cube(from_nx(g))
    except NotPartialCube:
        assert not is_partial_cube_winkler(g)
        return
    assert is_partial_cube_winkler(g)
    assert nx.is_isomorphic(nx_from_coords(pc.coords), g)


def test_canonical_key_examples():
    q2 = generate("cube", 2)
    c4 = embed_partial_cube(Graph(4, frozenset({(0, 2), (2, 1), (1, 3), (3, 0)})))
    assert canonical_key(q2) == canonical_key(c4)
    assert canonical_key(generate("path", 3)) != canonical_key(generate("cube", 1))
    c6 = generate("even_cycle", 6)
    q3mm = generate("cube_minus_antipodes", 3)
    assert canonical_key(c6) == canonical_key(q3mm)
    assert isomorphic_by_permutation(c6.coords, q3mm.coords, 3)
    assert isomorphic(q2, c4)
    assert not isomorphic(generate("cube_minus_vertex", 3), c6)
    g = generate("q_minus_minus_m", 4, 4)
    rng = random.Random(7)
    assert isomorphic(g, scramble(g, rng))


def test_canonical_key_symmetry_invariance(corpus8):
    rng = random.Random(2024)
    extra = [generate("q_minus_star", 4), generate("q_minus_minus_m", 5, 2), generate("cube", 5)]
    for pc in list(corpus8) + extra:
        key = canonical_key(pc)
        for _ in range(10):
            assert canonical_key(scramble(pc, rng)) == key


def test_canonical_key_separates_corpus(corpus8):
    # enumeration dedups by key; an independent isomorphism test must agree
    by_n = {}
    for pc in corpus8:
        by_n.setdefault((pc.n, len(pc.edges)), []).append(pc)
    for group in by_n.values():
        for a, b in combinations(group, 2):
            assert not nx.is_isomorphic(nx_from_coords(a.coords), nx_from_coords(b.coords))


def test_isomorphic_agrees_with_networkx():
    rng = random.Random(5)
    gs = [
        generate("q_minus_star", 4),
        generate("q_minus_minus_m", 4, 1),
        generate("q_minus_minus_m", 4, 2),
        generate("cube_minus_vertex", 4),
        generate("even_cycle", 8),
        generate("path", 8),
    ]
    for a, b in combinations(gs, 2):
        assert isomorphic(a, b) == nx.is_isomorphic(nx_from_coords(a.coords), nx_from_coords(b.coords))
    for a in gs:
        assert isomorphic(a, scramble(a, rng))


def test_partial_cube_counts_match_atlas(corpus8):
    counts = {}
    for pc in corpus8:
        counts[pc.n] = counts.get(pc.n, 0) + 1
    for n in range(1, 8):
        brute = sum(1 for g in connected_bipartite_graphs(n) if is_partial_cube_winkler(g))
        assert counts[n] == brute, n
