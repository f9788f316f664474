import networkx as nx
import pytest

from conftest import q_minus_members
from oracles import well_embedded_brute, zone_graph_brute
from topegraphs.bridge import covectors_of, tope_graph
from topegraphs.canon import canonical_key, isomorphic
from topegraphs.errors import BadIndex, EmptyResult
from topegraphs.graph import bits
from topegraphs.metric import cross_mask
from topegraphs.minors import contract_many, generate, restrict
from topegraphs.signs import system_minor
from topegraphs.zones import iterated_zone_check, zone_graph


def nx_zone(z):
    g = nx.Graph()
    g.add_nodes_from(range(z.graph.vertex_count))
    g.add_edges_from(z.graph.edges)
    return g


def test_cube_zones_are_cubes():
    for n in range(1, 6):
        q = generate("cube", n)
        for f in range(n):
            z = zone_graph(q, f)
            assert z.well_embedded
            assert isomorphic(z.pc, generate("cube", n - 1))


def test_q4_star_zone_contains_c5():
    g = generate("q_minus_star", 4)
    found = False
    for f in range(4):
        z = zone_graph(g, f)
        if 5 in _odd_cycle_lengths(z):
            assert z.pc is None and not z.well_embedded
            found = True
    assert found


def _odd_cycle_lengths(z):
    g = nx_zone(z)
    return {len(c) for c in nx.simple_cycles(g.to_directed()) if len(c) > 2 and len(c) % 2}


def test_q4_members_have_odd_zone():
    want = {"star": 5, 1: 5, 2: 5, 3: 3, 4: 3}
    for m, g in zip(["star", 1, 2, 3, 4], q_minus_members(4)):
        lengths = set()
        for f in range(4):
            lengths |= _odd_cycle_lengths(zone_graph(g, f))
        assert want[m] in lengths, m


def test_q_minus_minus_zone_at_deleted_neighbour():
    for n in (5, 6):
        g = generate("q_minus_minus_m", n, n)
        # vertex 0 and its neighbours 1<<i are deleted, so class 0 is a deleted-neighbour class
        z = zone_graph(g, 0)
        assert z.pc is not None
        assert isomorphic(z.pc, generate("q_minus_minus_m", n - 1, n - 1))


def test_q_minus_zones_descend():
    smaller = {canonical_key(h) for h in q_minus_members(4)}
    for g in q_minus_members(5):
        keys = set()
        for f in range(g.k):
            z = zone_graph(g, f)
            if z.pc is not None:
                keys.add(canonical_key(z.pc))
        assert keys & smaller


def test_zone_graph_bad_index():
    with pytest.raises(BadIndex):
        zone_graph(generate("cube", 2), 2)


def test_c6_zones_are_edges():
    c6 = generate("even_cycle", 6)
    for f in range(3):
        z = zone_graph(c6, f)
        assert z.graph.vertex_count == 2 and len(z.graph.edges) == 1
        assert z.well_embedded
        assert z.class_partition == {h: 0 for h in range(3) if h != f}


def test_tree_zones_are_vertices():
    p = generate("path", 5)
    for f in range(p.k):
        z = zone_graph(p, f)
        assert z.graph.vertex_count == 1 and z.well_embedded
        assert z.pc.k == 0


def test_iterated_examples():
    assert iterated_zone_check(generate("cube", 3))
    assert iterated_zone_check(generate("even_cycle", 6))
    assert iterated_zone_check(generate("path", 6))
    assert not iterated_zone_check(generate("q_minus_star", 4))
    for g in q_minus_members(4) + q_minus_members(5):
        assert not iterated_zone_check(g)


def test_zone_graph_matches_oracle(corpus8, curated):
    for pc in list(corpus8) + curated:
        if pc.n > 16:
            continue
        for f in range(pc.k):
            z = zone_graph(pc, f)
            bz, ef, sets = zone_graph_brute(pc.coords, f)
            assert list(z.edges) == ef
            assert set(z.graph.edges) == set(bz.edges)
            assert z.cycle_classes == sets
            assert z.well_embedded == well_embedded_brute(pc.coords, f)


def test_well_embedded_invariants(corpus8, curated):
    for pc in list(corpus8) + curated:
        for f in range(pc.k):
            z = zone_graph(pc, f)
            if not z.well_embedded:
                continue
            assert z.pc is not None and z.pc.n == z.graph.vertex_count
            blocks = {}
            for h, b in z.class_partition.items():
                blocks.setdefault(b, set()).add(h)
            assert len(blocks) == z.pc.k
            for (i, j), s in z.cycle_classes.items():
                zc = (z.pc.coords[i] ^ z.pc.coords[j]).bit_length() - 1
                assert blocks[zc] == set(s)


def test_com_zones_well_embedded(corpus10):
    # every graph on at most nine vertices is a COM tope graph
    for pc in corpus10:
        if pc.n > 9:
            continue
        for f in range(pc.k):
            assert zone_graph(pc, f).well_embedded


def test_zone_equals_hyperplane_tope_graph(corpus8):
    for pc in corpus8:
        L = covectors_of(pc)
        for e in range(pc.k):
            z = zone_graph(pc, e)
            try:
                H = system_minor(L, "hyperplane", e)
            except EmptyResult:
                assert z.graph.vertex_count == 0
                continue
            assert isomorphic(tope_graph(H).pc, z.pc)


def _reindexed(f, removed):
    return f - sum(1 for h in removed if h < f)


def test_contraction_commutes_with_zones(corpus8, curated):
    for pc in list(corpus8) + curated:
        for f in range(pc.k):
            z = zone_graph(pc, f)
            if not z.well_embedded:
                continue
            blocks = {}
            for h, b in z.class_partition.items():
                blocks.setdefault(b, []).append(h)
            for b, A in blocks.items():
                lhs = zone_graph(contract_many(pc, A), _reindexed(f, A))
                assert isomorphic(lhs.pc, contract_many(z.pc, [b]))


def test_restriction_commutes_with_zones(corpus8, curated):
    for pc in list(corpus8) + curated:
        for f in range(pc.k):
            z = zone_graph(pc, f)
            if not z.well_embedded:
                continue
            for g, b in z.class_partition.items():
                for s in "+-":
                    half = pc.halfspace_mask(g, s == "-")
                    keep = list(bits(cross_mask(pc, half)))
                    if f not in keep:
                        continue
                    lhs = zone_graph(restrict(pc, g, s), keep.index(f))
                    options = [restrict(z.pc, b, t) for t in "+-"]
                    assert any(isomorphic(lhs.pc, o) for o in options)
