"""Abstract graph layer: codes, connectivity, factorization, enumeration."""

from __future__ import annotations

import itertools

import pytest

from stable_jones.graphs import (
    SimpleGraph,
    are_isomorphic,
    automorphism_count,
    blocks,
    bridges,
    canonical_code,
    canonical_form,
    connected_components,
    connected_sum_factors,
    cut_vertices,
    enumerate_bridgeless_by_edges,
    enumerate_connected_by_edges,
    enumerate_graphs,
    format_edge_list,
    from_graph6,
    is_connected,
    is_irreducible,
    is_two_edge_connected,
    parse_edge_list,
    reduce_multigraph,
    to_graph6,
)


def G(n: int, *pairs: tuple[int, int]) -> SimpleGraph:
    return SimpleGraph.from_edges(n, pairs)


TRIANGLE = G(3, (0, 1), (1, 2), (0, 2))
C4 = G(4, (0, 1), (1, 2), (2, 3), (0, 3))
P4 = G(4, (0, 1), (1, 2), (2, 3))
K4 = G(4, (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
DIAMOND = G(4, (0, 1), (0, 2), (1, 2), (1, 3), (2, 3))
BOWTIE = G(5, (0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4))


def test_simple_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 2)])


def test_reduce_multigraph_drops_loops_and_parallels():
    g = reduce_multigraph(4, [(0, 0), (0, 1), (1, 0), (1, 2), (1, 2), (3, 3)])
    assert g == G(4, (0, 1), (1, 2))


def test_edge_list_round_trip():
    text = format_edge_list(K4)
    n, pairs = parse_edge_list(text)
    assert SimpleGraph.from_edges(n, pairs) == K4
    with pytest.raises(ValueError):
        parse_edge_list("3\n0 1\n")
    n, pairs = parse_edge_list("n 3\n0 1\n0 1\n2 2\n")
    assert reduce_multigraph(n, pairs) == G(3, (0, 1))


def test_graph6_known_value_and_round_trip():
    assert to_graph6(K4) == "C~"
    assert from_graph6("C~") == K4
    for g in (TRIANGLE, C4, P4, DIAMOND, BOWTIE):
        assert from_graph6(to_graph6(g)) == g


def test_canonical_code_relabeling_invariance():
    for perm in itertools.permutations(range(4)):
        assert canonical_code(C4.relabel(list(perm))) == canonical_code(C4)
    assert canonical_code(C4) != canonical_code(P4)
    assert canonical_code(C4) != canonical_code(DIAMOND)


def test_canonical_form_is_a_relabeling():
    h, perm = canonical_form(BOWTIE)
    assert sorted(perm) == list(range(5))
    assert are_isomorphic(h, BOWTIE)
    assert canonical_code(h) == canonical_code(BOWTIE)


def _brute_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.e != h.e:
        return False
    hset = set(h.edges)
    for perm in itertools.permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in hset for u, v in g.edges):
            return True
    return False


def test_codes_agree_with_brute_force_on_four_vertices():
    all_labeled = []
    pairs = list(itertools.combinations(range(4), 2))
    for bits in itertools.product((0, 1), repeat=6):
        all_labeled.append(G(4, *(p for p, b in zip(pairs, bits) if b)))
    codes = [canonical_code(g) for g in all_labeled]
    assert len(set(codes)) == 11
    for i, g in enumerate(all_labeled):
        for j, h in enumerate(all_labeled):
            assert (codes[i] == codes[j]) == _brute_isomorphic(g, h)


def _brute_aut(g: SimpleGraph) -> int:
    eset = set(g.edges)
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in eset for u, v in g.edges):
            count += 1
    return count


def test_automorphism_counts():
    assert automorphism_count(TRIANGLE) == 6
    assert automorphism_count(C4) == 8
    assert automorphism_count(K4) == 24
    assert automorphism_count(G(3, (0, 1))) == 2
    for g in (P4, DIAMOND, BOWTIE, G(5, (0, 1), (1, 2), (2, 3), (3, 4), (0, 4))):
        assert automorphism_count(g) == _brute_aut(g)


def test_connectivity_basics():
    assert is_connected(TRIANGLE)
    assert not is_connected(G(4, (0, 1), (2, 3)))
    assert connected_components(G(5, (0, 1), (3, 4))) == [[0, 1], [2], [3, 4]]
    assert sorted(bridges(P4)) == [(0, 1), (1, 2), (2, 3)]
    assert bridges(C4) == []
    assert cut_vertices(BOWTIE) == [2]
    assert cut_vertices(C4) == []


def test_two_edge_connected():
    assert is_two_edge_connected(TRIANGLE)
    assert is_two_edge_connected(C4)
    assert is_two_edge_connected(BOWTIE)
    assert not is_two_edge_connected(P4)
    assert not is_two_edge_connected(G(4, (0, 1), (2, 3)))
    assert not is_two_edge_connected(SimpleGraph(2, ()))


def test_blocks_of_bowtie():
    blks = blocks(BOWTIE)
    assert sorted(len(b) for b in blks) == [3, 3]


def test_connected_sum_factors():
    tri_code = canonical_code(TRIANGLE)
    for g in (BOWTIE, DIAMOND):
        factors = connected_sum_factors(g)
        assert [canonical_code(f) for f in factors] == [tri_code, tri_code]
    assert connected_sum_factors(TRIANGLE) == [TRIANGLE]
    assert connected_sum_factors(C4) == [C4]
    assert connected_sum_factors(K4) == [K4]
    # two squares glued over an edge split back into two squares
    domino = G(6, (0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (2, 5))
    factors = connected_sum_factors(domino)
    assert [canonical_code(f) for f in factors] == [canonical_code(C4)] * 2


def test_connected_sum_factors_relabeling_invariant():
    perm = [3, 0, 4, 1, 2]
    factors = connected_sum_factors(BOWTIE.relabel(perm))
    assert [canonical_code(f) for f in factors] == [canonical_code(TRIANGLE)] * 2


def test_is_irreducible():
    for g in (TRIANGLE, C4, K4):
        assert is_irreducible(g)
    for g in (DIAMOND, BOWTIE, P4):
        assert not is_irreducible(g)


def test_enumerate_graphs_counts():
    # classical counts: all graphs 1,2,4,11,34 and connected 1,1,2,6,21,112
    assert len(enumerate_graphs(3, None, False)) == 4
    assert len(enumerate_graphs(4, None, False)) == 11
    assert len(enumerate_graphs(5, None, False)) == 34
    assert len(enumerate_graphs(4, None, True)) == 6
    assert len(enumerate_graphs(5, None, True)) == 21
    assert len(enumerate_graphs(6, None, True)) == 112


def test_enumerate_graphs_matches_labeled_brute_force():
    pairs = list(itertools.combinations(range(5), 2))
    seen = set()
    n_connected = 0
    for bits in itertools.product((0, 1), repeat=10):
        g = G(5, *(p for p, b in zip(pairs, bits) if b))
        seen.add(canonical_code(g))
    assert len(seen) == 34
    assert {canonical_code(g) for g in enumerate_graphs(5, None, False)} == seen


def test_enumerate_connected_by_edges():
    graphs = enumerate_connected_by_edges(4)
    codes = [canonical_code(g) for g in graphs]
    assert len(codes) == len(set(codes))
    assert all(1 <= g.e <= 4 and is_connected(g) for g in graphs)
    # brute-force the same classes from labeled graphs on <= 5 vertices
    expect = set()
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in itertools.product((0, 1), repeat=len(pairs)):
            es = [p for p, b in zip(pairs, bits) if b]
            if not (1 <= len(es) <= 4):
                continue
            g = G(n, *es)
            # skip graphs with isolated vertices: every vertex counts here
            if any(d == 0 for d in g.degrees()) or not is_connected(g):
                continue
            expect.add(canonical_code(g))
    assert set(codes) == expect


def test_enumerate_bridgeless_by_edges_matches_filtered_route():
    fast = enumerate_bridgeless_by_edges(7)
    slow = [g for g in enumerate_connected_by_edges(7)
            if g.e >= 3 and not bridges(g)]
    assert sorted(canonical_code(g) for g in fast) == sorted(
        canonical_code(g) for g in slow)
    assert len(fast) == 17


def test_enumerate_bridgeless_by_edges_structure():
    graphs = enumerate_bridgeless_by_edges(8)
    codes = [canonical_code(g) for g in graphs]
    assert len(codes) == len(set(codes))
    for g in graphs:
        assert 3 <= g.e <= 8
        assert g.n <= g.e  # bridgeless means cyclic
        assert is_connected(g) and not bridges(g)
    assert [g.e for g in graphs] == sorted(g.e for g in graphs)
