"""Link diagrams from plane graphs: strand structure and DT codes."""

import pytest

from stable_jones.dtcode import (
    EmptyGraph,
    canonical_diagram,
    dt_code,
    medial_component_count,
    medial_link,
    retrace,
)
from stable_jones.graphs import SimpleGraph, enumerate_connected_by_edges
from stable_jones.planar import find_planar_embedding, is_planar


def embed(g: SimpleGraph):
    return find_planar_embedding(g, 0)


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


EDGE = SimpleGraph.from_edges(2, [(0, 1)])
TRIANGLE = cycle_graph(3)
K4 = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
BOWTIE = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
K5_MINUS_E = SimpleGraph.from_edges(
    5,
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
)


class TestMedial:
    @pytest.mark.parametrize(
        "graph,count",
        [
            (EDGE, 1),
            (TRIANGLE, 1),
            (cycle_graph(4), 2),
            (cycle_graph(5), 1),
            (cycle_graph(6), 2),
            (K4, 3),
            (BOWTIE, 1),
            (K5_MINUS_E, 1),
        ],
        ids=["edge", "C3", "C4", "C5", "C6", "K4", "bowtie", "K5-e"],
    )
    def test_component_counts(self, graph, count):
        pg = embed(graph)
        assert medial_component_count(pg) == count
        assert len(medial_link(pg).strands) == count

    def test_no_edges_rejected(self):
        pg = find_planar_embedding(SimpleGraph(1, ()), 0)
        with pytest.raises(EmptyGraph):
            medial_link(pg)

    def test_diagram_structure_over_small_corpus(self):
        for g in enumerate_connected_by_edges(8):
            if g.n < 2 or not is_planar(g):
                continue
            d = medial_link(embed(g))
            assert d.crossing_count == g.e
            visits = {}
            for strand in d.strands:
                assert len(strand) % 2 == 0
                for i, p in enumerate(strand):
                    nxt = strand[(i + 1) % len(strand)]
                    assert p.over != nxt.over  # alternating diagram
                    visits.setdefault(p.crossing, []).append(p.over)
            assert sorted(visits) == list(range(g.e))
            assert all(sorted(v) == [False, True] for v in visits.values())


class TestDTCode:
    def test_trefoil_code(self):
        code = dt_code(medial_link(embed(TRIANGLE)))
        assert code == [[4, 6, 2]]

    def test_five_crossing_knot_code(self):
        code = dt_code(medial_link(embed(cycle_graph(5))))
        assert code == [[6, 8, 10, 2, 4]]

    def test_label_matching_is_perfect(self):
        for g in (TRIANGLE, cycle_graph(4), K4, BOWTIE, K5_MINUS_E):
            code = dt_code(medial_link(embed(g)))
            evens = [abs(x) for seq in code for x in seq]
            n = sum(len(seq) for seq in code)
            assert sorted(evens) == list(range(2, 2 * n + 1, 2))

    def test_round_trip_over_small_corpus(self):
        for g in enumerate_connected_by_edges(8):
            if g.n < 2 or not is_planar(g):
                continue
            d = medial_link(embed(g))
            code = dt_code(d)
            assert canonical_diagram(retrace(code)) == canonical_diagram(d)

    def test_deterministic(self):
        d1 = medial_link(embed(K4))
        d2 = medial_link(embed(K4))
        assert d1 == d2
        assert dt_code(d1) == dt_code(d2)

    def test_retrace_rejects_bad_labels(self):
        with pytest.raises(ValueError):
            retrace([[3]])
        with pytest.raises(ValueError):
            retrace([[2, 2]])

    def test_component_count_stable_under_reembedding(self):
        # The ambiguous-table tiebreak relies on strand counts, so they
        # must not depend on which embedding the search produced.
        from stable_jones.planar import all_planar_embeddings

        for g in (K4, BOWTIE, cycle_graph(6)):
            counts = {
                medial_component_count(pg)
                for root in range(g.n)
                for pg in all_planar_embeddings(g, root)
            }
            assert len(counts) == 1
