import itertools

import pytest

from cmchordal import (
    Graph,
    IsolatedVertexError,
    NotChordalError,
    NotCohenMacaulayError,
    all_free_vertex_types,
    classify,
    cm_partition,
    cm_type,
    complete_graph,
    disjoint_union,
    is_gorenstein,
    random_chordal,
    socle_computation,
    socle_type_oracle,
)
from cmchordal.bits import to_mask
from cmchordal.chordal import free_vertex_facets, maximal_cliques

from oracles import socle_count_by_definition


def edges_union(k):
    return disjoint_union(*[complete_graph(2)] * k)


class TestPartition:
    def test_p4(self, P4):
        assert cm_partition(P4) == ((1, 2), (3, 4))

    def test_p3(self, P3):
        assert cm_partition(P3) is None

    def test_k3(self, K3):
        assert cm_partition(K3) == ((1, 2, 3),)

    def test_errors(self, C4):
        with pytest.raises(NotChordalError):
            cm_partition(C4)
        with pytest.raises(IsolatedVertexError):
            cm_partition(Graph.from_edges(3, [(1, 2)]))


class TestClassify:
    def test_p4(self, P4):
        r = classify(P4)
        assert r.chordal and r.cm and r.m == 2
        assert r.cm_type == 2 and r.gorenstein is False
        assert r.chosen_free_vertices == (1, 4)
        assert r.cover_size_range == (2, 2)

    def test_p3(self, P3):
        r = classify(P3)
        assert r.chordal and r.cm is False and r.unmixed is False
        assert r.cm_type is None and r.gorenstein is None

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_disjoint_edges(self, k):
        r = classify(edges_union(k))
        assert r.cm and r.gorenstein and r.cm_type == 1

    def test_non_chordal_has_no_verdict(self, C4):
        r = classify(C4)
        assert r.chordal is False and r.unmixed is True
        assert r.cm is None and r.cm_type is None and r.gorenstein is None
        assert r.partition is None

    def test_isolated_vertex_error(self):
        with pytest.raises(IsolatedVertexError):
            classify(Graph.from_edges(4, [(1, 2), (2, 3)]))

    def test_report_keys(self, P4):
        assert set(classify(P4).to_dict()) == {
            "chordal", "cm", "unmixed", "m", "partition", "type",
            "gorenstein", "free_vertices", "cover_size_min", "cover_size_max",
        }

    def test_partition_disjoint_cover(self):
        for seed in range(300):
            g = random_chordal(2 + seed % 8, seed % 4, seed)
            r = classify(g)
            if r.cm:
                flat = sorted(v for f in r.partition for v in f)
                assert flat == list(range(1, g.n + 1))
                assert r.gorenstein == (r.cm_type == 1)


class TestType:
    def test_k2(self):
        assert cm_type(complete_graph(2)) == 1

    def test_k3(self, K3):
        assert cm_type(K3) == 2

    @pytest.mark.parametrize("m", range(2, 7))
    def test_complete_graphs(self, m):
        assert cm_type(complete_graph(m)) == m - 1

    def test_explicit_choice(self, P4, K3):
        assert cm_type(P4, chosen=(1, 4)) == 2
        assert cm_type(K3, chosen=(3,)) == 2
        with pytest.raises(ValueError):
            cm_type(P4, chosen=(2, 4))

    def test_errors(self, P3, C4):
        with pytest.raises(NotCohenMacaulayError):
            cm_type(P3)
        with pytest.raises(NotChordalError):
            cm_type(C4)

    def test_free_choice_independence_two_triangles(self):
        # two triangles joined by the edge 3-4
        g = Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
        assert classify(g).cm
        assert all_free_vertex_types(g) == {cm_type(g)}


class TestGorenstein:
    def test_examples(self, K3, P4):
        assert is_gorenstein(edges_union(2))
        assert not is_gorenstein(K3)
        assert not is_gorenstein(P4)

    def test_not_chordal(self, C4):
        with pytest.raises(NotChordalError):
            is_gorenstein(C4)


class TestSocle:
    def test_k3(self, K3):
        comp = socle_computation(K3)
        assert comp.variables == (2, 3)
        assert comp.basis_count == 3  # 1, x2, x3; x2*x3 lies in the ideal
        assert comp.socle_count == 2

    def test_p4(self, P4):
        assert socle_type_oracle(P4) == 2

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_disjoint_edges(self, k):
        assert socle_type_oracle(edges_union(k)) == 1

    @pytest.mark.parametrize("m", range(2, 7))
    def test_complete_graphs(self, m):
        assert socle_type_oracle(complete_graph(m)) == m - 1

    def test_not_cm(self, P3):
        with pytest.raises(NotCohenMacaulayError):
            socle_type_oracle(P3)

    def test_against_exponent_enumeration(self):
        """Rebuild the ideal from the definition and count the socle without
        assuming standard monomials are squarefree."""
        found = 0
        for seed in range(400):
            g = random_chordal(2 + seed % 6, seed % 3, seed)
            if not classify(g).cm:
                continue
            found += 1
            rep = free_vertex_facets(maximal_cliques(g))
            chosen = [min(fv) for fv in rep.free_vertices]
            variables = [v for v in range(1, g.n + 1) if v not in chosen]
            gens = []
            for facet, i in zip(rep.free_facets, chosen):
                rest = [v for v in facet if v != i]
                for a, b in itertools.combinations_with_replacement(rest, 2):
                    gens.append({a: 2} if a == b else {a: 1, b: 1})
            fms = [to_mask(f) for f in rep.free_facets]
            for u, v in g.edges:
                if not any(to_mask((u, v)) & fm == to_mask((u, v)) for fm in fms):
                    gens.append({u: 1, v: 1})
            assert socle_count_by_definition(variables, gens) == socle_type_oracle(g) == cm_type(g)
        assert found >= 50
