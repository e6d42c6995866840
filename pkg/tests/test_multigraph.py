import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treediam import (
    Multigraph,
    PathWitness,
    check_path_witness,
    connected_components,
    contains_path,
    disjoint_paths,
    induced_subgraph,
    longest_path_length,
    longest_path_witness,
    menger_value,
)
from helpers import (
    brute_disjoint_path_systems,
    brute_longest_path,
    brute_small_separators,
    mk,
)


@st.composite
def small_multigraphs(draw, max_n=6, mult_max=2):
    n = draw(st.integers(1, max_n))
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(draw(st.integers(0, mult_max))):
                pairs.append((i, j))
    loops = [v for v in range(n) if draw(st.booleans())]
    return mk(n, pairs, loops)


class TestConstruction:
    def test_endpoints_must_be_declared(self):
        with pytest.raises(ValueError):
            Multigraph([0], {0: (0, 1)})

    def test_duplicate_edge_ids(self):
        with pytest.raises(ValueError):
            Multigraph([0, 1], [(0, (0, 1)), (0, (1, 0))])

    def test_label_for_unknown_edge(self):
        with pytest.raises(ValueError):
            Multigraph([0, 1], {0: (0, 1)}, {1: "x"})

    def test_multiplicity(self):
        g = mk(3, [(0, 1), (0, 1), (1, 2)], loops=[2])
        assert g.multiplicity(0, 1) == 2
        assert g.multiplicity(1, 0) == 2
        assert g.multiplicity(1, 2) == 1
        assert g.multiplicity(0, 2) == 0
        assert g.loops_at(2) == 1


class TestLongestPath:
    def test_path_is_its_own_longest(self):
        assert longest_path_length(mk(4, [(0, 1), (1, 2), (2, 3)])) == 3

    def test_cycle_drops_one_edge(self):
        assert longest_path_length(mk(5, [(i, (i + 1) % 5) for i in range(5)])) == 4

    def test_dipole_has_length_one(self):
        assert longest_path_length(mk(2, [(0, 1)] * 3)) == 1

    def test_null_graph_errors(self):
        with pytest.raises(ValueError):
            longest_path_length(Multigraph([]))

    def test_loops_only(self):
        assert longest_path_length(mk(1, loops=[0])) == 0

    def test_witness_is_checkable(self):
        g = mk(5, [(i, (i + 1) % 5) for i in range(5)])
        w = longest_path_witness(g)
        assert w.length == 4
        check_path_witness(g, w)

    @given(small_multigraphs(max_n=6))
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_force(self, g):
        assert longest_path_length(g) == brute_longest_path(g)

    @given(small_multigraphs(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_invariant_under_loops_and_duplication(self, g):
        base = longest_path_length(g)
        extra = dict(g.edges())
        for i, v in enumerate(sorted(g.vertices, key=str)):
            extra[f"loop{i}"] = (v, v)
        for i, (e, pair) in enumerate(g.edges()):
            extra[f"dup{i}"] = pair
        fat = Multigraph(g.vertices, extra)
        assert longest_path_length(fat) == base


class TestContainsPath:
    def test_star_examples(self):
        star = mk(5, [(0, i) for i in range(1, 5)])
        assert contains_path(star, 2)
        assert not contains_path(star, 3)

    def test_dipole_example(self):
        assert not contains_path(mk(2, [(0, 1)] * 5), 2)

    def test_zero_length_always_present(self):
        assert contains_path(mk(1), 0)

    def test_null_graph_errors(self):
        with pytest.raises(ValueError):
            contains_path(Multigraph([]), 1)

    @given(small_multigraphs(max_n=5), st.integers(0, 5))
    @settings(max_examples=80, deadline=None)
    def test_downward_closed(self, g, m):
        if contains_path(g, m):
            for smaller in range(m + 1):
                assert contains_path(g, smaller)


class TestComponents:
    def test_two_disjoint_edges(self):
        assert len(connected_components(mk(4, [(0, 1), (2, 3)]))) == 2

    def test_cycle_is_one_component(self):
        assert len(connected_components(mk(4, [(i, (i + 1) % 4) for i in range(4)]))) == 1

    def test_loop_does_not_connect(self):
        parts = connected_components(mk(1, loops=[0]))
        assert parts == (frozenset({0}),)


class TestInducedSubgraph:
    def test_identity(self):
        d3 = mk(2, [(0, 1)] * 3)
        assert induced_subgraph(d3, [0, 1]) == d3

    def test_single_vertex_of_dipole(self):
        assert induced_subgraph(mk(2, [(0, 1)] * 3), [0]).edge_count() == 0

    def test_three_consecutive_cycle_vertices(self):
        c4 = mk(4, [(i, (i + 1) % 4) for i in range(4)])
        sub = induced_subgraph(c4, [0, 1, 2])
        assert longest_path_length(sub) == 2
        assert sub.edge_count() == 2

    def test_keeps_loops_and_labels(self):
        g = Multigraph([0, 1], {0: (0, 0), 1: (0, 1)}, {0: "a"})
        sub = induced_subgraph(g, [0])
        assert sub.edge_count() == 1
        assert sub.label(0) == "a"

    def test_rejects_foreign_vertices(self):
        with pytest.raises(ValueError):
            induced_subgraph(mk(2), [0, 5])


class TestDisjointPaths:
    def test_path_single(self):
        cert = disjoint_paths(mk(3, [(0, 1), (1, 2)]), {0}, {2}, 1)
        assert [p.vertices for p in cert.paths] == [(0, 1, 2)]

    def test_star_separator_is_center(self):
        star = mk(5, [(0, i) for i in range(1, 5)])
        cert = disjoint_paths(star, {1, 2}, {3, 4}, 2)
        assert cert.separator == frozenset({0})

    def test_two_disjoint_edges(self):
        cert = disjoint_paths(mk(4, [(0, 1), (2, 3)]), {0, 2}, {1, 3}, 2)
        assert len(cert.paths) == 2

    def test_shared_terminal_is_trivial_path(self):
        cert = disjoint_paths(mk(3, [(0, 1), (1, 2)]), {0, 1}, {1, 2}, 1)
        assert cert.paths[0].vertices == (1,)

    def test_insufficient_terminals(self):
        with pytest.raises(ValueError, match="insufficient terminals"):
            disjoint_paths(mk(3, [(0, 1), (1, 2)]), {0}, {2}, 2)

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            disjoint_paths(mk(2, [(0, 1)]), {0}, {1}, 0)

    @given(small_multigraphs(max_n=6), st.data())
    @settings(max_examples=150, deadline=None)
    def test_certificate_matches_brute_force(self, g, data):
        verts = sorted(g.vertices)
        U = frozenset(data.draw(st.sets(st.sampled_from(verts), min_size=1)))
        V = frozenset(data.draw(st.sets(st.sampled_from(verts), min_size=1)))
        k = data.draw(st.integers(1, min(len(U), len(V), 3)))
        cert = disjoint_paths(g, U, V, k)
        exists = brute_disjoint_path_systems(g, U, V, k)
        if cert.paths is not None:
            assert exists
            assert len(cert.paths) == k
            seen = set()
            for p in cert.paths:
                check_path_witness(g, p)
                assert p.vertices[0] in U and p.vertices[-1] in V
                assert not (set(p.vertices) & seen)
                seen.update(p.vertices)
        else:
            assert not exists
            assert cert.separator in brute_small_separators(g, U, V, k)

    @given(small_multigraphs(max_n=5), st.data())
    @settings(max_examples=60, deadline=None)
    def test_menger_value_is_max_paths(self, g, data):
        verts = sorted(g.vertices)
        U = frozenset(data.draw(st.sets(st.sampled_from(verts), min_size=1)))
        V = frozenset(data.draw(st.sets(st.sampled_from(verts), min_size=1)))
        value = menger_value(g, U, V)
        assert brute_disjoint_path_systems(g, U, V, value)
        assert not brute_disjoint_path_systems(g, U, V, value + 1)


class TestPathWitness:
    def test_rejects_repeated_vertices(self):
        with pytest.raises(ValueError):
            PathWitness((0, 1, 0), (0, 1))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            PathWitness((0, 1), ())

    def test_check_rejects_wrong_endpoints(self):
        g = mk(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            check_path_witness(g, PathWitness((0, 2), (0,)))
