import pytest

from core.bounds import c4free_bound_check, equatorial_bound_check
from core.catalog import cage_catalog, moore_catalog, petersen_graph
from core.constructions import (
    ConstructionError,
    ConstructionSpec,
    InvalidJ,
    NotEquatorial,
    NoSingletonPart,
    UnsupportedDelta,
    brown_chain_gadget,
    build_construction,
    c4free_chain,
    chain_copies,
    construction_metadata,
    expected_invariants,
    gadget11,
    gadget11_chain,
    layered_graph,
    multiply_equatorial,
    quotient_to_moore,
    splice_chain,
    splice_edge,
)
from core.graph import (
    all_pairs_distances,
    are_isomorphic,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_profile,
    girth,
    is_c4_free,
    wheel_graph,
)
from core.isometry import equator
from core.structure import is_equatorial


def _regular(g, delta):
    profile = degree_profile(g)
    return profile.is_regular and profile.min_degree == delta


class TestSpliceChain:
    def test_edge_choice(self, petersen):
        assert splice_edge(petersen) == (0, 1)

    @pytest.mark.parametrize("j", [3, 4])
    def test_petersen_chain(self, j):
        g = splice_chain(moore_catalog(3, 5), j)
        assert g.n == 10 * j
        assert _regular(g, 3)
        assert girth(g) == 5
        result = equator(g)
        assert result.q == 5 * j
        assert equatorial_bound_check(g.n, 3, 5, result.q).tight

    @pytest.mark.slow
    def test_petersen_chain_five_copies(self):
        g = splice_chain(moore_catalog(3, 5), 5)
        assert equator(g).q == 25
        assert equatorial_bound_check(g.n, 3, 5, 25).tight

    def test_girth_three_and_four(self):
        g3 = splice_chain(moore_catalog(4, 3), 4)
        assert g3.n == 20 and _regular(g3, 4) and girth(g3) == 3
        assert equator(g3).q == 12
        g4 = splice_chain(moore_catalog(3, 4), 4)
        assert g4.n == 24 and _regular(g4, 3) and girth(g4) == 4
        assert equator(g4).q == 16

    def test_cage_seed_keeps_degree_and_girth(self):
        g = splice_chain(cage_catalog(4, 5), 3)
        assert g.n == 57
        assert _regular(g, 4)
        assert girth(g) == 5

    @pytest.mark.slow
    def test_cage_seed_equator(self):
        g = splice_chain(cage_catalog(4, 5), 3)
        assert equator(g).q == 15

    def test_hoffman_singleton_chain_under_cap(self):
        g = splice_chain(moore_catalog(7, 5), 3)
        assert g.n == 150
        assert _regular(g, 7)
        assert girth(g) == 5
        result = equator(g, cap=15)
        assert result.q == 15
        assert equatorial_bound_check(g.n, 7, 5, result.q).tight

    def test_invalid_j(self, petersen):
        with pytest.raises(InvalidJ):
            splice_chain(petersen, 2)

    def test_chain_links(self):
        g = chain_copies(cycle_graph(4), (0, 1), 3)
        # three paths 0-3-2-1 joined into a 12-cycle
        assert g.n == 12 and _regular(g, 2)
        assert girth(g) == 12


class TestC4FreeChains:
    def test_gadget(self):
        h, y, z = brown_chain_gadget(3)
        assert h.n == 20
        dm = all_pairs_distances(h)
        assert dm(y, z) == 4
        assert is_c4_free(h)

    def test_brown_chain_shape(self):
        g = c4free_chain(3, 3)
        assert g.n == 60
        assert degree_profile(g).min_degree == 3
        assert is_c4_free(g)

    @pytest.mark.slow
    def test_brown_chain_equator(self):
        g = c4free_chain(3, 3)
        assert equator(g).q == 15
        assert g.n == (15 // 5) * (3 * 3 + 3 * 3 + 2)

    def test_unsupported_delta(self):
        with pytest.raises(UnsupportedDelta):
            c4free_chain(5, 3)

    def test_brown_chain_invalid_j(self):
        with pytest.raises(InvalidJ):
            c4free_chain(3, 2)

    def test_gadget11(self):
        h = gadget11()
        assert h.n == 11 and h.m == 16
        assert is_c4_free(h)

    def test_gadget11_chain(self):
        g = gadget11_chain(3)
        assert g.n == 33
        assert degree_profile(g).min_degree == 3
        assert is_c4_free(g)
        assert equator(g).q == 18
        report = c4free_bound_check(33, 3, 18)
        assert report.satisfied and not report.tight

    def test_gadget11_invalid_j(self):
        with pytest.raises(InvalidJ):
            gadget11_chain(2)


class TestLayered:
    def test_girth_three(self):
        g = layered_graph(3, (1, 3, 1), 12)
        assert g.n == 20 and _regular(g, 4)
        assert are_isomorphic(g, splice_chain(moore_catalog(4, 3), 4))

    def test_girth_four(self):
        g = layered_graph(4, (1, 2, 2, 1), 12)
        assert g.n == 18 and _regular(g, 3) and girth(g) == 4
        assert equator(g).q == 12

    def test_bad_pattern(self):
        with pytest.raises(ConstructionError):
            layered_graph(5, (1, 2), 10)
        with pytest.raises(ConstructionError):
            layered_graph(3, (1, 3, 1), 10)


class TestMultiplyQuotient:
    def test_quotient_recovers_petersen(self, f3_5_20):
        assert are_isomorphic(quotient_to_moore(f3_5_20), petersen_graph())

    def test_quotient_recovers_k33(self, k33_chain):
        assert are_isomorphic(quotient_to_moore(k33_chain), complete_bipartite_graph(3, 3))

    def test_quotient_of_girth_three(self):
        g = layered_graph(3, (1, 3, 1), 12)
        assert are_isomorphic(quotient_to_moore(g), complete_graph(5))

    def test_quotient_needs_a_singleton_part(self):
        with pytest.raises(NoSingletonPart):
            quotient_to_moore(layered_graph(3, (2, 2, 2), 12))

    def test_multiply_k33_chain_by_three(self):
        g = multiply_equatorial(splice_chain(moore_catalog(3, 4), 3), 3)
        assert g.n == 54 and _regular(g, 3) and girth(g) == 4

    @pytest.mark.slow
    def test_multiplied_k33_chain_is_equatorial(self):
        g = multiply_equatorial(splice_chain(moore_catalog(3, 4), 3), 3)
        assert equator(g).q == 36
        assert is_equatorial(g)
        assert are_isomorphic(quotient_to_moore(g), complete_bipartite_graph(3, 3))

    def test_multiply_shape(self, f3_5_20):
        g = multiply_equatorial(f3_5_20, 2)
        assert g.n == 80 and _regular(g, 3) and girth(g) == 5

    @pytest.mark.slow
    def test_round_trip(self, f3_5_20, k33_chain):
        doubled = multiply_equatorial(f3_5_20, 2)
        assert equator(doubled).q == 40
        assert are_isomorphic(quotient_to_moore(doubled), petersen_graph())
        assert are_isomorphic(
            quotient_to_moore(multiply_equatorial(k33_chain, 2)), complete_bipartite_graph(3, 3)
        )

    def test_rejects_non_equatorial(self):
        with pytest.raises(NotEquatorial):
            multiply_equatorial(wheel_graph(5), 2)
        with pytest.raises(NotEquatorial):
            quotient_to_moore(petersen_graph())

    def test_multiply_invalid_j(self, f3_5_20):
        with pytest.raises(InvalidJ):
            multiply_equatorial(f3_5_20, 1)


class TestDispatch:
    def test_build_and_expect(self):
        cases = [
            ConstructionSpec(family="splice", delta=3, g=5, j=4),
            ConstructionSpec(family="brown", t=4),
            ConstructionSpec(family="incidence", t=3),
            ConstructionSpec(family="gadget11", j=3),
            ConstructionSpec(family="layered", g=4, sizes=(2, 2, 2, 2), q=12),
            ConstructionSpec(family="catalog", delta=6, g=5, seed="cage"),
        ]
        for spec in cases:
            g = build_construction(spec)
            expected = expected_invariants(spec)
            assert g.n == expected["n"], spec
            assert degree_profile(g).min_degree == expected["delta"], spec

    def test_brown_order(self):
        assert build_construction(ConstructionSpec(family="brown", t=4)).n == 21

    def test_missing_parameters(self):
        with pytest.raises(ConstructionError):
            build_construction(ConstructionSpec(family="splice", delta=3, g=5))
        with pytest.raises(ConstructionError):
            build_construction(ConstructionSpec(family="nope"))
        with pytest.raises(ConstructionError):
            build_construction(ConstructionSpec(family="layered", g=3, q=12))

    def test_gadget_invalid_j_through_dispatch(self):
        with pytest.raises(InvalidJ):
            build_construction(ConstructionSpec(family="gadget11", j=2))

    def test_quotient_with_default_base(self):
        g = build_construction(ConstructionSpec(family="quotient", delta=3, g=4))
        assert are_isomorphic(g, complete_bipartite_graph(3, 3))

    def test_metadata(self):
        meta = construction_metadata(ConstructionSpec(family="splice", delta=3, g=5, j=4))
        assert meta["family"] == "splice"
        assert meta["parameters"] == {"family": "splice", "delta": 3, "g": 5, "j": 4, "seed": "moore", "base_j": 4}
        assert meta["generator"].startswith("equator-workbench")
