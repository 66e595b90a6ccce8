"""Rees cones, Hilbert bases, normality, and bounded power membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
import strategies
from clutterlab import (
    InstanceTooLargeError,
    cone_contains,
    hilbert_basis,
    integral_closure_membership,
    is_normal,
    is_normal_bounded,
    is_ntf_bounded,
    make_clutter,
    monomial_string,
    parse_clutter,
    power_membership,
    rees_cone,
    symbolic_power_membership,
)

TRIANGLE = parse_clutter("v: x1 x2 x3\ne: x1 x2\ne: x1 x3\ne: x2 x3\n")
C4 = parse_clutter("v: x1 x2 x3 x4\ne: x1 x2\ne: x2 x3\ne: x3 x4\ne: x1 x4\n")
TWO_TRIANGLES = parse_clutter(
    "v: x1 x2 x3 x4 x5 x6\n"
    "e: x1 x2\ne: x1 x3\ne: x2 x3\n"
    "e: x4 x5\ne: x4 x6\ne: x5 x6\n"
)
SINGLE = make_clutter(["x1", "x2"], [["x1", "x2"]])


class TestReesCone:
    def test_generators_edges_then_units(self):
        cone = rees_cone(TRIANGLE)
        assert cone.dim == 4
        assert cone.generators[:3] == (
            (1, 1, 0, 1),
            (1, 0, 1, 1),
            (0, 1, 1, 1),
        )
        assert cone.generators[3:] == (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
        )

    def test_contains(self):
        cone = rees_cone(TRIANGLE)
        assert cone_contains(cone, (1, 1, 0, 1))
        assert cone_contains(cone, (2, 1, 1, 2))
        assert not cone_contains(cone, (0, 0, 0, 1))
        assert not cone_contains(cone, (-1, 0, 0, 0))


class TestHilbertBasis:
    def test_single_edge(self):
        hb = hilbert_basis(rees_cone(SINGLE))
        assert set(hb.elements) == {(1, 0, 0), (0, 1, 0), (1, 1, 1)}

    def test_two_disjoint_edges(self):
        c = make_clutter(
            ["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]]
        )
        hb = hilbert_basis(rees_cone(c))
        assert len(hb.elements) == 6

    def test_triangle_needs_no_extra_element(self):
        hb = hilbert_basis(rees_cone(TRIANGLE))
        assert set(hb.elements) == set(rees_cone(TRIANGLE).generators)

    def test_two_triangles_need_the_deep_element(self):
        hb = hilbert_basis(rees_cone(TWO_TRIANGLES), max_edges=12)
        extra = set(hb.elements) - set(rees_cone(TWO_TRIANGLES).generators)
        assert extra == {(1, 1, 1, 1, 1, 1, 3)}

    def test_every_element_in_cone(self):
        for c in (SINGLE, TRIANGLE, C4):
            cone = rees_cone(c)
            for el in hilbert_basis(cone).elements:
                assert cone_contains(cone, el)

    def test_size_guards(self):
        big = make_clutter(
            [f"v{i}" for i in range(9)],
            [[f"v{i}", f"v{i+1}"] for i in range(0, 8, 2)] + [["v8", "v0"]],
        )
        with pytest.raises(InstanceTooLargeError):
            hilbert_basis(rees_cone(big), max_vertices=8)
        with pytest.raises(InstanceTooLargeError):
            hilbert_basis(rees_cone(TWO_TRIANGLES), max_edges=5)

    @settings(max_examples=25, deadline=None)
    @given(strategies.clutters(max_n=3, max_q=3))
    def test_matches_box_oracle(self, c):
        cone = rees_cone(c)
        hb = hilbert_basis(cone)
        box = 4
        assert all(max(el) <= box for el in hb.elements)
        expected = oracles.brute_hilbert_basis(cone, cone_contains, box)
        assert sorted(hb.elements, key=lambda p: (sum(p), p)) == expected


class TestPowerMembership:
    def test_power_zero_always_member(self):
        assert power_membership(TRIANGLE, (0, 0, 0), 0)

    def test_triangle_examples(self):
        assert power_membership(TRIANGLE, (1, 1, 0), 1)
        assert not power_membership(TRIANGLE, (1, 1, 1), 2)
        assert power_membership(TRIANGLE, (0, 2, 2), 2)
        assert power_membership(TRIANGLE, (2, 1, 1), 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            power_membership(TRIANGLE, (1, 1), 1)
        with pytest.raises(ValueError):
            power_membership(TRIANGLE, (1, -1, 0), 1)
        with pytest.raises(ValueError):
            power_membership(TRIANGLE, (1, 1, 1), -1)

    def test_closure_examples(self):
        assert integral_closure_membership(TRIANGLE, (1, 1, 1), 1)
        assert not integral_closure_membership(TRIANGLE, (1, 1, 1), 2)
        assert integral_closure_membership(TRIANGLE, (2, 2, 2), 3)

    def test_symbolic_examples(self):
        # symbolic membership needs every minimal cover to carry weight i
        assert symbolic_power_membership(TRIANGLE, (1, 1, 1), 2)
        assert not symbolic_power_membership(SINGLE, (1, 0), 1)
        assert symbolic_power_membership(SINGLE, (1, 1), 1)

    @settings(max_examples=60, deadline=None)
    @given(
        strategies.clutters(max_n=4, max_q=4),
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
    )
    def test_against_oracles(self, c, seed, power):
        import random

        rng = random.Random(seed)
        a = tuple(rng.randint(0, 3) for _ in range(c.n))
        assert power_membership(c, a, power) == oracles.brute_power_membership(
            c, a, power
        )
        assert symbolic_power_membership(
            c, a, power
        ) == oracles.brute_symbolic_membership(c, a, power)
        assert integral_closure_membership(
            c, a, power
        ) == oracles.brute_closure_membership(c, a, power)

    @settings(max_examples=60, deadline=None)
    @given(
        strategies.clutters(max_n=4, max_q=4),
        st.integers(min_value=0, max_value=3),
    )
    def test_containment_chain(self, c, power):
        # I^i is inside its integral closure, which is inside the symbolic power
        for a in [
            (1,) * c.n,
            (2,) * c.n,
            tuple((i + power) % 3 for i in range(c.n)),
        ]:
            if power_membership(c, a, power):
                assert integral_closure_membership(c, a, power)
            if integral_closure_membership(c, a, power):
                assert symbolic_power_membership(c, a, power)


class TestNormality:
    def test_triangle_normal(self):
        assert is_normal(TRIANGLE).normal

    def test_c4_normal(self):
        assert is_normal(C4).normal

    def test_two_triangles_not_normal(self):
        verdict = is_normal(TWO_TRIANGLES, max_edges=12)
        assert not verdict.normal
        assert verdict.witness == ((1, 1, 1, 1, 1, 1), 3)

    def test_witness_fails_membership(self):
        verdict = is_normal(TWO_TRIANGLES, max_edges=12)
        a, b = verdict.witness
        assert not power_membership(TWO_TRIANGLES, a, b)
        assert cone_contains(rees_cone(TWO_TRIANGLES), a + (b,))

    def test_bounded_normality(self):
        res = is_normal_bounded(TRIANGLE, 3)
        assert res.certified
        assert res.bound == 3
        res = is_normal_bounded(TWO_TRIANGLES, 3)
        assert not res.certified
        assert res.witness == ((1, 1, 1, 1, 1, 1), 3)

    def test_bounded_ntf(self):
        res = is_ntf_bounded(TRIANGLE, 2)
        assert not res.certified
        assert res.witness == ((1, 1, 1), 2)
        assert is_ntf_bounded(C4, 2).certified
        assert is_ntf_bounded(SINGLE, 3).certified

    def test_box_guard(self):
        with pytest.raises(InstanceTooLargeError):
            is_ntf_bounded(TWO_TRIANGLES, 9, max_boxes=100)

    @settings(max_examples=20, deadline=None)
    @given(strategies.uniform_clutters(max_n=4, size=2, max_q=4))
    def test_small_graphs_are_normal(self, c):
        # every graph on at most four vertices has a normal edge ideal;
        # the first counterexample needs two vertex-disjoint odd cycles
        assert is_normal(c).normal


class TestMonomialString:
    def test_plain(self):
        assert monomial_string(TRIANGLE, (2, 0, 1)) == "x1^2*x3"

    def test_with_rees_degree(self):
        assert monomial_string(TRIANGLE, (1, 1, 0), 2) == "x1*x2 t^2"

    def test_unit(self):
        assert monomial_string(TRIANGLE, (0, 0, 0)) == "1"
