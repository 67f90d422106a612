import math

import pytest

from tropcurve import (
    BadDegreeError,
    InvalidPathError,
    count_both,
    count_gw,
    count_welschinger,
    enumerate_paths,
    path_census,
    path_domain,
    path_multiplicity,
    side_multiplicity,
)
from tropcurve.paths import (
    KIND_COMPLEX,
    KIND_WELSCHINGER,
    ORDER_ROWMAJOR,
    ORDER_XEY,
    SIDE_MINUS,
    SIDE_PLUS,
    _engine,
)


def census_formula(d):
    points = (d + 1) * (d + 2) // 2
    return math.comb(points - 2, 3 * d - 2)


class TestDomain:
    def test_xey_degree_one(self):
        dom = path_domain(1)
        assert dom.points == ((0, 1), (0, 0), (1, 0))
        assert dom.p == (0, 1)
        assert dom.q == (1, 0)

    def test_xey_degree_two(self):
        dom = path_domain(2)
        assert dom.points == ((0, 2), (0, 1), (0, 0), (1, 1), (1, 0), (2, 0))

    def test_rowmajor_degree_two(self):
        dom = path_domain(2, ORDER_ROWMAJOR)
        assert dom.points == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0))
        assert dom.p == (0, 0)
        assert dom.q == (2, 0)

    def test_xey_arcs(self):
        dom = path_domain(2)
        assert dom.left_arc == ((0, 2), (1, 1), (2, 0))
        assert dom.right_arc == ((0, 2), (0, 1), (0, 0), (1, 0), (2, 0))

    def test_rowmajor_arcs(self):
        dom = path_domain(1, ORDER_ROWMAJOR)
        assert dom.left_arc == ((0, 0), (0, 1), (1, 0))
        assert dom.right_arc == ((0, 0), (1, 0))

    def test_bad_degree(self):
        with pytest.raises(BadDegreeError):
            path_domain(0)
        with pytest.raises(BadDegreeError):
            path_domain(-3)

    def test_unknown_order(self):
        with pytest.raises(ValueError):
            path_domain(2, "diagonal")


class TestEnumeration:
    def test_degree_one_unique_path(self):
        paths = list(enumerate_paths(path_domain(1)))
        assert paths == [((0, 1), (0, 0), (1, 0))]

    def test_degree_two_unique_path(self):
        dom = path_domain(2)
        paths = list(enumerate_paths(dom))
        assert paths == [dom.points]

    def test_degree_three_census(self):
        assert len(list(enumerate_paths(path_domain(3)))) == 8

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_census_matches_binomial(self, d):
        assert path_census(path_domain(d)) == census_formula(d)

    def test_deterministic_order(self):
        first = list(enumerate_paths(path_domain(3)))
        second = list(enumerate_paths(path_domain(3)))
        assert first == second


class TestSideMultiplicity:
    def test_degree_one_hand_trace(self):
        dom = path_domain(1)
        path = ((0, 1), (0, 0), (1, 0))
        # one division: unit corner triangle, reflected point (1,1) outside
        assert side_multiplicity(path, dom, SIDE_PLUS, KIND_COMPLEX) == 1
        # the path IS the right boundary arc
        assert side_multiplicity(path, dom, SIDE_MINUS, KIND_COMPLEX) == 1

    def test_degree_two_hand_trace(self):
        dom = path_domain(2)
        path = dom.points
        assert side_multiplicity(path, dom, SIDE_PLUS, KIND_COMPLEX) == 1
        assert side_multiplicity(path, dom, SIDE_MINUS, KIND_COMPLEX) == 1
        assert side_multiplicity(path, dom, SIDE_PLUS, KIND_WELSCHINGER) == 1
        assert side_multiplicity(path, dom, SIDE_MINUS, KIND_WELSCHINGER) == 1

    def test_dead_side_gives_zero(self):
        dom = path_domain(3)
        dead = [
            p
            for p in enumerate_paths(dom)
            if side_multiplicity(p, dom, SIDE_PLUS, KIND_COMPLEX) == 0
            or side_multiplicity(p, dom, SIDE_MINUS, KIND_COMPLEX) == 0
        ]
        assert dead
        for path in dead:
            m = path_multiplicity(path, dom)
            assert m.complex_total == 0
            assert m.welschinger_total == 0

    def test_degree_three_multiplicity_profile(self):
        # five contributing paths with weights 2, 1, 4, 3, 2
        dom = path_domain(3)
        mus = [path_multiplicity(p, dom).complex_total for p in enumerate_paths(dom)]
        assert sorted(m for m in mus if m) == [1, 2, 2, 3, 4]

    def test_bad_side_and_kind(self):
        dom = path_domain(1)
        path = ((0, 1), (0, 0), (1, 0))
        with pytest.raises(ValueError):
            side_multiplicity(path, dom, "north", KIND_COMPLEX)
        with pytest.raises(ValueError):
            side_multiplicity(path, dom, SIDE_PLUS, "quantum")


class TestPathValidation:
    def test_wrong_endpoints(self):
        dom = path_domain(2)
        with pytest.raises(InvalidPathError):
            path_multiplicity(((0, 1), (0, 0), (2, 0)), dom)

    def test_not_increasing(self):
        dom = path_domain(2)
        with pytest.raises(InvalidPathError):
            path_multiplicity(((0, 2), (0, 0), (0, 1), (1, 1), (1, 0), (2, 0)), dom)

    def test_outside_triangle(self):
        dom = path_domain(2)
        with pytest.raises(InvalidPathError):
            path_multiplicity(((0, 2), (3, 3), (2, 0)), dom)


class TestMultiplicity:
    def test_degree_one(self):
        dom = path_domain(1)
        m = path_multiplicity(((0, 1), (0, 0), (1, 0)), dom)
        assert (m.complex_plus, m.complex_minus) == (1, 1)
        assert (m.complex_total, m.welschinger_total) == (1, 1)

    def test_degree_two(self):
        dom = path_domain(2)
        m = path_multiplicity(dom.points, dom)
        assert (m.complex_total, m.welschinger_total) == (1, 1)

    def test_degree_three_breakdown(self):
        dom = path_domain(3)
        mus = [path_multiplicity(p, dom).complex_total for p in enumerate_paths(dom)]
        nus = [path_multiplicity(p, dom).welschinger_total for p in enumerate_paths(dom)]
        assert sum(mus) == 12
        assert sum(nus) == 8

    def test_parity_and_dominance_per_path(self):
        for d in (2, 3, 4):
            dom = path_domain(d)
            for path in enumerate_paths(dom):
                m = path_multiplicity(path, dom)
                assert m.complex_total >= 0
                assert abs(m.welschinger_total) <= m.complex_total
                assert (m.welschinger_total - m.complex_total) % 2 == 0
                assert abs(m.welschinger_plus) <= m.complex_plus
                assert abs(m.welschinger_minus) <= m.complex_minus

    def test_totals_bounded_by_side_products(self):
        # connectivity filtering can only shrink a path's contribution
        dom = path_domain(4)
        for path in enumerate_paths(dom):
            m = path_multiplicity(path, dom)
            assert m.complex_total <= m.complex_plus * m.complex_minus


class TestCounts:
    def test_known_values(self):
        assert [count_gw(d) for d in (1, 2, 3, 4)] == [1, 1, 12, 620]
        assert [count_welschinger(d) for d in (1, 2, 3)] == [1, 1, 8]

    def test_degree_four_welschinger(self):
        assert count_welschinger(4) == 240

    def test_order_invariance(self):
        for d in (1, 2, 3, 4):
            assert count_both(d, ORDER_XEY) == count_both(d, ORDER_ROWMAJOR)

    def test_total_parity(self):
        for d in (1, 2, 3, 4):
            n, w = count_both(d)
            assert (n - w) % 2 == 0
            assert w <= n

    def test_bad_degree(self):
        with pytest.raises(BadDegreeError):
            count_gw(0)
        with pytest.raises(BadDegreeError):
            count_welschinger(-1)

    def test_reducible_excess_at_degree_four(self):
        # side products also count reducible degenerations; at d=4 these are a
        # line through 2 of the 11 points union a one-cycle cubic through the
        # other 9, contributing C(11,2) = 55 units over the true count
        dom = path_domain(4)
        engine = _engine(dom)
        naive = 0
        for path in enumerate_paths(dom):
            cp, _ = engine.pair(path, SIDE_PLUS)
            if cp == 0:
                continue
            cm, _ = engine.pair(path, SIDE_MINUS)
            naive += cp * cm
        assert naive - count_gw(4) == math.comb(11, 2)

    def test_determinism(self):
        a = count_both(3)
        b = count_both(3)
        assert a == b


class TestSideSymmetry:
    def test_minus_first_evaluation_same_totals(self):
        # early rejection order between the two sides must not matter
        for d in (2, 3):
            dom = path_domain(d)
            engine = _engine(dom)
            total_mu = 0
            total_nu = 0
            for path in enumerate_paths(dom):
                if engine.pair(path, SIDE_MINUS)[0] == 0:
                    continue
                m = path_multiplicity(path, dom)
                total_mu += m.complex_total
                total_nu += m.welschinger_total
            assert (total_mu, total_nu) == count_both(d)
