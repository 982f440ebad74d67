from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from qtq import core_quotient as cq
from qtq.partitions import EMPTY, YoungDiagram, enumerate_diagrams, theorem2_statistic
from qtq.qt_algebra import ONE, QPoly
from qtq.quiver_fixed import (
    FixedPoint,
    FramingData,
    alternate_tiebreak,
    cell_dimensions,
    census,
    character_series,
    color_vector,
    component_d_plus,
    d_plus,
    invariant_weights,
    iter_fixed_points,
    mu_from_omega,
    pairing,
    poincare_bm,
    poincare_fixed,
    quiver_dim,
    tangent_weights,
    theta_from_omega,
    theta_from_w,
)

from oracles import brute_partitions, dict_product

Y = YoungDiagram.of
HILB_11 = FramingData.hilbert(1, 1)


def pairs_for(m):
    return [(a, m - a) for a in range(1, m) if gcd(a, m - a) == 1]


def framings(m, r):
    for a, b in pairs_for(m):
        for w in product(range(r + 1), repeat=m):
            if sum(w) == r:
                yield FramingData.from_w(w, a, b)


def point(*rows_list, framing=HILB_11):
    return FixedPoint(tuple(YoungDiagram(tuple(r)) for r in rows_list), framing)


def test_theta_from_w_examples():
    assert theta_from_w((1, 0, 0), 3, 1) == (0,)
    assert theta_from_w((1, 1), 2, 1) == (0, -1)
    assert theta_from_w((0, 1, 0), 3, 2) == (-2,)


def test_mu_from_omega_examples():
    assert mu_from_omega((0,), 2, 1) == (1, 0)
    assert mu_from_omega((0, 1), 2, 1) == (1, 1)
    assert mu_from_omega((1, 1), 3, 1) == (0, 0, 2)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_omega_and_w_give_the_same_framing_weights(m):
    for a, b in pairs_for(m):
        for omega in product(range(m), repeat=2):
            fr = FramingData.from_omega(omega, a, b)
            assert fr.w == mu_from_omega(omega, m, a)
            assert sorted(fr.theta) == sorted(theta_from_w(fr.w, m, a))
            assert sorted(theta_from_omega(omega, m)) == sorted(fr.theta)


def test_framing_validation():
    with pytest.raises(ValueError):
        FramingData(2, 4, (0,))
    with pytest.raises(ValueError):
        FramingData(1, 1, (1,))
    with pytest.raises(ValueError):
        FramingData(1, 2, (-3,))


def test_color_vector_examples():
    assert color_vector(point(())) == (0, 0)
    assert color_vector(point((2,))) == (1, 1)
    assert color_vector(point((1, 1))) == (1, 1)
    # framing weight lambda_1 = -1 for m = 2 starts its diagram at colour 1
    fr = FramingData.from_w((0, 1), 1, 1)
    assert color_vector(point((1,), framing=fr)) == (0, 1)


def test_tangent_weight_examples():
    assert sorted(w[:2] for w in tangent_weights(point((1,)))) == [(0, 1), (1, 0)]
    got = sorted(w[:2] for w in tangent_weights(point((2,))))
    assert got == sorted([(-1, 1), (0, 1), (2, 0), (1, 0)])


def test_invariant_weight_examples():
    inv = invariant_weights(point((2,)))
    assert sorted(w[:2] for w in inv) == [(-1, 1), (2, 0)]
    assert invariant_weights(point(())) == []


def test_quiver_dim_examples():
    assert quiver_dim((0, 0)) == 0
    assert quiver_dim((1, 1)) == 2
    assert quiver_dim((1, 1, 1)) == 2
    with pytest.raises(ValueError):
        quiver_dim((0, 1))


def test_d_plus_examples():
    assert d_plus(point(())) == 0
    assert d_plus(point((2,))) == 1 == quiver_dim((1, 1)) // 2


def test_cell_dimension_examples():
    assert cell_dimensions(point(())) == (0, 0)
    assert cell_dimensions(point((2,))) == (2, 1)
    assert cell_dimensions(point((1, 1))) == (1, 0)


def test_fixed_point_json():
    fr = FramingData.from_w((1, 1), 1, 1)
    p = point((2, 1), (), framing=fr)
    assert p.to_json() == {"theta": [0, -1], "diagrams": [[2, 1], []]}
    assert FixedPoint.from_json(p.to_json(), 1, 1) == p


@st.composite
def fixed_points(draw, max_r=3, max_n=7):
    m = draw(st.sampled_from([2, 3, 4, 5]))
    a, b = draw(st.sampled_from(pairs_for(m)))
    r = draw(st.integers(1, max_r))
    theta = tuple(draw(st.lists(st.integers(-(m - 1), 0), min_size=r, max_size=r)))
    sizes = draw(st.lists(st.integers(0, max_n), min_size=r, max_size=r))
    diagrams = tuple(YoungDiagram(draw(st.sampled_from(brute_partitions(k)))) for k in sizes)
    return FixedPoint(diagrams, FramingData(a, b, theta))


@settings(max_examples=200)
@given(fixed_points())
def test_weight_count_and_nontriviality(p):
    ws = tangent_weights(p)
    assert len(ws) == 2 * p.framing.r * p.size
    assert not any(a == 0 and b == 0 and i == j for a, b, i, j in ws)
    assert sum(color_vector(p)) == p.size


@settings(max_examples=200)
@given(fixed_points())
def test_d_plus_halves_invariant_count_and_cells_split(p):
    inv = invariant_weights(p)
    assert 2 * d_plus(p) == len(inv)
    assert d_plus(p) == sum(1 for w in inv if pairing(w, p.framing) > 0)
    for tb in (None, alternate_tiebreak):
        bm, fixed = cell_dimensions(p) if tb is None else cell_dimensions(p, tb)
        assert bm == d_plus(p) + fixed
        assert bm >= d_plus(p)


@pytest.mark.parametrize("alpha,beta", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (1, 4)])
def test_fixed_cell_is_theorem2_statistic(alpha, beta):
    fr = FramingData.hilbert(alpha, beta)
    for n in range(13):
        for d in enumerate_diagrams(n):
            _, fixed = cell_dimensions(FixedPoint((d,), fr))
            assert fixed == theorem2_statistic(d, alpha, beta)


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("r", [1, 2])
def test_component_invariants(m, r):
    n_max = 10 if r == 1 else 8
    for fr in framings(m, r):
        hilbert = r == 1 and fr.w[0] == 1
        for n in range(n_max + 1):
            for v, recs in census(fr, n).items():
                assert len({x.n_invariant for x in recs}) == 1
                assert len({x.d_plus for x in recs}) == 1
                assert 2 * recs[0].d_plus == recs[0].n_invariant
                if hilbert:
                    assert recs[0].n_invariant == quiver_dim(v)
                for x in recs:
                    assert x.bm_cell == x.d_plus + x.fixed_cell


@pytest.mark.parametrize("m", [2, 3])
def test_theorem_fixed_component_level(m):
    for a, b in pairs_for(m):
        fr = FramingData.hilbert(a, b)
        for n in range(11):
            for v in census(fr, n):
                d = component_d_plus(v, fr)
                assert poincare_bm(v, fr) == poincare_fixed(v, fr).shift(d)
                assert poincare_bm(v, fr, alternate_tiebreak) == poincare_bm(v, fr)
                assert poincare_fixed(v, fr, alternate_tiebreak) == poincare_fixed(v, fr)


def test_poincare_examples():
    assert poincare_bm((0, 0), HILB_11) == ONE
    assert poincare_fixed((0, 0), HILB_11) == ONE
    assert poincare_bm((1, 0), HILB_11) == ONE
    assert poincare_fixed((1, 1), HILB_11) == QPoly({0: 1, 1: 1})
    assert poincare_bm((1, 1), HILB_11) == QPoly({1: 1, 2: 1})
    assert poincare_bm((0, 1), HILB_11) == QPoly()


@pytest.mark.parametrize("alpha,beta", [(1, 1), (1, 2), (2, 3)])
def test_poincare_fixed_sums_to_product_coefficient(alpha, beta):
    m = alpha + beta
    order = 9
    factors = [(0, i, -1) for i in range(1, order + 1) if i % m] + [(1, m * i, -1) for i in range(1, order + 1)]
    expected = dict_product(factors, order)
    fr = FramingData.hilbert(alpha, beta)
    for n in range(order + 1):
        total = QPoly()
        count = 0
        for v, recs in census(fr, n).items():
            total = total + poincare_fixed(v, fr)
            assert poincare_fixed(v, fr).at_one() == len(recs)
            count += len(recs)
        assert total.coeffs == expected[n]
        assert count == sum(1 for _ in iter_fixed_points(fr, n))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_dimension_zero_components_are_cores(m):
    fr = FramingData.hilbert(1, m - 1)
    for n in range(13):
        for v, recs in census(fr, n).items():
            if quiver_dim(v) == 0:
                assert len(recs) == 1
                lam = tuple(v[(k + 1) % m] - v[k] for k in range(m))
                assert recs[0].point.diagrams[0] == cq.psi_inverse(lam, m)


def test_character_series_examples():
    chi = character_series(1, (0,), 1, 1, 12)
    assert chi[0] == ONE
    assert chi.at_q_zero() == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]


@pytest.mark.parametrize("m,alpha,order", [(2, 1, 10), (3, 1, 10), (3, 2, 10)])
def test_character_series_level_one(m, alpha, order):
    expected = dict_product([(0, i, -1) for i in range(1, order + 1) if i % m], order)
    for omega in range(m):
        chi = character_series(1, (omega,), alpha, m - alpha, order)
        assert [{0: c} if c else {} for c in chi.at_q_zero()] == [expected[k] for k in range(order + 1)]


@pytest.mark.parametrize("omega", [(0, 1), (0, 0), (1, 1)])
def test_character_series_level_two_sanity(omega):
    chi = character_series(2, omega, 1, 1, 6)
    assert chi[0] == ONE
    assert all(set(c.coeffs) <= {0} and c[0] >= 0 for c in chi.coeffs)
    assert chi == character_series(2, omega, 1, 1, 6, alternate_tiebreak)
    # swapping the two framing weights relabels the framing and must not matter
    assert chi == character_series(2, omega[::-1], 1, 1, 6)
