"""Exact coefficient rings: Laurent polynomials in q, t and Z[alpha]."""

from hypothesis import given
from hypothesis import strategies as st

from macpoly.qtring import QT, AlphaPoly, elementary_coeffs

exponents = st.integers(min_value=-3, max_value=3)
coeffs = st.integers(min_value=-9, max_value=9)
qts = st.dictionaries(st.tuples(exponents, exponents), coeffs, max_size=4).map(QT)


def test_zero_one_and_generators():
    assert not QT.zero()
    assert QT.one() + QT.zero() == QT.one()
    assert QT.q(2) == QT.term(1, 2, 0)
    assert QT.t(-1) == QT.term(1, 0, -1)
    assert QT({(1, 0): 0}) == QT.zero()


def test_small_products():
    assert QT.q(1) * QT.t(1) == QT.term(1, 1, 1)
    binom = QT.one() + QT.q(1)
    assert binom * binom == QT.one() + QT.term(2, 1, 0) + QT.q(2)
    assert (QT.one() - QT.t(1)) * (QT.one() + QT.t(1)) == QT.one() - QT.t(2)


def test_pow_matches_repeated_product():
    base = QT.one() + QT.q(1) * QT.t(2)
    by_hand = QT.one()
    for _ in range(5):
        by_hand = by_hand * base
    assert base**5 == by_hand
    assert base**0 == QT.one()


@given(qts, qts, qts)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == QT.zero()
    assert a * QT.one() == a


@given(qts, qts)
def test_swap_is_a_ring_involution(a, b):
    assert a.swap_qt().swap_qt() == a
    assert (a * b).swap_qt() == a.swap_qt() * b.swap_qt()
    assert (a + b).swap_qt() == a.swap_qt() + b.swap_qt()


def test_integer_coercion():
    assert QT.one() * 3 == QT.term(3, 0, 0)
    assert 1 - QT.q(1) == QT.one() - QT.q(1)
    assert QT.t(1) + 0 == QT.t(1)


def test_coefficient_lookup_and_sum():
    f = QT.term(2, 1, 0) + QT.term(-1, 0, 3)
    assert f.coefficient(1, 0) == 2
    assert f.coefficient(0, 3) == -1
    assert f.coefficient(5, 5) == 0
    assert f.sum_of_coefficients() == 1


def test_polynomial_and_positivity_predicates():
    assert (QT.q(2) + QT.t(1)).is_polynomial()
    assert not QT.term(1, -1, 0).is_polynomial()
    assert (QT.q(1) + QT.one()).has_nonnegative_coefficients()
    assert not (QT.q(1) - QT.one()).has_nonnegative_coefficients()


def test_q_to_t_power_substitution():
    f = QT.q(2) * QT.t(1) + QT.t(3)
    assert f.q_to_t_power(2) == QT.t(5) + QT.t(3)
    g = QT.q(1) - QT.t(1)
    assert g.q_to_t_power(1) == QT.zero()


def test_divide_by_one_minus_t_exactly():
    one_minus_t = QT.one() - QT.t(1)
    f = one_minus_t * one_minus_t * (QT.one() + QT.t(2))
    assert f.divide_by_one_minus_t(2) == QT.one() + QT.t(2)
    assert f.divide_by_one_minus_t(0) == f


def test_divide_by_one_minus_t_rejects_remainders():
    import pytest

    with pytest.raises(ValueError):
        (QT.one() + QT.t(1)).divide_by_one_minus_t(1)
    with pytest.raises(ValueError):
        QT.q(1).divide_by_one_minus_t(1)


def test_eval_t_one():
    f = QT.t(2) + QT.t(5) + QT.one()
    assert f.eval_t_one() == 3
    import pytest

    with pytest.raises(ValueError):
        (QT.q(1) + QT.t(1)).eval_t_one()


def test_str_is_sorted_and_sparse():
    assert str(QT.zero()) == "0"
    assert str(QT.one()) == "1"
    assert str(-QT.t(2)) == "-t^2"
    assert str(QT.term(3, 2, -1) + QT.one()) == "1 + 3*q^2*t^-1"
    assert str(QT.q(1) - QT.t(1)) == "-t + q"
    assert str(QT.one() - QT.t() - QT.q() * QT.t()) == "1 - t - q*t"
    assert str(QT.term(-2) + QT.term(3, 1, 0) - QT.t()) == "-2 - t + 3*q"


def test_json_round_trip():
    f = QT.term(3, 2, -1) + QT.one() - QT.t(4)
    assert QT.from_json(f.to_json()) == f
    assert f.to_json() == [[0, 0, "1"], [0, 4, "-1"], [2, -1, "3"]]


def test_elementary_coeffs_two_cells():
    e = elementary_coeffs([(0, 0), (1, 0)])
    assert e == [QT.one(), QT.one() + QT.q(1), QT.q(1)]


def test_elementary_coeffs_empty():
    assert elementary_coeffs([]) == [QT.one()]


alphas = st.dictionaries(st.integers(min_value=0, max_value=4), coeffs, max_size=4).map(
    AlphaPoly
)


@given(alphas, alphas, alphas)
def test_alpha_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(alphas, alphas, st.integers(min_value=-3, max_value=3))
def test_alpha_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x)
    assert (a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x)


def test_alpha_str_and_json():
    f = AlphaPoly.linear(1, 2)
    assert str(f) == "2*alpha + 1"
    assert AlphaPoly.from_json(f.to_json()) == f
    assert str(AlphaPoly.zero()) == "0"
