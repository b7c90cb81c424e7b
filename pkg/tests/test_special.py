"""Cocharge, the q = 0 face, and the Jack integral-form family."""

import pytest

from macpoly.fillings import Filling, cocharge_word, inv, maj
from macpoly.qtring import QT, AlphaPoly
from macpoly.special import (
    absolute_inv,
    absolute_maj,
    cocharge,
    cocharge_schur_vector,
    eval_alpha,
    hall_littlewood_schur,
    integral_form_from_macdonald,
    integral_form_in_x,
    integral_form_m_vec,
    inv_zero_filling,
    jack_alpha_in_x,
    jack_alpha_m_vec,
    jack_limit,
)
from macpoly.symfunc import to_m_basis


def test_cocharge_of_standard_words():
    assert cocharge(()) == 0
    assert cocharge((1, 2)) == 0
    assert cocharge((2, 1)) == 1
    assert cocharge((3, 2, 1)) == 3
    assert cocharge((1, 2, 3)) == 0
    assert cocharge((2, 3, 1)) == 2
    assert cocharge((3, 1, 2)) == 1


def test_cocharge_peels_repeated_letters():
    assert cocharge((2, 1, 1)) == 1
    assert cocharge((1, 1, 2)) == 0
    assert cocharge((1, 2, 1)) == 1
    assert cocharge((2, 1, 2, 1)) == 2


def test_cocharge_rejects_non_partition_content():
    with pytest.raises(ValueError):
        cocharge((2, 2, 1))
    with pytest.raises(ValueError):
        cocharge((1, 3))


def test_inv_zero_filling_reconstructs_the_example():
    f = inv_zero_filling(
        (5, 5, 3, 1), [[1, 1, 3, 6, 7], [1, 2, 4, 4, 5], [1, 2, 3], [2]]
    )
    assert f == Filling.from_rows([[2], [3, 1, 2], [2, 4, 4, 1, 5], [1, 1, 3, 6, 7]])
    assert inv(f) == 0
    assert maj(f) == cocharge(cocharge_word(f))


def test_inv_zero_filling_validation():
    with pytest.raises(ValueError):
        inv_zero_filling((2, 1), [[1, 2]])
    with pytest.raises(ValueError):
        inv_zero_filling((2, 1), [[1], [1, 2]])
    with pytest.raises(ValueError):
        inv_zero_filling((1,), [[0]])


def test_cocharge_schur_vector_small():
    assert cocharge_schur_vector((1, 1)) == {(2,): QT.one(), (1, 1): QT.t()}
    assert cocharge_schur_vector((2,)) == {(2,): QT.one()}


def test_hall_littlewood_known_tables():
    assert hall_littlewood_schur((1, 1)) == {(2,): QT.one(), (1, 1): QT.t()}
    assert hall_littlewood_schur((2,)) == {(2,): QT.one()}
    assert hall_littlewood_schur((2, 1)) == {(3,): QT.one(), (2, 1): QT.t()}
    assert hall_littlewood_schur((1, 1, 1)) == {
        (3,): QT.one(),
        (2, 1): QT.t() + QT.t(2),
        (1, 1, 1): QT.t(3),
    }


def test_hall_littlewood_both_routes_agree_up_to_four():
    from macpoly.shapes import partitions

    for n in (1, 2, 3, 4):
        for mu in partitions(n):
            hall_littlewood_schur(mu)


def test_integral_form_row_of_two():
    one, q, t = QT.one(), QT.q(), QT.t()
    m = integral_form_m_vec((2,))
    assert m[(2,)] == (one - t) * (one - q * t)
    assert m[(1, 1)] == (one + q) * (one - t) * (one - t)


def test_integral_form_column_of_two():
    one, t = QT.one(), QT.t()
    m = integral_form_m_vec((1, 1))
    assert (2,) not in m
    assert m[(1, 1)] == (one - t) * (one - t * t)


def test_integral_form_routes_agree():
    from macpoly.shapes import partitions

    for n in (1, 2, 3):
        for mu in partitions(n):
            nv = max(n, 1)
            assert integral_form_in_x(mu, nv) == integral_form_from_macdonald(mu, nv)


def test_jack_alpha_row_of_two():
    m = jack_alpha_m_vec((2,))
    assert m[(2,)] == AlphaPoly.linear(1, 1)
    assert m[(1, 1)] == AlphaPoly({0: 2})


def test_jack_alpha_column_of_two():
    m = jack_alpha_m_vec((1, 1))
    assert m[(1, 1)] == AlphaPoly({0: 2})
    assert (2,) not in m


def test_jack_limit_matches_alpha_evaluation():
    for mu in ((2,), (1, 1), (2, 1)):
        n = sum(mu)
        for alpha in (1, 2, 3):
            lhs = eval_alpha(jack_alpha_in_x(mu, n), alpha)
            assert lhs == jack_limit(mu, n, alpha)


def test_jack_limit_alpha_one_is_a_scaled_schur_function():
    # at alpha = 1 the integral form of a row is 2*s_2
    f = jack_limit((2,), 2, 1)
    m = to_m_basis(f)
    assert m == {(2,): 2, (1, 1): 2}


def test_absolute_statistics():
    assert absolute_inv(Filling((2,), (2, 1))) == 1
    assert absolute_inv(Filling((2,), (-2, 1))) == 1
    assert absolute_inv(Filling((2,), (1, 2))) == 0
    assert absolute_maj(Filling.from_rows([[2], [1]])) == 1
    assert absolute_maj(Filling.from_rows([[-2], [1]])) == 1
    assert absolute_maj(Filling.from_rows([[1], [2]])) == 0
