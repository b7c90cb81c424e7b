"""LLT polynomials on shape tuples and the two-letter diagonal recursion."""

from fractions import Fraction

import pytest

from macpoly.fillings import ORDER1
from macpoly.llt import (
    beta_recursion_parts,
    binary_inversion_poly,
    check_ribbon_factorization,
    check_transpose_identity,
    check_transpose_schur,
    delete_two_cell_columns,
    llt_poly,
    llt_super_poly,
    skew_tableaux,
    standard_tuple_words,
    standardize_word,
    tableau_descent_set,
    tableau_inversions,
    transpose_tuple,
    tuple_data,
    tuple_tableau_words,
)
from macpoly.qtring import QT
from macpoly.shapes import SkewShape, ribbon_tuple, skew_from_cells
from macpoly.symfunc import XPoly, schur_expand

CELL = SkewShape((1,), ())
DOMINO_ROW = SkewShape((2,), ())
DOMINO_COL = SkewShape((1, 1), ())


def test_tuple_data_orders_cells_by_shifted_diagonal():
    td = tuple_data((CELL, CELL))
    assert td.betas == (Fraction(1, 2), Fraction(1))
    assert td.inv_pairs == ((0, 1),)
    assert td.crossing_count == 1


def test_two_single_cells_give_one_q():
    f = llt_poly((CELL, CELL), 2)
    assert f == XPoly(
        2, {(2, 0): QT.one(), (1, 1): QT.one() + QT.q(), (0, 2): QT.one()}
    )


def test_single_component_has_no_inversions():
    assert llt_poly((DOMINO_ROW,), 2) == XPoly(
        2, {(2, 0): QT.one(), (1, 1): QT.one(), (0, 2): QT.one()}
    )
    assert llt_poly((DOMINO_COL,), 2) == XPoly(2, {(1, 1): QT.one()})


def test_skew_tableaux_counts():
    assert len(list(skew_tableaux(DOMINO_ROW, 2))) == 3
    assert len(list(skew_tableaux(DOMINO_COL, 2))) == 1
    assert len(list(skew_tableaux(SkewShape((2, 1), ()), 2))) == 2


def test_tableau_inversions_on_the_pair_of_cells():
    td = tuple_data((CELL, CELL))
    assert tableau_inversions((2, 1), td) == 1
    assert tableau_inversions((1, 2), td) == 0
    assert tableau_inversions((-1, -1), td, ORDER1) == 1


def test_standard_tuple_words():
    words = set(standard_tuple_words((CELL, CELL)))
    assert words == {(1, 2), (2, 1)}
    td = tuple_data((DOMINO_COL,))
    for w in standard_tuple_words((DOMINO_COL,)):
        assert tableau_descent_set(w, td) == frozenset({1})


def test_standardize_word_breaks_ties_by_sign():
    td = tuple_data((CELL, CELL, CELL))
    assert standardize_word((1, 1, 1), td) == (1, 2, 3)
    assert standardize_word((-1, -1, -1), td) == (3, 2, 1)
    assert standardize_word((2, 1, -2), td) == (2, 1, 3)


def test_standardization_preserves_inversions():
    shapes = (DOMINO_ROW, CELL)
    td = tuple_data(shapes)
    for word in tuple_tableau_words(shapes, 2):
        std = standardize_word(word, td)
        assert tableau_inversions(word, td) == tableau_inversions(std, td)


def test_super_poly_restricts_to_plain():
    shapes = (CELL, DOMINO_ROW)
    f = llt_super_poly(shapes, 2, 1, ORDER1)
    assert f.prefix_part(2) == llt_poly(shapes, 2)


def test_transpose_tuple_reverses_and_conjugates():
    out = transpose_tuple((DOMINO_ROW, CELL))
    assert out == (CELL, DOMINO_COL)


def test_delete_two_cell_columns():
    shape = SkewShape((2, 2), (1,))
    reduced, removed = delete_two_cell_columns((shape,))
    assert removed == 1
    assert reduced[0].cells() == ((2, 1),)
    with pytest.raises(ValueError):
        delete_two_cell_columns((SkewShape((1, 1, 1), ()),))


def test_ribbon_factorization_small_shapes():
    assert check_ribbon_factorization((2, 1), [(2, 1)], 2)
    assert check_ribbon_factorization((2, 2), [(2, 1), (2, 2)], 2)
    assert check_ribbon_factorization((3, 1), [], 2)


def test_transpose_identity_small_tuples():
    assert check_transpose_identity((CELL, CELL), 2)
    assert check_transpose_identity((DOMINO_ROW, CELL), 2)
    assert check_transpose_identity(ribbon_tuple((2, 2), [(2, 1)]), 2)


def test_transpose_schur_needs_enough_variables():
    with pytest.raises(ValueError):
        check_transpose_schur((CELL, CELL), 1)
    assert check_transpose_schur((CELL, CELL), 2)
    assert check_transpose_schur((DOMINO_COL, CELL), 3)


def test_schur_positivity_of_a_small_tuple():
    for c in schur_expand(llt_poly((CELL, CELL, CELL), 3)).values():
        assert c.is_polynomial() and c.has_nonnegative_coefficients()


def test_binary_inversion_poly_close_pair():
    f = binary_inversion_poly((Fraction(0), Fraction(1, 2)))
    assert f == XPoly(
        2, {(2, 0): QT.one(), (1, 1): QT.one() + QT.q(), (0, 2): QT.one()}
    )
    g = binary_inversion_poly((Fraction(0), Fraction(3, 2)))
    assert g.coefficient((1, 1)) == QT.term(2)
    with pytest.raises(ValueError):
        binary_inversion_poly((Fraction(1), Fraction(1)))


def test_beta_recursion_far_last_entry_factors():
    betas = (Fraction(0), Fraction(3, 2), Fraction(3))
    assert beta_recursion_parts(betas) is None
    x1_plus_x2 = XPoly(2, {(1, 0): QT.one(), (0, 1): QT.one()})
    assert binary_inversion_poly(betas) == x1_plus_x2 * binary_inversion_poly(betas[:-1])


def test_beta_recursion_parts_r_two():
    betas = (Fraction(0), Fraction(1, 4), Fraction(1, 2))
    parts = beta_recursion_parts(betas)
    assert parts is not None
    r, alpha, gamma = parts
    assert r == 2
    assert alpha == (Fraction(0), Fraction(1, 4), Fraction(9, 8))
    assert gamma == (Fraction(1, 4),)


def test_beta_recursion_identity_holds():
    x1x2 = XPoly(2, {(1, 1): QT.one()})
    for betas in (
        (Fraction(0), Fraction(1, 4), Fraction(1, 2)),
        (Fraction(0), Fraction(1, 2), Fraction(5, 4)),
        (Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(2, 3)),
    ):
        parts = beta_recursion_parts(betas)
        assert parts is not None
        r, alpha, gamma = parts
        lhs = binary_inversion_poly(betas) - binary_inversion_poly(alpha)
        factor = QT.q(r) - QT.q(r - 1)
        rhs = (x1x2 * binary_inversion_poly(gamma)).scaled(factor)
        assert lhs == rhs
