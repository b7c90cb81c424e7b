"""LLT polynomials on tuples of anchored skew shapes.

Cells of a k-tuple are merged into one list sorted by the shifted diagonal
value beta(u) = j/k - content(u), where j is the 1-based component index;
ties (same component, same diagonal) break upward. A pair of cells u before
v in this order with 0 < beta(v) - beta(u) < 1 contributes an inversion when
the entry at u dominates the entry at v, and the generating function of
semistandard tuples weighted by q^inversions is the LLT polynomial. Signed
alphabets are allowed: plain letters form horizontal strips, barred letters
vertical strips.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .fillings import ORDER1, LetterOrder, indicator, letter_key, super_letters
from .macdonald import descent_class_poly
from .qtring import QT
from .shapes import (
    Cell,
    Partition,
    SkewShape,
    check_partition,
    conjugate,
    ribbon_tuple,
    skew_from_cells,
)
from .symfunc import XPoly, monomial_exponents, schur_expand, super_exponents

ShapeTuple = tuple[SkewShape, ...]


class TupleData(NamedTuple):
    """Precomputed content-reading geometry of a tuple of skew shapes."""

    shapes: ShapeTuple
    cells: tuple[tuple[int, Cell], ...]     # (component, cell) sorted by beta
    betas: tuple[Fraction, ...]
    inv_pairs: tuple[tuple[int, int], ...]  # positions p < p' with 0 < dbeta < 1
    crossing_count: int                     # len(inv_pairs); the transpose shift
    comp_positions: tuple[tuple[int, ...], ...]  # component reading order -> position


@lru_cache(maxsize=None)
def tuple_data(shapes: ShapeTuple) -> TupleData:
    k = len(shapes)
    tagged = []
    for ci, shape in enumerate(shapes):
        for cell in shape.cells():
            beta = Fraction(ci + 1, k) - SkewShape.content(cell)
            tagged.append((beta, cell[0], ci, cell))
    tagged.sort(key=lambda t: (t[0], t[1]))
    cells = tuple((ci, cell) for _, _, ci, cell in tagged)
    betas = tuple(t[0] for t in tagged)
    n = len(cells)
    inv_pairs = tuple(
        (p, p2)
        for p in range(n)
        for p2 in range(p + 1, n)
        if 0 < betas[p2] - betas[p] < 1
    )
    pos = {(ci, cell): p for p, (ci, cell) in enumerate(cells)}
    comp_positions = tuple(
        tuple(pos[(ci, cell)] for cell in shape.cells()) for ci, shape in enumerate(shapes)
    )
    return TupleData(tuple(shapes), cells, betas, inv_pairs, len(inv_pairs), comp_positions)


def tableau_inversions(word, td: TupleData, order: LetterOrder = ORDER1) -> int:
    """Inversions of an entry word aligned with the content reading order."""
    return sum(1 for p, p2 in td.inv_pairs if indicator(word[p], word[p2], order))


def skew_tableaux(shape: SkewShape, max_entry: int) -> Iterator[tuple[int, ...]]:
    """Semistandard fillings of one skew shape, entries aligned with
    shape.cells(); rows weakly increase, columns strictly increase upward."""
    cells = shape.cells()
    fill_order = sorted(cells)          # bottom to top guarantees neighbours exist
    out_index = {c: k for k, c in enumerate(cells)}
    assign: dict[Cell, int] = {}

    def walk(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(fill_order):
            yield tuple(assign[c] for c in cells)
            return
        i, j = fill_order[k]
        lo = 1
        if (i, j - 1) in assign:
            lo = max(lo, assign[(i, j - 1)])
        if (i - 1, j) in assign:
            lo = max(lo, assign[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            assign[(i, j)] = v
            yield from walk(k + 1)
        assign.pop((i, j), None)

    yield from walk(0)


def skew_super_tableaux(
    shape: SkewShape, npos: int, nneg: int, order: LetterOrder = ORDER1
) -> Iterator[tuple[int, ...]]:
    """Signed semistandard fillings: rows and columns weakly increase in the
    order, equal row neighbours must be plain, equal column neighbours barred."""
    cells = shape.cells()
    fill_order = sorted(cells)
    letters = super_letters(npos, nneg, order)
    assign: dict[Cell, int] = {}

    def ok(cell: Cell, idx: int) -> bool:
        i, j = cell
        x = letters[idx]
        left = assign.get((i, j - 1))
        if left is not None and (idx < left or (idx == left and x < 0)):
            return False
        below = assign.get((i - 1, j))
        if below is not None and (idx < below or (idx == below and x > 0)):
            return False
        return True

    def walk(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(fill_order):
            yield tuple(letters[assign[c]] for c in cells)
            return
        cell = fill_order[k]
        for idx in range(len(letters)):
            if ok(cell, idx):
                assign[cell] = idx
                yield from walk(k + 1)
        assign.pop(cell, None)

    yield from walk(0)


def tuple_tableau_words(
    shapes: ShapeTuple, max_entry: int
) -> Iterator[tuple[int, ...]]:
    """Entry words (content reading order) of all semistandard tuples."""
    td = tuple_data(tuple(shapes))
    per_component = [list(skew_tableaux(s, max_entry)) for s in td.shapes]
    n = len(td.cells)
    for combo in product(*per_component):
        word = [0] * n
        for ci, entries in enumerate(combo):
            for slot, p in zip(entries, td.comp_positions[ci]):
                word[p] = slot
        yield tuple(word)


def llt_poly(shapes: Iterable[SkewShape], nvars: int) -> XPoly:
    """The LLT polynomial: sum of q^inversions x^T over semistandard tuples."""
    shapes = tuple(shapes)
    td = tuple_data(shapes)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in tuple_tableau_words(shapes, nvars):
        q = tableau_inversions(word, td)
        e = monomial_exponents(word, nvars)
        inner = acc.setdefault(e, {})
        inner[(q, 0)] = inner.get((q, 0), 0) + 1
    return XPoly(nvars, {e: QT(d) for e, d in acc.items()})


def llt_super_poly(
    shapes: Iterable[SkewShape], npos: int, nneg: int, order: LetterOrder = ORDER1
) -> XPoly:
    """Signed-alphabet LLT sum; restricting the barred block to zero recovers
    the plain polynomial."""
    shapes = tuple(shapes)
    td = tuple_data(shapes)
    per_component = [list(skew_super_tableaux(s, npos, nneg, order)) for s in td.shapes]
    n = len(td.cells)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for combo in product(*per_component):
        word = [0] * n
        for ci, entries in enumerate(combo):
            for slot, p in zip(entries, td.comp_positions[ci]):
                word[p] = slot
        q = tableau_inversions(word, td, order)
        e = super_exponents(word, npos, nneg)
        inner = acc.setdefault(e, {})
        inner[(q, 0)] = inner.get((q, 0), 0) + 1
    return XPoly(npos + nneg, {e: QT(d) for e, d in acc.items()})


def standard_tuple_words(shapes: ShapeTuple) -> Iterator[tuple[int, ...]]:
    """Bijective fillings by 1..n, strictly increasing along rows and columns
    of every component; words aligned with the content reading order."""
    td = tuple_data(tuple(shapes))
    n = len(td.cells)
    cell_pos = {pair: p for p, pair in enumerate(td.cells)}
    word = [0] * n

    def walk(value: int, used: set[int]) -> Iterator[tuple[int, ...]]:
        if value > n:
            yield tuple(word)
            return
        for p, (ci, (i, j)) in enumerate(td.cells):
            if p in used:
                continue
            left = cell_pos.get((ci, (i, j - 1)))
            below = cell_pos.get((ci, (i - 1, j)))
            if (left is None or left in used) and (below is None or below in used):
                word[p] = value
                yield from walk(value + 1, used | {p})
        return

    yield from walk(1, set())


def standardize_word(word, td: TupleData, order: LetterOrder = ORDER1) -> tuple[int, ...]:
    """Rank entries into 1..n: plain ties left to right, barred right to left."""
    ranked = sorted(
        range(len(word)),
        key=lambda p: (letter_key(word[p], order), p if word[p] > 0 else -p),
    )
    out = [0] * len(word)
    for rank, p in enumerate(ranked, start=1):
        out[p] = rank
    return tuple(out)


def tableau_descent_set(word, td: TupleData) -> frozenset[int]:
    """For a standard word: the i whose i+1 occurs earlier in reading order."""
    where = {x: p for p, x in enumerate(word)}
    if sorted(where) != list(range(1, len(word) + 1)):
        raise ValueError("descent sets are defined for standard words")
    return frozenset(i for i in range(1, len(word)) if where[i + 1] < where[i])


def transpose_tuple(shapes: Iterable[SkewShape]) -> ShapeTuple:
    """Conjugate every shape and reverse the tuple order."""
    return tuple(s.transpose() for s in reversed(tuple(shapes)))


def delete_two_cell_columns(shapes: Iterable[SkewShape]) -> tuple[ShapeTuple, int]:
    """Remove every height-two column from each component (heights above two
    are rejected); returns the reduced tuple and the number of columns removed."""
    out = []
    removed = 0
    for shape in shapes:
        heights: dict[int, int] = {}
        for (_, j) in shape.cells():
            heights[j] = heights.get(j, 0) + 1
        if any(h > 2 for h in heights.values()):
            raise ValueError("a column has more than two cells")
        doubled = {j for j, h in heights.items() if h == 2}
        removed += len(doubled)
        kept = [c for c in shape.cells() if c[1] not in doubled]
        out.append(skew_from_cells(kept))
    return tuple(out), removed


def check_ribbon_factorization(mu: Partition, descent_cells, nvars: int) -> bool:
    """The descent-class generating function of mu equals the LLT polynomial
    of the associated ribbon tuple."""
    mu = check_partition(mu)
    return descent_class_poly(mu, descent_cells, nvars) == llt_poly(
        ribbon_tuple(mu, descent_cells), nvars
    )


def _shift_q(f: XPoly, shift: int) -> XPoly:
    """Multiply by q^shift and replace q by 1/q in every coefficient."""
    return f.map_coefficients(
        lambda c: QT({(shift - qe, te): v for (qe, te), v in c.terms.items()})
    )


def check_transpose_identity(shapes: Iterable[SkewShape], nvars: int) -> bool:
    """Transposing the tuple matches the all-barred evaluation with q inverted
    and one q^crossings factor."""
    shapes = tuple(shapes)
    m = tuple_data(shapes).crossing_count
    lhs = llt_poly(transpose_tuple(shapes), nvars)
    rhs = _shift_q(llt_super_poly(shapes, 0, nvars, ORDER1), m)
    return lhs == rhs


def check_transpose_schur(shapes: Iterable[SkewShape], nvars: int) -> bool:
    """Schur expansion form of the transpose identity: conjugate the labels,
    invert q, multiply by q^crossings."""
    shapes = tuple(shapes)
    td = tuple_data(shapes)
    if nvars < len(td.cells):
        raise ValueError("need at least one variable per cell for Schur expansion")
    m = td.crossing_count
    lhs = schur_expand(llt_poly(transpose_tuple(shapes), nvars))
    base = schur_expand(llt_poly(shapes, nvars))
    rhs = {
        conjugate(lam): QT({(m - qe, te): v for (qe, te), v in c.terms.items()})
        for lam, c in base.items()
    }
    return lhs == rhs


def binary_inversion_poly(betas: Iterable[Fraction]) -> XPoly:
    """Generating function over words in {1, 2} indexed by a strictly
    increasing rational sequence: q counts pairs i < j with word[i] > word[j]
    and beta_j - beta_i < 1."""
    betas = tuple(Fraction(b) for b in betas)
    if any(a >= b for a, b in zip(betas, betas[1:])):
        raise ValueError("beta sequence must be strictly increasing")
    n = len(betas)
    close_pairs = [
        (i, j) for i in range(n) for j in range(i + 1, n) if betas[j] - betas[i] < 1
    ]
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product((1, 2), repeat=n):
        q = sum(1 for i, j in close_pairs if word[i] > word[j])
        e = monomial_exponents(word, 2)
        inner = acc.setdefault(e, {})
        inner[(q, 0)] = inner.get((q, 0), 0) + 1
    return XPoly(2, {e: QT(d) for e, d in acc.items()})


def beta_recursion_parts(
    betas: Iterable[Fraction],
) -> tuple[int, tuple[Fraction, ...], tuple[Fraction, ...]] | None:
    """Data for the two-variable recursion at the last position.

    Returns None when no earlier beta lies within 1 of the last one (then the
    polynomial factors as (x1 + x2) times the shorter sequence). Otherwise
    returns (r, alpha, gamma): alpha moves the last beta just past the r-th
    closest earlier entry, gamma removes positions n-r and n.
    """
    betas = tuple(Fraction(b) for b in betas)
    n = len(betas)
    r = sum(1 for i in range(n - 1) if betas[-1] - betas[i] < 1)
    if r == 0:
        return None
    lo = betas[n - r - 1] + 1
    hi = betas[n - r] + 1
    alpha_last = (lo + hi) / 2
    if alpha_last <= betas[-2]:
        raise RuntimeError("replacement entry fails to keep the sequence increasing")
    alpha = betas[:-1] + (alpha_last,)
    gamma = tuple(b for k, b in enumerate(betas) if k not in (n - r - 1, n - 1))
    return r, alpha, gamma
