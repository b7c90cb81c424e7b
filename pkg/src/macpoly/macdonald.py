"""The modified Macdonald polynomials from their filling expansion.

The central object is the generating function over all fillings of a
partition diagram weighted by q^inv t^maj. Expanding it in the monomial and
Schur bases yields the two-parameter Kostka table; signed alphabets give the
plethystic specializations and the coefficients of the principal evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .fillings import (
    ORDER1,
    ORDER2,
    LetterOrder,
    shape_data,
    super_letters,
    word_attack_inversions,
    word_descent_positions,
    word_statistics,
)
from .qtring import QT, elementary_coeffs
from .shapes import (
    Cell,
    Partition,
    arm,
    cell_biexponents,
    check_partition,
    conjugate,
    contains,
    leg,
    partitions,
)
from .symfunc import (
    XPoly,
    monomial_exponents,
    schur_expand,
    super_exponents,
    to_m_basis,
)

DEFAULT_GUARD = 8


def macdonald_in_x(mu: Partition, nvars: int) -> XPoly:
    """Sum of q^inv t^maj x^sigma over all fillings with entries <= nvars."""
    mu = check_partition(mu)
    sd = shape_data(mu)
    n = sum(mu)
    below, legs, arms, attack_pairs = sd.below, sd.legs, sd.arms, sd.attack_pairs
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product(range(1, nvars + 1), repeat=n):
        maj = armsum = pairs = 0
        for p, b in enumerate(below):
            if b >= 0 and word[p] > word[b]:
                maj += legs[p] + 1
                armsum += arms[p]
        for p, p2 in attack_pairs:
            if word[p] > word[p2]:
                pairs += 1
        counts = [0] * nvars
        for x in word:
            counts[x - 1] += 1
        inner = acc.setdefault(tuple(counts), {})
        key = (pairs - armsum, maj)
        inner[key] = inner.get(key, 0) + 1
    return XPoly(nvars, {e: QT(d) for e, d in acc.items()})


@dataclass(frozen=True)
class MacdonaldResult:
    """One modified Macdonald polynomial in three coordinated forms."""

    mu: Partition
    x_poly: XPoly                       # in |mu| variables
    m_vec: dict[Partition, QT]
    schur_vec: dict[Partition, QT]      # rows of the q,t-Kostka table


@lru_cache(maxsize=None)
def _macdonald(mu: Partition) -> MacdonaldResult:
    n = sum(mu)
    x_poly = macdonald_in_x(mu, n)
    if not x_poly.is_symmetric():
        raise RuntimeError(f"filling sum for {mu} is not symmetric; internal bug")
    if n and x_poly.coefficient((n,) + (0,) * (n - 1)) != QT.one():
        raise RuntimeError(f"x1^n coefficient for {mu} is not 1; internal bug")
    m_vec = to_m_basis(x_poly)
    schur_vec = schur_expand(x_poly)
    for c in schur_vec.values():
        if not c.is_polynomial():
            raise RuntimeError(f"negative exponent in a Schur coefficient of {mu}")
    return MacdonaldResult(mu, x_poly, m_vec, schur_vec)


def macdonald(mu: Partition, guard: int = DEFAULT_GUARD) -> MacdonaldResult:
    """Compute (and cache) the polynomial for mu; guarded by |mu| <= guard."""
    mu = check_partition(mu)
    n = sum(mu)
    if n > guard:
        raise ValueError(
            f"|mu| = {n} exceeds the size guard {guard}; raise the guard to proceed"
        )
    return _macdonald(mu)


def kostka_table(n: int, guard: int = 6) -> tuple[tuple[Partition, ...], list[list[QT]]]:
    """All q,t-Kostka entries for partitions of n: rows lam, columns mu."""
    if n > guard:
        raise ValueError(f"n = {n} exceeds the table guard {guard}; raise the guard to proceed")
    parts = partitions(n)
    columns = {mu: macdonald(mu, guard=n).schur_vec for mu in parts}
    matrix = [[columns[mu].get(lam, QT.zero()) for mu in parts] for lam in parts]
    return parts, matrix


def super_macdonald_in_xy(
    mu: Partition, npos: int, nneg: int, order: LetterOrder = ORDER1
) -> XPoly:
    """The signed-alphabet filling sum; x-block then y-block of variables."""
    mu = check_partition(mu)
    sd = shape_data(mu)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product(super_letters(npos, nneg, order), repeat=sum(mu)):
        maj, inv = word_statistics(word, sd, order)
        e = super_exponents(word, npos, nneg)
        inner = acc.setdefault(e, {})
        inner[(inv, maj)] = inner.get((inv, maj), 0) + 1
    return XPoly(npos + nneg, {e: QT(d) for e, d in acc.items()})


def _check_descent_cells(mu: Partition, descents: Iterable[Cell]) -> frozenset[Cell]:
    chosen = frozenset((int(i), int(j)) for (i, j) in descents)
    for cell in chosen:
        if not contains(mu, cell):
            raise ValueError(f"descent cell {cell} lies outside {mu}")
        if cell[0] < 2:
            raise ValueError(f"descent cell {cell} has no cell below it")
    return chosen


def descent_class_polys(mu: Partition, nvars: int) -> dict[frozenset[Cell], XPoly]:
    """For each descent-cell set D: the sum of q^|Inv| x^sigma over fillings
    with entries <= nvars whose descent set is exactly D."""
    mu = check_partition(mu)
    sd = shape_data(mu)
    acc: dict[frozenset[Cell], dict[tuple[int, ...], dict[tuple[int, int], int]]] = {}
    for word in product(range(1, nvars + 1), repeat=sum(mu)):
        des = frozenset(sd.cells[p] for p in word_descent_positions(word, sd))
        pairs = word_attack_inversions(word, sd)
        e = monomial_exponents(word, nvars)
        inner = acc.setdefault(des, {}).setdefault(e, {})
        inner[(pairs, 0)] = inner.get((pairs, 0), 0) + 1
    return {
        des: XPoly(nvars, {e: QT(d) for e, d in by_exp.items()})
        for des, by_exp in acc.items()
    }


def descent_class_poly(mu: Partition, descents: Iterable[Cell], nvars: int) -> XPoly:
    """The generating function of one descent class (q counts all attacking
    inversion pairs, with no arm correction and no t)."""
    mu = check_partition(mu)
    target = _check_descent_cells(mu, descents)
    sd = shape_data(mu)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product(range(1, nvars + 1), repeat=sum(mu)):
        des = frozenset(sd.cells[p] for p in word_descent_positions(word, sd))
        if des != target:
            continue
        pairs = word_attack_inversions(word, sd)
        e = monomial_exponents(word, nvars)
        inner = acc.setdefault(e, {})
        inner[(pairs, 0)] = inner.get((pairs, 0), 0) + 1
    return XPoly(nvars, {e: QT(d) for e, d in acc.items()})


def descent_class_weight(mu: Partition, descents: Iterable[Cell]) -> QT:
    """The prefactor q^-a(D) t^maj(D) tying descent classes back together:
    maj(D) sums leg+1 and a(D) sums arms over the chosen cells."""
    mu = check_partition(mu)
    chosen = _check_descent_cells(mu, descents)
    maj = sum(leg(mu, c) + 1 for c in chosen)
    a = sum(arm(mu, c) for c in chosen)
    return QT({(-a, maj): 1})


def plethysm_q_minus_one(mu: Partition, nvars: int) -> XPoly:
    """Signed sum (-1)^#barred q^(#plain+inv) t^maj x^|sigma| over signed
    fillings in the interleaved order: the substitution X -> X(q-1)."""
    return _signed_plethysm(mu, nvars, ORDER1, q_side=True)


def plethysm_t_minus_one(mu: Partition, nvars: int) -> XPoly:
    """Signed sum (-1)^#barred q^inv t^(#plain+maj) x^|sigma| over signed
    fillings in the bars_on_top order: the substitution X -> X(t-1)."""
    return _signed_plethysm(mu, nvars, ORDER2, q_side=False)


def _signed_plethysm(mu: Partition, nvars: int, order: LetterOrder, q_side: bool) -> XPoly:
    mu = check_partition(mu)
    sd = shape_data(mu)
    letters = super_letters(nvars, nvars, order)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product(letters, repeat=sum(mu)):
        maj, inv = word_statistics(word, sd, order)
        barred = sum(1 for x in word if x < 0)
        plain = len(word) - barred
        key = (plain + inv, maj) if q_side else (inv, plain + maj)
        e = monomial_exponents(word, nvars)
        inner = acc.setdefault(e, {})
        inner[key] = inner.get(key, 0) + (-1) ** barred
    return XPoly(nvars, {e: QT(d) for e, d in acc.items()})


def one_minus_u_coeffs(mu: Partition) -> list[QT]:
    """Coefficients of (-u)^d, d = 0..n, in the evaluation of the polynomial
    at the two-letter alphabet {1, 1~} with the barred letter carrying -u."""
    mu = check_partition(mu)
    sd = shape_data(mu)
    n = sum(mu)
    buckets: list[dict[tuple[int, int], int]] = [{} for _ in range(n + 1)]
    for word in product((1, -1), repeat=n):
        maj, inv = word_statistics(word, sd, ORDER1)
        d = sum(1 for x in word if x < 0)
        buckets[d][(inv, maj)] = buckets[d].get((inv, maj), 0) + 1
    return [QT(b) for b in buckets]


def principal_monomials(mu: Partition) -> tuple[tuple[int, int], ...]:
    """The multiset of q^(j-1) t^(i-1) monomial exponents over the cells."""
    return cell_biexponents(mu)


def hook_schur_coeff(mu: Partition, d: int) -> QT:
    """Schur coefficient on the hook (n-d, 1^d): the d-th elementary symmetric
    function of the cell monomials with one copy of 1 removed."""
    mu = check_partition(mu)
    n = sum(mu)
    if not 0 <= d <= max(n - 1, 0):
        raise ValueError(f"hook column length {d} out of range for n = {n}")
    monos = list(cell_biexponents(mu))
    monos.remove((0, 0))
    return elementary_coeffs(monos)[d]


def check_conjugate_duality(mu: Partition) -> bool:
    """Swapping q and t in every Schur coefficient matches the conjugate shape."""
    mu = check_partition(mu)
    ours = macdonald(mu).schur_vec
    theirs = macdonald(conjugate(mu)).schur_vec
    return {lam: c.swap_qt() for lam, c in ours.items()} == theirs
