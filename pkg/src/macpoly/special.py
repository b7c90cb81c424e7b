"""Specializations: Hall-Littlewood via cocharge, and the Jack family.

The q = 0 face of the two-parameter family is computed along two independent
routes (killing q in the Schur table, and summing t^cocharge over tableaux)
that must agree. The Jack side realizes the integral form both directly as a
weighted sum over non-attacking fillings of the conjugate diagram and through
the signed-alphabet plethysm of the modified polynomial, then degenerates to
the classical one-parameter family by exact division before taking t -> 1.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .fillings import (
    ORDER1,
    Filling,
    positive_word_statistics,
    shape_data,
    super_letters,
    word_statistics,
)
from .macdonald import macdonald
from .qtring import QT, AlphaPoly
from .shapes import Partition, check_partition, conjugate, partitions, weighted_size
from .symfunc import (
    XPoly,
    monomial_exponents,
    ssyt_rows,
    tableau_reading_word,
    to_m_basis,
)


def _split_cocharge(word: Sequence[int]) -> int:
    """Cocharge of a word whose letters form a permutation of 1..n: the sum
    of n - k over the letters k whose successor k+1 occurs further left."""
    n = len(word)
    where = {x: p for p, x in enumerate(word)}
    return sum(n - k for k in range(1, n) if where[k + 1] < where[k])


def cocharge(word: Iterable[int]) -> int:
    """Lascoux-Schutzenberger cocharge of a word with partition content.

    The standard subword through each copy of 1 is extracted by scanning
    leftward (cyclically) for the next larger letter; cocharge adds up over
    the extracted subwords.
    """
    word = tuple(int(x) for x in word)
    if not word:
        return 0
    counts = Counter(word)
    content = tuple(counts[k] for k in sorted(counts))
    if sorted(counts) != list(range(1, len(counts) + 1)) or any(
        counts[k] < counts[k + 1] for k in range(1, len(counts))
    ):
        raise ValueError(f"word content must be a partition: {dict(counts)}")
    if content and all(c == 1 for c in content):
        return _split_cocharge(word)
    # peel off the standard subword through the rightmost 1
    top = len(counts)
    positions = []
    k = max(p for p, x in enumerate(word) if x == 1)
    positions.append(k)
    for letter in range(2, top + 1):
        earlier = [p for p, x in enumerate(word) if x == letter and p < k]
        k = max(earlier) if earlier else max(p for p, x in enumerate(word) if x == letter)
        positions.append(k)
    taken = set(positions)
    subword = tuple(word[p] for p in sorted(taken))
    rest = tuple(x for p, x in enumerate(word) if p not in taken)
    return _split_cocharge(subword) + cocharge(rest)


def inv_zero_filling(mu: Partition, row_multisets: Sequence[Iterable[int]]) -> Filling:
    """The unique inversion-free positive filling with prescribed row contents.

    Row 1 is its multiset sorted increasingly; every higher cell receives the
    smallest unused entry of its row exceeding the entry below it, falling
    back to the smallest unused entry when none exceeds it.
    """
    mu = check_partition(mu)
    if len(row_multisets) != len(mu):
        raise ValueError("one multiset per row is required")
    rows_bottom_up: list[list[int]] = []
    for i, bag in enumerate(row_multisets):
        bag = sorted(int(x) for x in bag)
        if len(bag) != mu[i]:
            raise ValueError(f"row {i + 1} needs {mu[i]} entries, got {len(bag)}")
        if any(x <= 0 for x in bag):
            raise ValueError("entries must be positive")
        if i == 0:
            rows_bottom_up.append(bag)
            continue
        remaining = list(bag)
        row = []
        for j in range(mu[i]):
            below = rows_bottom_up[i - 1][j]
            above = [x for x in remaining if x > below]
            pick = min(above) if above else min(remaining)
            remaining.remove(pick)
            row.append(pick)
        rows_bottom_up.append(row)
    return Filling.from_rows(list(reversed(rows_bottom_up)))


def cocharge_schur_vector(mu: Partition) -> dict[Partition, QT]:
    """Sum of t^cocharge over semistandard tableaux of content mu, shape by shape."""
    mu = check_partition(mu)
    n = sum(mu)
    out: dict[Partition, QT] = {}
    for lam in partitions(n):
        terms: dict[tuple[int, int], int] = {}
        for rows in ssyt_rows(lam, max(len(mu), 1), content=mu):
            cc = cocharge(tableau_reading_word(rows))
            terms[(0, cc)] = terms.get((0, cc), 0) + 1
        c = QT(terms)
        if c:
            out[lam] = c
    return out


def hall_littlewood_schur(mu: Partition) -> dict[Partition, QT]:
    """The q = 0 column of the Schur table; checked against the cocharge sum."""
    mu = check_partition(mu)
    from_table = {
        lam: QT({e: c for e, c in qt.terms.items() if e[0] == 0})
        for lam, qt in macdonald(mu).schur_vec.items()
    }
    from_table = {lam: c for lam, c in from_table.items() if c}
    from_cocharge = cocharge_schur_vector(mu)
    if from_table != from_cocharge:
        raise RuntimeError(
            f"cocharge route disagrees with the q = 0 Schur table for {mu}"
        )
    return from_table


# ---------------------------------------------------------------------------
# the Jack integral form and its one-parameter limit

def integral_form_in_x(mu: Partition, nvars: int) -> XPoly:
    """Direct sum over non-attacking positive fillings of the conjugate shape.

    Each filling tau contributes q^maj t^(n(mu) - inv) x^tau times a product
    of (1 - q^(leg+1) t^(arm+1)) over cells agreeing with the cell below and
    (1 - t) over the remaining cells, bottom row included in the latter.
    """
    mu = check_partition(mu)
    shape = conjugate(mu)
    sd = shape_data(shape)
    nmu = weighted_size(mu)
    n = sum(mu)
    acc: dict[tuple[int, ...], QT] = {}
    one_minus_t = QT.one() - QT.t()
    for word in product(range(1, nvars + 1), repeat=n):
        if any(word[p] == word[p2] for p, p2 in sd.attack_pairs):
            continue
        maj, inv = positive_word_statistics(word, sd)
        weight = QT({(maj, nmu - inv): 1})
        for p, b in enumerate(sd.below):
            if b >= 0 and word[p] == word[b]:
                weight = weight * (
                    QT.one() - QT({(sd.legs[p] + 1, sd.arms[p] + 1): 1})
                )
            else:
                weight = weight * one_minus_t
        e = monomial_exponents(word, nvars)
        acc[e] = acc.get(e, QT.zero()) + weight
    return XPoly(nvars, acc)


def integral_form_from_macdonald(mu: Partition, nvars: int) -> XPoly:
    """The same polynomial through the signed-alphabet plethysm: barred
    letters carry -t x, the maj parameter is inverted, and the whole sum is
    rescaled by t^n(mu); the result must be Laurent-free."""
    mu = check_partition(mu)
    sd = shape_data(mu)
    nmu = weighted_size(mu)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for word in product(super_letters(nvars, nvars, ORDER1), repeat=sum(mu)):
        maj, inv = word_statistics(word, sd, ORDER1)
        barred = sum(1 for x in word if x < 0)
        e = monomial_exponents(word, nvars)
        inner = acc.setdefault(e, {})
        key = (inv, nmu + barred - maj)
        inner[key] = inner.get(key, 0) + (-1) ** barred
    out = XPoly(nvars, {e: QT(d) for e, d in acc.items()})
    bad = [c for c in out.terms.values() if not c.is_polynomial()]
    if bad:
        raise RuntimeError(f"integral form for {mu} kept a negative exponent")
    return out


def integral_form_m_vec(mu: Partition, nvars: int | None = None) -> dict[Partition, QT]:
    mu = check_partition(mu)
    n = sum(mu)
    return to_m_basis(integral_form_in_x(mu, nvars if nvars is not None else max(n, 1)))


def jack_alpha_in_x(mu: Partition, nvars: int) -> XPoly:
    """The one-parameter integral-form family, coefficients in Z[alpha]:
    non-attacking fillings of the conjugate shape where each cell agreeing
    with its southern neighbour contributes alpha*(leg+1) + arm + 1."""
    mu = check_partition(mu)
    shape = conjugate(mu)
    sd = shape_data(shape)
    acc: dict[tuple[int, ...], AlphaPoly] = {}
    for word in product(range(1, nvars + 1), repeat=sum(mu)):
        if any(word[p] == word[p2] for p, p2 in sd.attack_pairs):
            continue
        weight = AlphaPoly.one()
        for p, b in enumerate(sd.below):
            if b >= 0 and word[p] == word[b]:
                weight = weight * AlphaPoly.linear(sd.arms[p] + 1, sd.legs[p] + 1)
        e = monomial_exponents(word, nvars)
        acc[e] = acc.get(e, AlphaPoly.zero()) + weight
    return XPoly(nvars, acc)


def jack_alpha_m_vec(mu: Partition, nvars: int | None = None) -> dict[Partition, AlphaPoly]:
    mu = check_partition(mu)
    n = sum(mu)
    return to_m_basis(jack_alpha_in_x(mu, nvars if nvars is not None else max(n, 1)))


def eval_alpha(f: XPoly, alpha: int) -> XPoly:
    """Evaluate AlphaPoly coefficients at an integer alpha."""
    return f.map_coefficients(lambda c: c.eval_at(alpha))


def jack_limit(mu: Partition, nvars: int, alpha: int) -> XPoly:
    """Degenerate the two-parameter integral form: substitute q -> t^alpha,
    divide by (1 - t)^n exactly, then evaluate at t = 1."""
    mu = check_partition(mu)
    n = sum(mu)
    f = integral_form_in_x(mu, nvars)
    return f.map_coefficients(
        lambda c: c.q_to_t_power(alpha).divide_by_one_minus_t(n).eval_t_one()
    )


# ---------------------------------------------------------------------------
# absolute-value statistics on non-attacking signed fillings

def absolute_inv(filling: Filling) -> int:
    """Inversion triples whose three absolute values are distinct, plus the
    bottom-row inversions, judged on absolute values."""
    sd = shape_data(filling.shape)
    w = [abs(x) for x in filling.word]
    count = sum(1 for p, p2 in sd.bottom_pairs if w[p] > w[p2])
    for pu, pv, pw in sd.triples:
        x, y, z = w[pu], w[pv], w[pw]
        if len({x, y, z}) == 3:
            ind = (1 if x > z else 0) + (1 if z > y else 0) - (1 if x > y else 0)
            if ind == 1:
                count += 1
    return count


def absolute_maj(filling: Filling) -> int:
    """Major index of the absolute-value filling."""
    sd = shape_data(filling.shape)
    w = [abs(x) for x in filling.word]
    return sum(
        sd.legs[p] + 1 for p, b in enumerate(sd.below) if b >= 0 and w[p] > w[b]
    )
