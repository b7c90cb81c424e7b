"""Named verification suites behind the command line `verify` subcommand.

Each suite exercises one family of identities at configurable desk-scale
bounds and returns (label, passed) pairs; nothing here is needed to compute
polynomials. Randomized checks take an explicit seed so reruns are
reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .crystal import (
    check_fiber_sizes,
    check_filling_operators,
    check_recording_preserved,
    check_unique_yamanouchi,
    check_word_axioms,
    rectify,
    two_column_kostka,
)
from .fillings import (
    ORDER1,
    ORDER2,
    Filling,
    cocharge_word,
    descent_cells,
    inv,
    maj,
    super_fillings,
)
from .involutions import (
    attack_cancellation_holds,
    attack_involution,
    is_attack_fixed,
    is_row_bound_fixed,
    row_bound_cancellation_holds,
    row_bound_involution,
)
from .llt import (
    beta_recursion_parts,
    binary_inversion_poly,
    check_ribbon_factorization,
    check_transpose_identity,
    check_transpose_schur,
)
from .macdonald import (
    check_conjugate_duality,
    descent_class_polys,
    descent_class_weight,
    hook_schur_coeff,
    macdonald,
    macdonald_in_x,
    one_minus_u_coeffs,
    plethysm_q_minus_one,
    plethysm_t_minus_one,
    principal_monomials,
)
from .qtring import QT, elementary_coeffs
from .shapes import (
    Partition,
    conjugate,
    dominance_leq,
    partitions,
    reading_cells,
    ribbon_from_descents,
)
from .special import (
    cocharge,
    eval_alpha,
    hall_littlewood_schur,
    integral_form_from_macdonald,
    integral_form_in_x,
    inv_zero_filling,
    jack_alpha_in_x,
    jack_limit,
)
from .symfunc import XPoly, syt_count, to_m_basis

Check = tuple[str, bool]


def _all_partitions(n_max: int):
    for n in range(1, n_max + 1):
        yield from partitions(n)


def suite_axioms(n_max: int = 4) -> list[Check]:
    """Normalization, symmetry, positivity, duality, counting, substitutions."""
    norm = sym = pos = counts = dual = units = hooks = qside = tside = True
    for mu in _all_partitions(n_max):
        n = sum(mu)
        res = macdonald(mu, guard=max(n, 8))
        lead = (n,) + (0,) * (n - 1)
        norm &= res.x_poly.coefficient(lead) == QT.one()
        sym &= res.x_poly.is_symmetric()
        for lam, c in res.schur_vec.items():
            pos &= c.is_polynomial() and c.has_nonnegative_coefficients()
            counts &= c.sum_of_coefficients() == syt_count(lam)
        dual &= check_conjugate_duality(mu)
        units &= one_minus_u_coeffs(mu) == elementary_coeffs(principal_monomials(mu))
        for d in range(n):
            hook = (n - d,) + (1,) * d
            hooks &= res.schur_vec.get(hook, QT.zero()) == hook_schur_coeff(mu, d)
        qsupp = to_m_basis(plethysm_q_minus_one(mu, n))
        qside &= all(dominance_leq(rho, conjugate(mu)) for rho in qsupp)
        tsupp = to_m_basis(plethysm_t_minus_one(mu, n))
        tside &= all(dominance_leq(rho, mu) for rho in tsupp)
    return [
        (f"leading x1^n coefficient is 1 (n <= {n_max})", norm),
        (f"filling sums are symmetric polynomials (n <= {n_max})", sym),
        (f"Schur coefficients lie in N[q,t] (n <= {n_max})", pos),
        (f"Schur coefficients at q = t = 1 count standard tableaux (n <= {n_max})", counts),
        (f"conjugating the shape swaps q and t (n <= {n_max})", dual),
        (f"two-letter signed coefficients are elementary functions of the cell monomials (n <= {n_max})", units),
        (f"hook coefficients drop one unit cell monomial (n <= {n_max})", hooks),
        (f"q-substitution support dominated by the conjugate shape (n <= {n_max})", qside),
        (f"t-substitution support dominated by the shape (n <= {n_max})", tside),
    ]


def suite_involutions(n_max: int = 3, alphabet: int = 2) -> list[Check]:
    """Both sign-flipping maps: involutivity, preserved statistics, collapse."""
    invol = fixed_sets = weights = collapse = True
    for mu in _all_partitions(n_max):
        for f in super_fillings(mu, alphabet, alphabet):
            astep = attack_involution(f)
            invol &= attack_involution(astep.after).after == f
            fixed_sets &= astep.is_fixed == is_attack_fixed(f)
            rstep = row_bound_involution(f)
            invol &= row_bound_involution(rstep.after).after == f
            fixed_sets &= rstep.is_fixed == is_row_bound_fixed(f)
            weights &= _attack_weights_match(f, astep) and _row_weights_match(f, rstep)
        collapse &= attack_cancellation_holds(mu, alphabet, alphabet)
        collapse &= row_bound_cancellation_holds(mu, alphabet, alphabet)
    return [
        (f"both maps are involutions (n <= {n_max}, alphabet {alphabet})", invol),
        (f"fixed points are the non-attacking / row-bounded fillings (n <= {n_max})", fixed_sets),
        (f"descents, majors and weights survive off the fixed sets (n <= {n_max})", weights),
        (f"signed sums collapse onto fixed points (n <= {n_max})", collapse),
    ]


def _barred(f: Filling) -> int:
    return sum(1 for x in f.word if x < 0)


def _plain(f: Filling) -> int:
    return sum(1 for x in f.word if x > 0)


def _attack_weights_match(f: Filling, step) -> bool:
    if step.is_fixed:
        return True
    g = step.after
    return (
        descent_cells(f, ORDER1) == descent_cells(g, ORDER1)
        and maj(f, ORDER1) == maj(g, ORDER1)
        and _plain(f) + inv(f, ORDER1) == _plain(g) + inv(g, ORDER1)
        and abs(_barred(f) - _barred(g)) == 1
    )


def _row_weights_match(f: Filling, step) -> bool:
    if step.is_fixed:
        return True
    g = step.after
    return (
        inv(f, ORDER2) == inv(g, ORDER2)
        and _plain(f) + maj(f, ORDER2) == _plain(g) + maj(g, ORDER2)
        and abs(_barred(f) - _barred(g)) == 1
    )


def _random_increasing_fractions(rng: random.Random, length: int) -> tuple[Fraction, ...]:
    values: set[Fraction] = set()
    while len(values) < length:
        values.add(Fraction(rng.randint(-24, 24), rng.randint(1, 6)))
    return tuple(sorted(values))


def _beta_step_holds(betas: tuple[Fraction, ...]) -> bool:
    if not betas:
        return True
    g = binary_inversion_poly(betas)
    parts = beta_recursion_parts(betas)
    if parts is None:
        x1_plus_x2 = XPoly(2, {(1, 0): QT.one(), (0, 1): QT.one()})
        return g == x1_plus_x2 * binary_inversion_poly(betas[:-1])
    r, alpha, gamma = parts
    factor = XPoly(2, {(1, 1): QT.q(r) - QT.q(r - 1)})
    return g - binary_inversion_poly(alpha) == factor * binary_inversion_poly(gamma)


def suite_llt(
    n_max: int = 3,
    samples: int = 50,
    beta_len: int = 8,
    seed: int = 94114,
) -> list[Check]:
    """Ribbon descent classes, tuple transposition, the two-variable recursion."""
    rng = random.Random(seed)
    ribbons = reassembly = True
    for mu in _all_partitions(n_max):
        n = sum(mu)
        upper = [c for c in reading_cells(mu) if c[0] >= 2]
        for k in range(len(upper) + 1):
            for chosen in combinations(upper, k):
                ribbons &= check_ribbon_factorization(mu, chosen, n)
        total = XPoly.zero(n)
        for des, f_poly in descent_class_polys(mu, n).items():
            total = total + f_poly.scaled(descent_class_weight(mu, des))
        reassembly &= total == macdonald_in_x(mu, n)
    transpose = schur_form = True
    for _ in range(8):
        k = rng.randint(1, 3)
        shapes = []
        for _ in range(k):
            length = rng.randint(1, 3)
            des = {i for i in range(2, length + 1) if rng.random() < 0.5}
            shapes.append(ribbon_from_descents(length, des))
        shapes = tuple(shapes)
        ncells = sum(s.size() for s in shapes)
        transpose &= check_transpose_identity(shapes, 2)
        schur_form &= check_transpose_schur(shapes, ncells)
    betas_ok = True
    for _ in range(samples):
        length = rng.randint(2, beta_len)
        betas_ok &= _beta_step_holds(_random_increasing_fractions(rng, length))
    return [
        (f"descent classes factor through ribbon tuples (n <= {n_max})", ribbons),
        (f"descent classes reassemble the filling sum (n <= {n_max})", reassembly),
        ("transposing a tuple inverts q against the all-barred evaluation", transpose),
        ("the Schur form of the transpose identity conjugates labels", schur_form),
        (f"two-variable recursion holds on {samples} random sequences", betas_ok),
    ]


def suite_cocharge(n_max: int = 4, samples: int = 200, seed: int = 94114) -> list[Check]:
    """The t-only column and the cocharge statistic."""
    rng = random.Random(seed)
    column = True
    for mu in _all_partitions(n_max):
        try:
            hall_littlewood_schur(mu)
        except RuntimeError:
            column = False
    majors = True
    for _ in range(samples):
        n = rng.randint(1, 6)
        mu = rng.choice(partitions(n))
        rows = [[rng.randint(1, 8) for _ in range(part)] for part in mu]
        f = inv_zero_filling(mu, rows)
        if inv(f) != 0 or maj(f) != cocharge(cocharge_word(f)):
            majors = False
    plactic = True
    for _ in range(samples):
        n = rng.randint(1, 7)
        lam = rng.choice(partitions(n))
        letters = [a for a, c in enumerate(lam, start=1) for _ in range(c)]
        rng.shuffle(letters)
        plactic &= cocharge(tuple(letters)) == cocharge(rectify(letters))
    return [
        (f"q = 0 Schur column equals the cocharge sum (n <= {n_max})", column),
        (f"major index equals cocharge of the content word on {samples} inversion-free fillings", majors),
        (f"cocharge is constant on Knuth classes ({samples} samples)", plactic),
    ]


def suite_jack(n_max: int = 3) -> list[Check]:
    """Integral form routes and the one-parameter limit."""
    routes = limits = True
    for mu in _all_partitions(n_max):
        n = sum(mu)
        routes &= integral_form_in_x(mu, n) == integral_form_from_macdonald(mu, n)
        direct = jack_alpha_in_x(mu, n)
        for a in (1, 2, 3):
            limits &= eval_alpha(direct, a) == jack_limit(mu, n, a)
    return [
        (f"integral form: explicit product formula matches the signed route (n <= {n_max})", routes),
        (f"one-parameter limit matches the product formula at 1, 2, 3 (n <= {n_max})", limits),
    ]


def suite_crystal(
    n_max: int = 4,
    word_len: int = 5,
    alphabet: int = 3,
    yamanouchi_len: int = 5,
) -> list[Check]:
    """Word operators, recording tableaux, and the two-column rule."""
    axioms = all(
        check_word_axioms(l, a)
        for l in range(1, word_len + 1)
        for a in range(2, alphabet + 1)
    )
    recording = check_recording_preserved(word_len, alphabet)
    unique = all(
        check_unique_yamanouchi(l, l) for l in range(1, yamanouchi_len + 1)
    )
    operators = kostka = True
    for mu in _all_partitions(n_max):
        if mu[0] > 2:
            continue
        operators &= check_filling_operators(mu, 3)
        table = macdonald(mu).schur_vec
        for lam in partitions(sum(mu)):
            kostka &= two_column_kostka(lam, mu) == table.get(lam, QT.zero())
    fibers = check_fiber_sizes(min(word_len, 5), min(alphabet, 3))
    return [
        (f"raising and lowering are inverse content shifts (length <= {word_len})", axioms),
        (f"raising preserves the recording tableau (length {word_len}, alphabet {alphabet})", recording),
        (f"each recording fiber holds one Yamanouchi word (length <= {yamanouchi_len})", unique),
        (f"two-column operators pair with word operators and fix statistics (n <= {n_max})", operators),
        (f"two-column Yamanouchi sums reproduce Schur coefficients (n <= {n_max})", kostka),
        ("rectification fibers have standard-tableau cardinality", fibers),
    ]


SUITES = {
    "axioms": suite_axioms,
    "involutions": suite_involutions,
    "llt": suite_llt,
    "cocharge": suite_cocharge,
    "jack": suite_jack,
    "crystal": suite_crystal,
}


def run_suite(name: str, **bounds) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn = SUITES[name]
    import inspect

    allowed = set(inspect.signature(fn).parameters)
    chosen = {k: v for k, v in bounds.items() if k in allowed and v is not None}
    return fn(**chosen)
