"""Command line front end.

Sizes are guarded because every computation enumerates all fillings: a single
shape is capped at 8 cells and whole tables at n = 6 unless --force-guard is
given. Exit status is 0 on success, 1 when a verification suite reports a
failure, and 2 for usage errors (including tripped guards).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from multiprocessing import Pool

from . import __version__
from .crystal import two_column_kostka
from .llt import llt_poly
from .macdonald import macdonald, macdonald_in_x
from .qtring import QT
from .shapes import (
    Partition,
    format_partition,
    parse_partition,
    partitions,
    ribbon_tuple,
)
from .special import hall_littlewood_schur, integral_form_m_vec, jack_limit
from .symfunc import XPoly, schur_expand, to_m_basis
from .verify import SUITES, run_suite

SINGLE_GUARD = 8
TABLE_GUARD = 6
VERIFY_GUARD = 6
CACHE_SCHEMA = 1
CACHE_ENV = "MACPOLY_CACHE_DIR"


def _parse_mu(parser: argparse.ArgumentParser, text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        parser.error(str(exc))


def _guard(parser: argparse.ArgumentParser, n: int, limit: int, forced: bool) -> None:
    if n > limit and not forced:
        parser.error(
            f"size {n} exceeds the guard of {limit} cells; pass --force-guard to proceed"
        )


def _coeff_term(c, label: str) -> str:
    s = str(c)
    if s == "1":
        return label
    if isinstance(c, QT) and len(c.terms) > 1:
        return f"({s})*{label}"
    if not isinstance(c, QT) and ("+" in s or s.startswith("-")):
        return f"({s})*{label}"
    return f"{s}*{label}"


def _vec_text(vec: dict[Partition, object], n: int, letter: str) -> str:
    terms = []
    for lam in partitions(n):
        c = vec.get(lam)
        if c:
            terms.append(_coeff_term(c, f"{letter}[{format_partition(lam)}]"))
    return " + ".join(terms) if terms else "0"


def _coeff_json(c):
    return c.to_json() if isinstance(c, QT) else c


def _vec_json(vec: dict[Partition, object], n: int) -> list:
    return [
        [list(lam), _coeff_json(vec[lam])]
        for lam in partitions(n)
        if vec.get(lam)
    ]


def _print_poly(f: XPoly, vec, n: int, basis: str, fmt: str, extra: dict) -> None:
    if fmt == "json":
        payload = dict(extra)
        payload["basis"] = basis
        if basis == "x":
            payload["polynomial"] = f.to_json()
        else:
            payload["terms"] = _vec_json(vec, n)
        print(json.dumps(payload, indent=2))
    elif basis == "x":
        print(f)
    else:
        print(_vec_text(vec, n, "m" if basis == "m" else "s"))


# ---------------------------------------------------------------------------
# subcommands

def _cmd_hmu(parser, args) -> int:
    mu = _parse_mu(parser, args.mu)
    n = sum(mu)
    _guard(parser, n, SINGLE_GUARD, args.force_guard)
    res = macdonald(mu, guard=max(n, 1))
    nvars = args.vars if args.vars is not None else max(n, 1)
    if args.basis == "x":
        f = res.x_poly if nvars == n else macdonald_in_x(mu, nvars)
        vec = None
    else:
        f = None
        vec = res.m_vec if args.basis == "m" else res.schur_vec
    _print_poly(f, vec, n, args.basis, args.format, {"mu": list(mu)})
    return 0


def _kostka_column(mu: Partition) -> list:
    vec = macdonald(mu, guard=sum(mu)).schur_vec
    return [vec[lam].to_json() for lam in partitions(sum(mu))]


def _compute_table(n: int, workers: int) -> dict:
    mus = partitions(n)
    if workers > 1:
        with Pool(workers) as pool:
            columns = pool.map(_kostka_column, mus)
    else:
        columns = [_kostka_column(mu) for mu in mus]
    table = [
        [columns[j][i] for j in range(len(mus))] for i in range(len(mus))
    ]
    return {
        "schema": CACHE_SCHEMA,
        "n": n,
        "partitions": [list(mu) for mu in mus],
        "table": table,
    }


def _load_cached_table(path: str, n: int) -> dict | None:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return None
    if payload.get("schema") != CACHE_SCHEMA or payload.get("n") != n:
        return None
    return payload


def _store_table(path: str, payload: dict) -> None:
    directory = os.path.dirname(path)
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render_table_text(payload: dict) -> str:
    mus = [tuple(p) for p in payload["partitions"]]
    labels = [format_partition(mu) for mu in mus]
    cells = [
        [str(QT.from_json(entry)) for entry in row] for row in payload["table"]
    ]
    corner = "lambda \\ mu"
    widths = [max(len(corner), *(len(l) for l in labels))]
    for j in range(len(mus)):
        widths.append(max(len(labels[j]), *(len(row[j]) for row in cells)))
    lines = []
    header = [corner.ljust(widths[0])] + [
        labels[j].ljust(widths[j + 1]) for j in range(len(mus))
    ]
    lines.append("  ".join(header).rstrip())
    for i, lam in enumerate(labels):
        row = [lam.ljust(widths[0])] + [
            cells[i][j].ljust(widths[j + 1]) for j in range(len(mus))
        ]
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)


def _cmd_kostka_table(parser, args) -> int:
    n = args.n
    if n < 0:
        parser.error("n must be nonnegative")
    _guard(parser, n, TABLE_GUARD, args.force_guard)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    payload = None
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, f"kostka_{n}.json")
        payload = _load_cached_table(path, n)
    if payload is None:
        payload = _compute_table(n, max(args.workers, 1))
        if path:
            _store_table(path, payload)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(_render_table_text(payload))
    return 0


def _parse_descents(parser, text: str):
    cells = []
    if text:
        for chunk in text.split(";"):
            pieces = chunk.split(",")
            if len(pieces) != 2:
                parser.error(f"descent cell {chunk!r} is not of the form i,j")
            try:
                cells.append((int(pieces[0]), int(pieces[1])))
            except ValueError:
                parser.error(f"descent cell {chunk!r} is not numeric")
    return tuple(cells)


def _cmd_llt(parser, args) -> int:
    mu = _parse_mu(parser, args.mu)
    n = sum(mu)
    _guard(parser, n, SINGLE_GUARD, args.force_guard)
    descents = _parse_descents(parser, args.descents)
    try:
        shapes = ribbon_tuple(mu, descents)
    except ValueError as exc:
        parser.error(str(exc))
    nvars = args.vars if args.vars is not None else max(n, 1)
    f = llt_poly(shapes, nvars)
    if args.basis == "schur":
        if nvars < n:
            parser.error(f"Schur output needs at least {n} variables")
        vec = schur_expand(f)
        _print_poly(None, vec, n, "schur", args.format, {"mu": list(mu)})
    else:
        _print_poly(f, None, n, "x", args.format, {"mu": list(mu)})
    return 0


def _cmd_jack(parser, args) -> int:
    mu = _parse_mu(parser, args.mu)
    n = sum(mu)
    _guard(parser, n, SINGLE_GUARD, args.force_guard)
    if args.alpha < 1:
        parser.error("alpha must be a positive integer")
    nvars = args.vars if args.vars is not None else max(n, 1)
    f = jack_limit(mu, nvars, args.alpha)
    if args.basis == "m":
        if nvars < n:
            parser.error(f"monomial output needs at least {n} variables")
        vec = to_m_basis(f)
        _print_poly(None, vec, n, "m", args.format, {"mu": list(mu), "alpha": args.alpha})
    else:
        _print_poly(f, None, n, "x", args.format, {"mu": list(mu), "alpha": args.alpha})
    return 0


def _cmd_jmu(parser, args) -> int:
    mu = _parse_mu(parser, args.mu)
    n = sum(mu)
    _guard(parser, n, SINGLE_GUARD, args.force_guard)
    nvars = args.vars if args.vars is not None else max(n, 1)
    if nvars < n:
        parser.error(f"monomial output needs at least {n} variables")
    vec = integral_form_m_vec(mu, nvars)
    _print_poly(None, vec, n, "m", args.format, {"mu": list(mu)})
    return 0


def _cmd_hall_littlewood(parser, args) -> int:
    mu = _parse_mu(parser, args.mu)
    n = sum(mu)
    _guard(parser, n, SINGLE_GUARD, args.force_guard)
    vec = hall_littlewood_schur(mu)
    _print_poly(None, vec, n, "schur", args.format, {"mu": list(mu)})
    return 0


def _cmd_two_column(parser, args) -> int:
    lam = _parse_mu(parser, args.lam)
    mu = _parse_mu(parser, args.mu)
    _guard(parser, sum(mu), SINGLE_GUARD, args.force_guard)
    if mu and mu[0] > 2:
        parser.error(f"shape {format_partition(mu)} has more than two columns")
    if sum(lam) != sum(mu):
        parser.error("lambda and mu must have the same size")
    coeff = two_column_kostka(lam, mu)
    if args.format == "json":
        print(json.dumps({"lambda": list(lam), "mu": list(mu), "coefficient": coeff.to_json()}, indent=2))
    else:
        print(coeff)
    return 0


def _cmd_verify(parser, args) -> int:
    if args.n_max is not None:
        _guard(parser, args.n_max, VERIFY_GUARD, args.force_guard)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    bounds = {
        "n_max": args.n_max,
        "samples": args.samples,
        "seed": args.seed,
        "alphabet": args.alphabet,
        "word_len": args.word_len,
        "beta_len": args.beta_len,
    }
    failed = 0
    for name in names:
        for label, ok in run_suite(name, **bounds):
            print(f"[{'PASS' if ok else 'FAIL'}] {name}: {label}")
            failed += 0 if ok else 1
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macpoly",
        description="Exact Macdonald polynomial combinatorics from fillings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vars_flag=True):
        p.add_argument("--mu", required=True, help="partition, e.g. 3,2,1")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--force-guard", action="store_true", help="lift the size guard")
        if vars_flag:
            p.add_argument("--vars", type=int, default=None, help="number of x variables")

    p = sub.add_parser("hmu", help="modified Macdonald polynomial of one shape")
    common(p)
    p.add_argument("--basis", choices=("x", "m", "schur"), default="schur")
    p.set_defaults(fn=_cmd_hmu)

    p = sub.add_parser("kostka-table", help="full q,t-Kostka table for one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir", default=None, help=f"cache directory (else ${CACHE_ENV})")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force-guard", action="store_true")
    p.set_defaults(fn=_cmd_kostka_table)

    p = sub.add_parser("llt", help="LLT polynomial of the ribbon tuple of a descent set")
    common(p)
    p.add_argument("--descents", default="", help="cells i,j separated by ';'")
    p.add_argument("--basis", choices=("x", "schur"), default="x")
    p.set_defaults(fn=_cmd_llt)

    p = sub.add_parser("jack", help="one-parameter integral form at integer alpha")
    common(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--basis", choices=("x", "m"), default="m")
    p.set_defaults(fn=_cmd_jack)

    p = sub.add_parser("jmu", help="two-parameter integral form, monomial basis")
    common(p)
    p.set_defaults(fn=_cmd_jmu)

    p = sub.add_parser("hall-littlewood", help="q = 0 Schur expansion")
    common(p, vars_flag=False)
    p.set_defaults(fn=_cmd_hall_littlewood)

    p = sub.add_parser("two-column", help="one Kostka coefficient by the Yamanouchi rule")
    p.add_argument("--lam", "--lambda", dest="lam", required=True, help="row partition")
    p.add_argument("--mu", required=True, help="column partition, at most two columns")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--force-guard", action="store_true")
    p.set_defaults(fn=_cmd_two_column)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("suite", choices=("all",) + tuple(sorted(SUITES)))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--alphabet", type=int, default=None)
    p.add_argument("--word-len", type=int, default=None)
    p.add_argument("--beta-len", type=int, default=None)
    p.add_argument("--force-guard", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(parser, args)


if __name__ == "__main__":
    sys.exit(main())
