"""Command-line front end.

Every command prints one report: ``{"schema": 1, "command": [...],
"results": [...], "checks": [...], "status": n}`` with ``--format json``,
or an ASCII table with ``--format table`` (the default).  Exit status is 0
on success, 1 when a computation fails or a check does not pass, and 2 for
usage errors and unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .cyclo import CycloNumber, Mu4, snap_fourth_root
from .epsilon import check_functional_equation, local_constant, q_power_half
from .errors import LambdaLocalError, NotAFourthRoot
from .ffield import FiniteField, gauss_sum_bruteforce, gauss_sum_closed_form
from .groups import (
    CATALOG_NAMES,
    abelian_invariants,
    abelianization,
    catalog_group,
    classify_sylow2,
    commutator_subgroup,
    delta_consistency_check,
    group_from_json,
    rk2,
    signature,
    sylow2,
)
from .lambdas import (
    NON_SQUARE,
    SQUARE,
    DispatchContext,
    LambdaValue,
    lambda_dispatch,
    lambda_klein_four,
    lambda_odd_galois,
    lambda_square_class_extension,
    lambda_tame_quadratic,
    lambda_unramified,
    q2_quadratic_catalog,
    tame_quadratic_crosscheck,
)
from .padic import (
    Q2_QUADRATIC_TABLE,
    AddChar,
    ExtensionDescriptor,
    LocalField,
    MultChar,
    quadratic_characters,
)
from .verify import SCOPES, run_checks

SCHEMA = 1
ODD_P_LABELS = ("unramified", "ramified+", "ramified-")


class UsageError(Exception):
    """Bad flags or unreadable input; exit status 2."""


class Report:
    def __init__(self, command: Sequence[str]):
        self.command = list(command)
        self.results: list[dict] = []
        self.checks: list[dict] = []

    def check(self, name: str, passed: bool, expected: Any = "", got: Any = "") -> None:
        self.checks.append({"name": name, "pass": bool(passed), "expected": str(expected), "got": str(got)})

    @property
    def status(self) -> int:
        return 0 if all(c["pass"] for c in self.checks) else 1

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "results": self.results,
            "checks": self.checks,
            "status": self.status,
        }


# -- formatting ---------------------------------------------------------------

def _numeric(z: complex) -> list[float]:
    # +0.0 folds -0.0 so output is byte-stable
    return [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]


def pretty_sqrt_multiple(value: CycloNumber, p: int, k: int) -> str:
    """Write ``value`` as u * p^{k/2} with u a fourth root of unity, if it is one."""
    try:
        u = snap_fourth_root(value / q_power_half(p, k))
    except NotAFourthRoot:
        return repr(value)
    whole, odd = divmod(k, 2)
    parts = []
    if whole:
        parts.append(str(p ** whole))
    if odd:
        parts.append(f"sqrt({p})")
    mag = "*".join(parts) or "1"
    if str(u) == "1":
        return mag
    if str(u) == "-1":
        return "-" + mag
    return f"{u}*{mag}" if mag != "1" else str(u)


def pretty_cyclo(value: CycloNumber) -> str:
    v = value.simplified()
    if v.is_rational():
        return str(v.rational_value())
    try:
        return str(snap_fourth_root(v))
    except NotAFourthRoot:
        return repr(v)


def lambda_record(lam: LambdaValue, inputs: dict) -> dict:
    return {
        "value": str(lam),
        "kind": lam.kind,
        "provenance_theorem": ",".join(lam.provenance),
        "inputs": inputs,
    }


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    return str(v)


def render_table(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)"
    cols: list[str] = []
    for row in rows:
        cols += [k for k in row if k not in cols]
    cells = [[_cell(row.get(c, "")) for c in cols] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
    line = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    out = [line, "| " + " | ".join(c.ljust(w) for c, w in zip(cols, widths)) + " |", line]
    out += ["| " + " | ".join(x.ljust(w) for x, w in zip(r, widths)) + " |" for r in cells]
    out.append(line)
    return "\n".join(out)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, sort_keys=True, ensure_ascii=True)
    parts = [render_table(report.results)]
    if report.checks:
        parts.append(render_table(report.checks))
    failed = sum(not c["pass"] for c in report.checks)
    parts.append(f"checks: {len(report.checks) - failed} passed, {failed} failed")
    return "\n".join(parts)


# -- input parsing ------------------------------------------------------------

def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value == 0:
        raise argparse.ArgumentTypeError("shift must be nonzero")
    return value


def _load_json(text: str) -> Any:
    """Inline JSON, or ``@path`` / a path to a JSON file."""
    source = text
    if text.startswith("@"):
        source = text[1:]
    if text.startswith("@") or not text.lstrip().startswith(("{", "[")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc.msg} at line {exc.lineno}")


def parse_character(spec: str, p: int) -> MultChar:
    """A character from JSON or a label (chi1..chi7 over Q_2, unramified/ramified+/ramified- otherwise)."""
    if p == 2:
        for row in Q2_QUADRATIC_TABLE:
            if spec == row["label"]:
                return quadratic_characters(2)[Q2_QUADRATIC_TABLE.index(row)]
    elif spec in ODD_P_LABELS:
        return quadratic_characters(p)[ODD_P_LABELS.index(spec)]
    data = _load_json(spec)
    if not isinstance(data, dict):
        raise UsageError("character JSON must be an object")
    if int(data.get("p", p)) != p:
        raise UsageError(f"character is over p = {data['p']} but --p is {p}")
    return MultChar.from_json(data, p)


def _load_group(args):
    if args.catalog is not None:
        return catalog_group(args.catalog)
    data = _load_json("@" + args.input)
    if not isinstance(data, dict):
        raise UsageError("group JSON must be an object")
    return group_from_json(data)


# -- commands -----------------------------------------------------------------

def cmd_gauss(args, report: Report) -> None:
    p, s = args.p, args.s
    methods = ["brute"] if args.brute else ["closed"] if args.closed else ["brute", "closed"]
    values = {}
    for method in methods:
        g = gauss_sum_bruteforce(FiniteField(p, s)) if method == "brute" else gauss_sum_closed_form(p, s)
        values[method] = g
        report.results.append(
            {
                "p": p,
                "s": s,
                "method": method,
                "value": pretty_sqrt_multiple(g, p, s),
                "numeric": _numeric(g.eval_complex()),
            }
        )
    if len(values) == 2:
        report.check("brute_equals_closed", values["brute"] == values["closed"],
                     report.results[1]["value"], report.results[0]["value"])


def cmd_epsilon(args, report: Report) -> None:
    p = args.p
    chi = parse_character(args.chi, p)
    psi = AddChar(LocalField.qp(p), args.psi_shift)
    w = local_constant(chi, psi)
    fe = check_functional_equation(chi, psi)
    fe_product = w.value * local_constant(chi.inverse(), psi).value
    unit = w.has_unit_modulus()
    rec = {
        "chi": chi.to_json(),
        "psi_shift": str(args.psi_shift),
        "value": pretty_cyclo(w.value),
        "numeric": _numeric(w.numeric),
        "a": w.a,
        "n_psi": w.n_psi,
        "checks": {"functional_eq": fe, "unit_modulus": unit},
    }
    report.results.append(rec)
    report.check("functional_eq", fe, pretty_cyclo(chi(-1)), pretty_cyclo(fe_product))
    report.check("unit_modulus", unit, 1, pretty_cyclo(w.value * w.value.conjugate()))


def cmd_lambda_unramified(args, report: Report) -> None:
    ext = ExtensionDescriptor.unramified(LocalField.qp(args.p), args.f)
    lam = lambda_unramified(ext, args.n_psi)
    report.results.append(lambda_record(lam, {"p": args.p, "f": args.f, "n_psi": args.n_psi}))


def cmd_lambda_odd(args, report: Report) -> None:
    lam = lambda_odd_galois(args.degree)
    report.results.append(lambda_record(lam, {"degree": args.degree}))


def cmd_lambda_tame_quad(args, report: Report) -> None:
    lam = lambda_tame_quadratic(args.q, args.trace_class, args.psi_case)
    inputs = {"q": args.q, "trace_class": args.trace_class, "psi_case": args.psi_case}
    report.results.append(lambda_record(lam, inputs))


def cmd_lambda_klein(args, report: Report) -> None:
    report.results.append(lambda_record(lambda_klein_four(args.q), {"q": args.q}))


def cmd_lambda_square_class(args, report: Report) -> None:
    tower = (("unramified", args.f),) if args.f > 1 else ()
    F = LocalField(args.p, tower)
    lam = lambda_square_class_extension(F)
    report.results.append(lambda_record(lam, {"p": args.p, "f": args.f, "q": F.q}))


def cmd_lambda_dispatch(args, report: Report) -> None:
    G = _load_group(args)
    ctx = DispatchContext(args.p, args.q or args.p, args.n_psi, None, args.alpha, args.trace_class)
    lam = lambda_dispatch(G, ctx)
    inputs = {
        "group": G.name or f"table of order {G.n}",
        "order": G.n,
        "p": ctx.p,
        "q": ctx.q,
        "n_psi": ctx.n_psi,
        "i_in_F": ctx.i_in_F,
        "alpha": ctx.alpha,
        "trace_class": ctx.trace_class,
    }
    report.results.append(lambda_record(lam, inputs))


def cmd_lambda_catalog(args, report: Report) -> None:
    rows = q2_quadratic_catalog(args.psi_shift)
    product = Mu4()
    for row in rows:
        product = product * row["lambda"]
        report.results.append(
            {
                "label": row["label"],
                "field": row["field"],
                "a": row["a"],
                "chi(2)": row["chi"]["2"],
                "chi(3)": row["chi"]["3"],
                "chi(5)": row["chi"]["5"],
                "norm_group": row["norm_group"],
                "value": str(row["lambda"]),
                "provenance_theorem": row["provenance"],
                "inputs": {"psi_shift": str(args.psi_shift)},
            }
        )
        report.check(f"{row['label']} tabulated", row["lambda"] == row["expected"], row["expected"], row["lambda"])
    report.results.append({"label": "product", "value": str(product), "provenance_theorem": "product-formula"})
    report.check("product", product == Mu4(), "1", product)


def cmd_lambda_crosscheck(args, report: Report) -> None:
    out = tame_quadratic_crosscheck(args.p, args.n_psi)
    checks = out.pop("checks")
    out.pop("ok")
    report.results.append(out)
    for name, ok in checks.items():
        report.check(name, ok, True, ok)


def cmd_group_classify(args, report: Report) -> None:
    G = _load_group(args)
    S = sylow2(G)
    cls = classify_sylow2(S)
    Gp = commutator_subgroup(G)
    inv = abelian_invariants(abelianization(G))
    delta = delta_consistency_check(G)
    report.results.append(
        {
            "group": G.name or f"table of order {G.n}",
            "order": G.n,
            "sylow2_order": S.order,
            "case": cls.case,
            "contains_klein": cls.contains_klein,
            "label": str(cls),
            "abelian_invariants": list(inv),
            "rk2": rk2(inv),
            "derived_order": Gp.order,
            "delta_trivial": not delta["delta_nontrivial"],
        }
    )
    report.check("delta_consistency", delta["ok"], True, delta["ok"])


def cmd_catalog(args, report: Report) -> None:
    if args.what == "q2":
        cmd_lambda_catalog(args, report)
        return
    for name in CATALOG_NAMES + ("Z32",):
        G = catalog_group(name)
        S = sylow2(G)
        report.results.append(
            {
                "name": name,
                "order": G.n,
                "sylow2": str(classify_sylow2(S)),
                "invariants": list(signature(G)[4]),
            }
        )


def cmd_verify(args, report: Report) -> None:
    results = run_checks(args.scope)
    for r in results:
        report.check(f"{r.id} {r.name}", r.ok, r.expected, r.got if r.ok else "; ".join(r.failures[:3]) or r.got)
    failed = sum(not r.ok for r in results)
    report.results.append({"scope": args.scope, "checks": len(results), "passed": len(results) - failed, "failed": failed})


# -- parser -------------------------------------------------------------------

def _add_group_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", metavar="FILE", help='JSON {"order": n, "table": [[...]]} or {"catalog": name}')
    src.add_argument("--catalog", metavar="NAME", help="built-in group, e.g. Q8, D8, Z4xZ2")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="lambda-local", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gauss", parents=[common], help="quadratic Gauss sum over GF(p^s)")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--s", type=int, default=1)
    how = g.add_mutually_exclusive_group()
    how.add_argument("--brute", action="store_true")
    how.add_argument("--closed", action="store_true")
    g.set_defaults(func=cmd_gauss)

    e = sub.add_parser("epsilon", parents=[common], help="local constant W(chi, psi) over Q_p")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--chi", required=True, help="JSON, @file, or a label")
    e.add_argument("--psi-shift", type=_fraction, default=Fraction(1))
    e.set_defaults(func=cmd_epsilon)

    lam = sub.add_parser("lambda", parents=[common], help="lambda-function formulas")
    ls = lam.add_subparsers(dest="which", required=True)

    x = ls.add_parser("unramified", parents=[common])
    x.add_argument("--p", type=int, required=True)
    x.add_argument("--f", type=int, default=2)
    x.add_argument("--n-psi", type=int, default=0)
    x.set_defaults(func=cmd_lambda_unramified)

    x = ls.add_parser("odd", parents=[common])
    x.add_argument("--degree", type=int, required=True)
    x.set_defaults(func=cmd_lambda_odd)

    x = ls.add_parser("tame-quad", parents=[common])
    x.add_argument("--q", type=int, required=True)
    x.add_argument("--trace-class", choices=(SQUARE, NON_SQUARE), default=SQUARE)
    x.add_argument("--psi-case", choices=("canonical", "conductor-minus-one"), default="canonical")
    x.set_defaults(func=cmd_lambda_tame_quad)

    x = ls.add_parser("klein", parents=[common])
    x.add_argument("--q", type=int, required=True)
    x.set_defaults(func=cmd_lambda_klein)

    x = ls.add_parser("square-class", parents=[common])
    x.add_argument("--p", type=int, required=True)
    x.add_argument("--f", type=int, default=1, help="residue degree of F over Q_p")
    x.set_defaults(func=cmd_lambda_square_class)

    x = ls.add_parser("dispatch", parents=[common])
    _add_group_source(x)
    x.add_argument("--p", type=int, required=True)
    x.add_argument("--q", type=int)
    x.add_argument("--n-psi", type=int, default=0)
    x.add_argument("--alpha", choices=("unramified", "tame"))
    x.add_argument("--trace-class", choices=(SQUARE, NON_SQUARE))
    x.set_defaults(func=cmd_lambda_dispatch)

    x = ls.add_parser("catalog", parents=[common])
    x.add_argument("what", choices=("q2",))
    x.add_argument("--psi-shift", type=_fraction, default=Fraction(1))
    x.set_defaults(func=cmd_lambda_catalog)

    x = ls.add_parser("crosscheck", parents=[common])
    x.add_argument("--p", type=int, required=True)
    x.add_argument("--n-psi", type=int, default=0)
    x.set_defaults(func=cmd_lambda_crosscheck)

    grp = sub.add_parser("group", parents=[common], help="finite-group analysis")
    gs = grp.add_subparsers(dest="which", required=True)
    x = gs.add_parser("classify", parents=[common])
    _add_group_source(x)
    x.set_defaults(func=cmd_group_classify)

    c = sub.add_parser("catalog", parents=[common], help="built-in tables")
    c.add_argument("what", choices=("q2", "groups"))
    c.add_argument("--psi-shift", type=_fraction, default=Fraction(1))
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.add_argument("scope", nargs="?", choices=tuple(sorted(SCOPES)), default="all")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "table")
    report = Report(argv)
    try:
        args.func(args, report)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LambdaLocalError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(render(report, fmt))
    return report.status


if __name__ == "__main__":
    sys.exit(main())
