"""Acceptance checks shared by ``lambda-local verify`` and the test suite.

Each check returns a :class:`CheckResult`.  Timings are measured but kept
out of the comparable fields so that reports are byte-stable.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .cyclo import Mu4
from .epsilon import check_functional_equation, deligne_constant, local_constant
from .errors import TameImpossible
from .ffield import FiniteField, gauss_sum_bruteforce, gauss_sum_closed_form
from .groups import (
    NONTRIVIAL_CYCLIC,
    catalog_group,
    classify_sylow2,
    commutator_subgroup,
    delta_consistency_check,
    delta_sign_character,
    small_groups,
    sylow2,
    transfer_map,
)
from .lambdas import (
    DispatchContext,
    lambda_dispatch,
    lambda_klein_four,
    q2_quadratic_catalog,
    tame_quadratic_crosscheck,
)
from .padic import AddChar, ExtensionDescriptor, LocalField, conductor_after_trace, quadratic_characters

__all__ = ["CheckResult", "SCOPES", "run_checks", "ALL_CHECKS", "odd_primes"]


@dataclass
class CheckResult:
    id: str
    name: str
    passed: bool
    expected: str = ""
    got: str = ""
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    limit: float | None = None

    @property
    def within_limit(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_limit

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "name": self.name,
            "pass": self.ok,
            "expected": self.expected,
            "got": self.got,
            "failures": self.failures,
        }
        if self.limit is not None:
            out["time_limit_s"] = self.limit
            out["within_time_limit"] = self.within_limit
        return out


def odd_primes(limit: int) -> list[int]:
    return [p for p in range(3, limit + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def timed(fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    return res


# -- AC1 -------------------------------------------------------------------------

Q2_GOLDEN = ("1", "i", "i", "1", "-1", "i", "-i")


def check_q2_golden() -> CheckResult:
    rows = q2_quadratic_catalog()
    got = tuple(str(r["lambda"]) for r in rows)
    prod = Mu4()
    for r in rows:
        prod = prod * r["lambda"]
    failures = [f"{r['field']}: got {r['lambda']}, want {w}" for r, w in zip(rows, Q2_GOLDEN) if str(r["lambda"]) != w]
    if prod != 1:
        failures.append(f"product of the seven values is {prod}")
    return CheckResult(
        "AC1",
        "Q2 quadratic lambda table from epsilon sums",
        not failures,
        expected=", ".join(Q2_GOLDEN) + "; product 1",
        got=", ".join(got) + f"; product {prod}",
        failures=failures,
        limit=1.0,
    )


# -- AC2 -------------------------------------------------------------------------

def check_gauss_oracle(max_p: int = 47, max_s: int = 3) -> CheckResult:
    failures = []
    count = 0
    for p in odd_primes(max_p):
        for s in range(1, max_s + 1):
            brute = gauss_sum_bruteforce(FiniteField(p, s))
            closed = gauss_sum_closed_form(p, s)
            count += 1
            if abs(brute.eval_complex() - closed.eval_complex()) > 1e-8 or brute != closed:
                failures.append(f"p={p} s={s}")
    return CheckResult(
        "AC2",
        f"Gauss sums: brute force = closed form, odd p <= {max_p}, s <= {max_s}",
        not failures,
        expected=f"{count} exact agreements",
        got=f"{count - len(failures)} exact agreements",
        failures=failures,
        limit=30.0,
    )


# -- AC3 -------------------------------------------------------------------------

FE_PRIMES = (3, 5, 7, 11, 13)


def check_functional_equation_all() -> CheckResult:
    failures = []
    count = 0
    for p in (2,) + FE_PRIMES:
        psi = AddChar(LocalField.qp(p))
        for chi in quadratic_characters(p):
            count += 1
            if not check_functional_equation(chi, psi):
                failures.append(str(chi))
    return CheckResult(
        "AC3",
        "W(chi) W(chi^-1) = chi(-1) for quadratic characters of Q2 and Q_p",
        not failures,
        expected=f"{count} identities",
        got=f"{count - len(failures)} identities",
        failures=failures,
    )


# -- AC4 -------------------------------------------------------------------------

KLEIN_PRIMES = (3, 5, 7, 13)


def check_klein_four() -> CheckResult:
    failures = []
    got = []
    for p in KLEIN_PRIMES:
        psi = AddChar(LocalField.qp(p))
        chars = quadratic_characters(p)
        prod = Mu4()
        for chi in chars:
            prod = prod * local_constant(chi, psi).mu4()
        closed = lambda_klein_four(p).value
        deligne = deligne_constant(list(chars), psi)
        got.append(f"p={p}: {prod}")
        if prod != closed:
            failures.append(f"p={p}: epsilon product {prod} vs closed form {closed}")
        if deligne != closed.to_cyclo():
            failures.append(f"p={p}: Deligne constant {deligne!r} vs closed form {closed}")
    return CheckResult(
        "AC4",
        "Klein-four lambda: epsilon product = closed form",
        not failures,
        expected=", ".join(f"p={p}: {lambda_klein_four(p).value}" for p in KLEIN_PRIMES),
        got=", ".join(got),
        failures=failures,
    )


# -- AC5 -------------------------------------------------------------------------

def check_tame_quadratic() -> CheckResult:
    failures = []
    for p in FE_PRIMES:
        for n in (-1, 0, 1):
            rep = tame_quadratic_crosscheck(p, n)
            bad = [k for k, v in rep["checks"].items() if not v]
            if bad:
                failures.append(f"p={p} n={n}: {', '.join(bad)}")
    return CheckResult(
        "AC5",
        "tame quadratic closed form vs Gauss sums and the four-cases table",
        not failures,
        expected="all relations hold",
        got="all relations hold" if not failures else f"{len(failures)} failing rows",
        failures=failures,
    )


# -- AC6 -------------------------------------------------------------------------

def dichotomy_corpus():
    extra = ["Q16", "D8", "Z4xZ4", "Z2^3", "Z32"]
    groups = small_groups()
    names = {G.name for G in groups}
    return groups + [catalog_group(n) for n in extra if n not in names]


def check_group_dichotomy() -> CheckResult:
    failures = []
    corpus = dichotomy_corpus()
    for G in corpus:
        rep = delta_consistency_check(G)
        if not rep["ok"]:
            failures.append(f"{G.name}: {rep}")
    return CheckResult(
        "AC6",
        "Delta_1^G nontrivial <=> Sylow-2 cyclic <=> rk2 = 1 and |G'| odd; power identity",
        not failures,
        expected=f"{len(corpus)} groups consistent",
        got=f"{len(corpus) - len(failures)} groups consistent",
        failures=failures,
        limit=10.0,
    )


def check_gallagher() -> CheckResult:
    """For H normal, Delta_H^G is trivial unless G/H has nontrivial cyclic Sylow-2, then of order 2."""
    failures = []
    for G in dichotomy_corpus():
        for H in G.normal_subgroups:
            delta = delta_sign_character(G, H)
            Q = G.quotient(H)[0]
            cyc = classify_sylow2(sylow2(Q)).case == NONTRIVIAL_CYCLIC
            if cyc != any(x == -1 for x in delta):
                failures.append(f"{G.name} / H of order {H.order}")
    return CheckResult("G1", "Gallagher dichotomy for normal subgroups", not failures, failures=failures)


def check_transfer_to_derived() -> CheckResult:
    failures = []
    for G in dichotomy_corpus():
        Gp = commutator_subgroup(G)
        if any(transfer_map(G, Gp, g) != 0 for g in range(G.n)):
            failures.append(G.name)
    return CheckResult("G2", "transfer G -> G'/G'' is trivial", not failures, failures=failures)


# -- AC7 -------------------------------------------------------------------------

def check_dispatcher() -> CheckResult:
    failures = []
    cases = [
        ("Z3", DispatchContext(5, 5), "1"),
        ("Z9", DispatchContext(7, 7), "1"),
        ("Z15", DispatchContext(2, 2), "1"),
        ("Q8", DispatchContext(5, 5), "1"),
        ("Q8", DispatchContext(3, 3), "1"),
        ("V", DispatchContext(5, 5), "-1"),
        ("V", DispatchContext(13, 13), "-1"),
        ("V", DispatchContext(3, 9), "-1"),
        ("V", DispatchContext(7, 7), "1"),
        ("Z2^3", DispatchContext(2, 2), "1"),
        ("Z8", DispatchContext(5, 5), "W(alpha)"),
        ("Z8", DispatchContext(2, 2), "W(alpha)"),
    ]
    for name, ctx, want in cases:
        got = str(lambda_dispatch(catalog_group(name), ctx))
        if got != want:
            failures.append(f"{name} over q={ctx.q}: got {got}, want {want}")
    try:
        lambda_dispatch(catalog_group("Z2^3"), DispatchContext(3, 3))
        failures.append("Z2^3 over p=3 was not rejected")
    except TameImpossible:
        pass
    return CheckResult(
        "AC7",
        "dispatcher spot checks",
        not failures,
        expected=f"{len(cases) + 1} cases",
        got=f"{len(cases) + 1 - len(failures)} cases",
        failures=failures,
    )


# -- AC8 -------------------------------------------------------------------------

def check_conductor_towers(samples: int = 500, seed: int = 20240) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        p = rng.choice((2, 3, 5, 7, 11, 13))
        F = LocalField.qp(p)
        es = [e for e in range(1, 10) if e % p]
        e1, e2 = rng.choice(es), rng.choice(es)
        f1, f2 = rng.randint(1, 4), rng.randint(1, 4)
        n = rng.randint(-3, 3)
        KF = ExtensionDescriptor.tame(F, e1, f1)
        EK = ExtensionDescriptor.tame(KF.top, e2, f2)
        EF = ExtensionDescriptor(F, KF.steps + EK.steps, "tame")
        stepwise = conductor_after_trace(EK, conductor_after_trace(KF, n))
        composed = conductor_after_trace(EF, n)
        if stepwise != composed:
            failures.append(f"p={p} e=({e1},{e2}) f=({f1},{f2}) n={n}: {stepwise} != {composed}")
        U = ExtensionDescriptor.unramified(F, f1)
        if conductor_after_trace(U, n) != n:
            failures.append(f"unramified f={f1} changed n={n}")
    return CheckResult(
        "AC8",
        "conductor of psi o Tr: stepwise = composed over random tame towers",
        not failures,
        expected=f"{samples} towers",
        got=f"{samples - len(failures)} towers",
        failures=failures[:10],
    )


ALL_CHECKS: dict[str, Callable[[], CheckResult]] = {
    "AC1": check_q2_golden,
    "AC2": check_gauss_oracle,
    "AC3": check_functional_equation_all,
    "AC4": check_klein_four,
    "AC5": check_tame_quadratic,
    "AC6": check_group_dichotomy,
    "AC7": check_dispatcher,
    "AC8": check_conductor_towers,
    "G1": check_gallagher,
    "G2": check_transfer_to_derived,
}

SCOPES: dict[str, tuple[str, ...]] = {
    "gauss": ("AC2",),
    "epsilon": ("AC3", "AC4", "AC8"),
    "lambda": ("AC1", "AC5", "AC7"),
    "groups": ("AC6", "G1", "G2"),
}
SCOPES["all"] = tuple(sorted({c for ids in SCOPES.values() for c in ids}))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("LAMBDA_LOCAL_THREADS", "1")))
    except ValueError:
        return 1


def run_checks(scope: str = "all") -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    ids = SCOPES[scope]
    workers = min(_threads(), len(ids))
    if workers == 1:
        results = [timed(ALL_CHECKS[i]) for i in ids]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: timed(ALL_CHECKS[i]), ids))
    return sorted(results, key=lambda r: r.id)
