"""Lambda functions: closed forms, tower and twist rules, and the group-theoretic dispatcher.

A :class:`LambdaValue` is an exact fourth root of unity, possibly multiplied
by factors that the available data cannot pin down: a power of an unresolved
W(alpha), an unknown sign (c_1^G or beta(-1)), or the open wild case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cyclo import Mu4, _is_prime, sqrt_prime
from .epsilon import local_constant
from .errors import (
    EvenDegree,
    EvenRamification,
    EvenResidueCharacteristic,
    GroupTooLarge,
    IncomposableSymbolic,
    NotUnramified,
    OddDegree,
    TameImpossible,
)
from .ffield import FiniteField, gauss_sum_bruteforce
from .groups import (
    METACYCLIC_NOT_CYCLIC,
    MAX_ORDER,
    NONTRIVIAL_CYCLIC,
    NOT_METACYCLIC,
    TRIVIAL,
    FiniteGroup,
    classify_sylow2,
    sylow2,
)
from .padic import (
    Q2_QUADRATIC_TABLE,
    AddChar,
    ExtensionDescriptor,
    LocalField,
    MultChar,
    norm_group_classes,
    q2_character,
    quadratic_characters,
)

__all__ = [
    "LambdaValue",
    "DispatchContext",
    "lambda_odd_galois",
    "lambda_unramified",
    "lambda_even_odd_ramification",
    "lambda_tame_quadratic",
    "lambda_klein_four",
    "lambda_square_class_extension",
    "lambda_tower",
    "lambda_twist",
    "lambda_dispatch",
    "q2_quadratic_catalog",
    "henniart_odd_formula",
    "tame_quadratic_crosscheck",
    "Q2_EXPECTED",
]

EXACT = "Exact"
SYMBOLIC_W_ALPHA = "SymbolicWAlpha"
SYMBOLIC_WITH_DELIGNE = "SymbolicWithDeligne"
OPEN_WILD = "OpenWild"

SQUARE = "Square"
NON_SQUARE = "NonSquare"


@dataclass(frozen=True)
class LambdaValue:
    """prefactor * W(alpha)^w_alpha_exp * (product of unknown signs), or the open case."""

    prefactor: Mu4 = field(default_factory=Mu4)
    w_alpha_exp: int = 0
    unknown_signs: frozenset[str] = frozenset()
    open_wild: bool = False
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "w_alpha_exp", self.w_alpha_exp % 4)
        object.__setattr__(self, "unknown_signs", frozenset(self.unknown_signs))
        object.__setattr__(self, "provenance", tuple(self.provenance))

    @classmethod
    def exact(cls, value, rule: str) -> "LambdaValue":
        if not isinstance(value, Mu4):
            value = Mu4.sign(value) if isinstance(value, int) else Mu4.parse(str(value))
        return cls(prefactor=value, provenance=(rule,))

    @classmethod
    def open(cls, rule: str) -> "LambdaValue":
        return cls(open_wild=True, provenance=(rule,))

    @property
    def kind(self) -> str:
        if self.open_wild:
            return OPEN_WILD
        if self.unknown_signs:
            return SYMBOLIC_WITH_DELIGNE
        if self.w_alpha_exp:
            return SYMBOLIC_W_ALPHA
        return EXACT

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def value(self) -> Mu4:
        if not self.is_exact:
            raise ValueError(f"{self} is not an exact fourth root of unity")
        return self.prefactor

    def _combine(self, other: "LambdaValue") -> "LambdaValue":
        if self.open_wild or other.open_wild:
            return LambdaValue(open_wild=True, provenance=self.provenance + other.provenance)
        if self.w_alpha_exp and other.w_alpha_exp:
            raise IncomposableSymbolic("two unresolved W(alpha) factors need not share alpha")
        return LambdaValue(
            self.prefactor * other.prefactor,
            self.w_alpha_exp + other.w_alpha_exp,
            self.unknown_signs ^ other.unknown_signs,
            False,
            self.provenance + tuple(r for r in other.provenance if r not in self.provenance),
        )

    def __mul__(self, other):
        if isinstance(other, LambdaValue):
            return self._combine(other)
        if isinstance(other, (Mu4, int)):
            return LambdaValue(self.prefactor * other, self.w_alpha_exp, self.unknown_signs, self.open_wild, self.provenance)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LambdaValue":
        if self.open_wild:
            return self
        return LambdaValue(
            self.prefactor ** k,
            self.w_alpha_exp * k,
            self.unknown_signs if k % 2 else frozenset(),
            False,
            self.provenance,
        )

    def resolve_w_alpha(self, w: Mu4, rule: str) -> "LambdaValue":
        """Substitute a known value for W(alpha)."""
        if not self.w_alpha_exp:
            return self
        return LambdaValue(
            self.prefactor * w ** self.w_alpha_exp, 0, self.unknown_signs, self.open_wild, self.provenance + (rule,)
        )

    def resolve_sign(self, label: str, s: int, rule: str) -> "LambdaValue":
        if label not in self.unknown_signs:
            return self
        return LambdaValue(
            self.prefactor * s, self.w_alpha_exp, self.unknown_signs - {label}, self.open_wild, self.provenance + (rule,)
        )

    def __str__(self):
        if self.open_wild:
            return "open"
        factors = sorted(self.unknown_signs)
        if self.w_alpha_exp:
            factors.append("W(alpha)" if self.w_alpha_exp == 1 else f"W(alpha)^{ {2: 2, 3: -1}[self.w_alpha_exp] }")
        if not factors:
            return str(self.prefactor)
        body = "*".join(factors)
        pre = str(self.prefactor)
        if pre == "1":
            return body
        if pre == "-1":
            return "-" + body
        return f"{pre}*{body}"

    def __eq__(self, other):
        if isinstance(other, LambdaValue):
            return (self.prefactor, self.w_alpha_exp, self.unknown_signs, self.open_wild) == (
                other.prefactor,
                other.w_alpha_exp,
                other.unknown_signs,
                other.open_wild,
            )
        if self.is_exact:
            return self.prefactor == other
        return NotImplemented

    def __hash__(self):
        return hash((self.prefactor, self.w_alpha_exp, self.unknown_signs, self.open_wild))

    def to_json(self) -> dict:
        return {"value": str(self), "kind": self.kind, "provenance": list(self.provenance)}


# -- closed forms -------------------------------------------------------------

def _n_psi(psi) -> int:
    return psi.conductor if isinstance(psi, AddChar) else int(psi)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            s, r = 0, q
            while r % p == 0:
                r //= p
                s += 1
            if r != 1 or not _is_prime(p):
                break
            return p, s
    raise ValueError(f"{q} is not a prime power")


def lambda_odd_galois(ext: ExtensionDescriptor | int) -> LambdaValue:
    """Any step inside an odd-degree Galois extension has lambda = 1."""
    degree = ext if isinstance(ext, int) else ext.degree
    if degree % 2 == 0:
        raise EvenDegree(f"degree {degree} is even")
    return LambdaValue.exact(1, "odd-degree-galois")


def lambda_unramified(ext: ExtensionDescriptor, psi) -> LambdaValue:
    """(-1)^{n(psi)} for an unramified extension of even degree."""
    if ext.e != 1:
        raise NotUnramified(f"ramification index {ext.e}")
    if ext.degree % 2:
        raise OddDegree("odd unramified degree; lambda_odd_galois applies")
    return LambdaValue.exact((-1) ** (_n_psi(psi) % 2), "unramified-even-degree")


def lambda_even_odd_ramification(ext: ExtensionDescriptor, psi) -> LambdaValue:
    """(-1)^{n(psi)} for an even-degree Galois extension with odd ramification index."""
    if ext.degree % 2:
        raise OddDegree("odd degree; lambda_odd_galois applies")
    if ext.e % 2 == 0:
        raise EvenRamification(f"ramification index {ext.e} is even")
    return LambdaValue.exact((-1) ** (_n_psi(psi) % 2), "odd-ramification-even-degree")


def lambda_psi_minus_one(q: int) -> Mu4:
    """lambda(psi_{-1}) for a tame quadratic extension, from the residue Gauss sum."""
    p, s = _prime_power(q)
    if p == 2:
        raise EvenResidueCharacteristic("tame quadratic formula needs p odd")
    value = Mu4.sign((-1) ** ((s - 1) % 2))
    if p % 4 == 3:
        value = value * Mu4(s)
    return value


def lambda_tame_quadratic(q: int, trace_class: str = SQUARE, psi_case: str = "canonical") -> LambdaValue:
    """Tamely ramified quadratic K/F with q_F = q.

    ``psi_case="canonical"`` gives lambda(psi_F) = Delta(c') lambda(psi_{-1}), where
    Delta(c') is +1 or -1 as the residue of Tr(pc) is a square or not.
    ``psi_case="conductor-minus-one"`` gives lambda(psi_{-1}) itself.
    """
    base = lambda_psi_minus_one(q)
    if psi_case == "conductor-minus-one":
        return LambdaValue(prefactor=base, provenance=("tame-quadratic-gauss",))
    if psi_case != "canonical":
        raise ValueError(f"unknown psi case {psi_case!r}")
    if trace_class not in (SQUARE, NON_SQUARE):
        raise ValueError(f"trace class must be {SQUARE} or {NON_SQUARE}")
    sign = 1 if trace_class == SQUARE else -1
    return LambdaValue(prefactor=base * sign, provenance=("tame-quadratic-gauss",))


def trace_class_qp(chi: MultChar) -> str:
    """Residue class of Tr(pc) for F = Q_p and the character chi of K/Q_p.

    With c the inverse of a norm uniformizer, pc is 1 when p itself is a norm
    (chi(p) = 1) and a non-square unit otherwise.
    """
    return SQUARE if chi.sign_at(chi.p) == 1 else NON_SQUARE


def lambda_klein_four(q: int) -> LambdaValue:
    """lambda_1^V: -1 if -1 is a square in F (q = 1 mod 4), else 1."""
    p, _ = _prime_power(q)
    if p == 2:
        raise EvenResidueCharacteristic("Klein-four formula needs p odd")
    return LambdaValue.exact(-1 if q % 4 == 1 else 1, "klein-four")


def lambda_square_class_extension(F: LocalField) -> LambdaValue:
    """K/F with norm group the squares of F^x."""
    if F.p != 2:
        return lambda_klein_four(F.q)
    return LambdaValue.exact(1, "square-class-2adic")


def lambda_tower(lam_EK: LambdaValue, lam_KF: LambdaValue, degree_EK: int) -> LambdaValue:
    """lambda_{E/F} = lambda_{E/K} * lambda_{K/F}^{[E:K]}."""
    return lam_EK * lam_KF ** degree_EK


def lambda_twist(lam: LambdaValue, delta_at_b: int) -> LambdaValue:
    """lambda(b psi) = Delta(b) lambda(psi)."""
    if delta_at_b not in (1, -1):
        raise ValueError("Delta(b) must be a sign")
    return lam * delta_at_b


def _jacobi_two(q: int) -> int:
    return -1 if (q * q - 1) // 8 % 2 else 1


def henniart_odd_formula(n: int, w_delta, a_delta: int, q: int, p: int | None = None) -> LambdaValue:
    """W(Delta)^n (2/q)^{a(Delta)} for an odd-degree K/F."""
    if n % 2 == 0:
        raise EvenDegree(f"degree {n} is even")
    if not isinstance(w_delta, Mu4):
        w_delta = Mu4.sign(w_delta) if isinstance(w_delta, int) else Mu4.parse(str(w_delta))
    if p is None:
        p, _ = _prime_power(q)
    symbol = 1 if p == 2 else _jacobi_two(q)
    return LambdaValue(prefactor=w_delta ** n * symbol ** (a_delta % 2), provenance=("henniart-odd-degree",))


# -- dispatcher ----------------------------------------------------------------

@dataclass(frozen=True)
class DispatchContext:
    """What the dispatcher knows about the base field F and the character alpha.

    ``alpha`` may be ``"unramified"`` or ``"tame"`` when the quadratic
    subextension attached to alpha is known to be of that type; with
    ``"tame"``, W(alpha) is taken for the canonical psi_F and needs the
    residue class of Tr(pc) in ``trace_class``.
    """

    p: int
    q: int
    n_psi: int = 0
    i_in_F: bool | None = None
    alpha: str | None = None
    trace_class: str | None = None

    def __post_init__(self):
        p, _ = _prime_power(self.q)
        if p != self.p:
            raise ValueError(f"q = {self.q} is not a power of p = {self.p}")
        if self.p != 2:
            derived = self.q % 4 == 1
            if self.i_in_F is None:
                object.__setattr__(self, "i_in_F", derived)
            elif self.i_in_F != derived:
                raise ValueError(f"i in F is {derived} for q = {self.q}")
        elif self.i_in_F is None:
            object.__setattr__(self, "i_in_F", False)
        if self.alpha not in (None, "unramified", "tame"):
            raise ValueError(f"unknown alpha type {self.alpha!r}")
        if self.alpha == "tame" and self.p == 2:
            raise ValueError("no tame quadratic extensions when p = 2")

    @classmethod
    def from_json(cls, data: Mapping) -> "DispatchContext":
        return cls(
            int(data["p"]),
            int(data.get("q", data["p"])),
            int(data.get("n_psi", 0)),
            data.get("i_in_F"),
            data.get("alpha"),
            data.get("trace_class"),
        )


def _resolve_w_alpha(lam: LambdaValue, ctx: DispatchContext) -> LambdaValue:
    if ctx.alpha == "unramified":
        return lam.resolve_w_alpha(Mu4.sign((-1) ** (ctx.n_psi % 2)), "unramified-even-degree")
    if ctx.alpha == "tame" and ctx.trace_class is not None:
        w = lambda_tame_quadratic(ctx.q, ctx.trace_class).value
        return lam.resolve_w_alpha(w, "tame-quadratic-gauss")
    return lam


def lambda_dispatch(G: FiniteGroup, ctx: DispatchContext) -> LambdaValue:
    """lambda_1^G from the Sylow-2 type of G and the field data."""
    if G.n > MAX_ORDER:
        raise GroupTooLarge(f"|G| = {G.n} exceeds {MAX_ORDER}")
    S = sylow2(G)
    cls = classify_sylow2(S)
    if cls.case == TRIVIAL:
        return LambdaValue.exact(1, "odd-order-group")
    if cls.case == NONTRIVIAL_CYCLIC:
        return _dispatch_cyclic(G, S.order, ctx)
    if cls.case == METACYCLIC_NOT_CYCLIC:
        if not cls.contains_klein:
            return LambdaValue.exact(1, "generalized-quaternion")
        if ctx.p == 2:
            return LambdaValue.open("klein-four-wild-open")
        return lambda_klein_four(ctx.q)
    assert cls.case == NOT_METACYCLIC
    if ctx.p != 2:
        raise TameImpossible("a Sylow 2-subgroup over p odd is metacyclic")
    return LambdaValue.exact(1, "sylow2-not-metacyclic")


def _dispatch_cyclic(G: FiniteGroup, s: int, ctx: DispatchContext) -> LambdaValue:
    if ctx.p == 2:
        lam = LambdaValue(w_alpha_exp=1, provenance=("sylow2-exceptional",))
        if s <= 4:
            lam = LambdaValue(w_alpha_exp=1, unknown_signs=frozenset({"c1G"}), provenance=("sylow2-exceptional",))
        return _resolve_w_alpha(lam, ctx)
    # p odd: pass to the maximal 2-quotient through the odd Hall subgroup H
    h = G.n // s
    exp = 1 if ctx.i_in_F or h % 4 == 1 else -1
    lam = LambdaValue(w_alpha_exp=exp, provenance=("hall-reduction",))
    if s == 4:
        lam = LambdaValue(w_alpha_exp=exp, unknown_signs=frozenset({"beta(-1)"}), provenance=("hall-reduction",))
        if ctx.i_in_F and ctx.alpha is not None:
            # beta(-1) = beta(i)^2 = alpha(i); alpha(i) = (-1)^{(q-1)/4} when alpha is tame
            s_i = 1 if ctx.alpha == "unramified" else (-1) ** ((ctx.q - 1) // 4 % 2)
            lam = lam.resolve_sign("beta(-1)", s_i, "order-four-generating-character")
    return _resolve_w_alpha(lam, ctx)


# -- Q_2 catalog ----------------------------------------------------------------

# lambda_{Q_2(sqrt d)/Q_2}(psi_{Q_2}) as tabulated in the source example
Q2_EXPECTED: dict[int, Mu4] = {
    5: Mu4.parse("1"),
    -1: Mu4.parse("i"),
    -5: Mu4.parse("i"),
    2: Mu4.parse("1"),
    10: Mu4.parse("-1"),
    -2: Mu4.parse("i"),
    -10: Mu4.parse("-i"),
}


def q2_quadratic_catalog(psi_shift=1) -> list[dict]:
    """The seven quadratic extensions of Q_2 with lambda computed from the epsilon sum.

    ``expected`` is the tabulated value for the canonical character, moved to
    ``psi_shift * psi`` by the twist rule.
    """
    b = Fraction(psi_shift)
    psi = AddChar(LocalField.qp(2), b)
    rows = []
    for row in Q2_QUADRATIC_TABLE:
        chi = q2_character(row)
        w = local_constant(chi, psi)
        lam = w.mu4()
        rows.append(
            {
                "label": row["label"],
                "d": row["d"],
                "field": f"Q2(sqrt({row['d']}))",
                "a": chi.conductor,
                "chi": {"2": chi.sign_at(2), "3": chi.sign_at(3), "5": chi.sign_at(5)},
                "norm_group": "{" + ", ".join(map(str, norm_group_classes(chi))) + "} * squares",
                "lambda": lam,
                "expected": Q2_EXPECTED[row["d"]] * chi.sign_at(b),
                "provenance": "epsilon-sum" if chi.conductor else "unramified-even-degree",
            }
        )
    return rows


# -- four-cases table ---------------------------------------------------------------

def tame_quadratic_crosscheck(p: int, n_psi: int = 0) -> dict:
    """Compare epsilon sums over Q_p with the tame closed forms and the Klein-four value.

    lambda_1 belongs to the unramified quadratic extension, lambda_2 and
    lambda_3 to the ramified ones with chi(p) = +1 and -1.
    """
    if p == 2 or not _is_prime(p):
        raise EvenResidueCharacteristic("cross-check needs an odd prime")
    F = LocalField.qp(p)
    psi = AddChar(F, Fraction(p) ** n_psi)
    eta, chi_plus, chi_minus = quadratic_characters(p)
    lam1, lam2, lam3 = (local_constant(c, psi).mu4() for c in (eta, chi_plus, chi_minus))
    klein = lambda_klein_four(p).value
    checks = {}
    checks["unramified"] = lam1 == Mu4.sign((-1) ** (n_psi % 2))
    checks["product_is_klein"] = lam1 * lam2 * lam3 == klein
    checks["lambda1_lambda3_eq_minus_lambda2"] = lam1 * lam3 == -lam2
    checks["lambda1_lambda2_eq_minus_lambda3"] = lam1 * lam2 == -lam3
    if p % 4 == 1:
        row_ok = lam2 ** 2 == 1 and lam3 ** 2 == 1
    else:
        row_ok = lam2 ** 2 == -1 and lam3 ** 2 == -1
    row_ok = row_ok and ((lam2 == lam3) if n_psi % 2 else (lam2 == -lam3))
    checks["table_row"] = row_ok
    # closed form, moved from psi_F to p^n psi_F by the twist rule
    closed = []
    for chi in (chi_plus, chi_minus):
        base = lambda_tame_quadratic(p, trace_class_qp(chi)).value
        closed.append(base * chi.sign_at(Fraction(p) ** n_psi))
    checks["closed_form_multiset"] = sorted(map(str, closed)) == sorted(map(str, (lam2, lam3)))
    # lambda(psi_{-1}) three ways: closed form, residue Gauss sum, epsilon sum at conductor -1
    lpm = lambda_psi_minus_one(p)
    gauss = gauss_sum_bruteforce(FiniteField(p, 1)) / sqrt_prime(p)
    psi_m1 = AddChar(F, Fraction(1, p))
    checks["psi_minus_one_gauss"] = gauss == lpm.to_cyclo()
    checks["psi_minus_one_epsilon"] = local_constant(chi_plus, psi_m1).mu4() == lpm
    return {
        "p": p,
        "n_psi": n_psi,
        "q_mod_4": p % 4,
        "lambda_KF": str(klein),
        "lambda1": str(lam1),
        "lambda2": str(lam2),
        "lambda3": str(lam3),
        "checks": checks,
        "ok": all(checks.values()),
    }
