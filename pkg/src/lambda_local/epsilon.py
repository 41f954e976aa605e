"""Abelian local constants W(chi, psi) over Q_p and the identities around them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .cyclo import CycloNumber, Mu4, from_exponents, snap_fourth_root, sqrt_prime
from .errors import DeligneDependsOnPsi, NotAFourthRoot, NotUnramified, UnsupportedField
from .padic import AddChar, MultChar, p_adic_fractional_part, unit_representatives, valuation

__all__ = [
    "EpsilonResult",
    "local_constant",
    "twist_by_unramified",
    "twist_by_shift",
    "check_functional_equation",
    "deligne_constant",
    "q_power_half",
]


def q_power_half(p: int, k: int) -> CycloNumber:
    """p^{k/2} inside the cyclotomic ring (k may be negative)."""
    whole, odd = divmod(k, 2)
    value = CycloNumber.rational(Fraction(p) ** whole)
    if odd:
        value = value * sqrt_prime(p)
    return value


@dataclass(frozen=True)
class EpsilonResult:
    value: CycloNumber
    prefactor_exponent: Fraction  # the -a/2 in q^{-a/2}
    a: int
    n_psi: int
    nu_c: int

    @property
    def numeric(self) -> complex:
        return self.value.eval_complex()

    def has_unit_modulus(self) -> bool:
        return self.value * self.value.conjugate() == CycloNumber.one()

    def mu4(self) -> Mu4:
        return snap_fourth_root(self.value)

    def in_mu4(self) -> bool:
        try:
            self.mu4()
        except NotAFourthRoot:
            return False
        return True

    def times(self, factor: CycloNumber, n_psi: int | None = None) -> "EpsilonResult":
        n = self.n_psi if n_psi is None else n_psi
        return EpsilonResult(self.value * factor, self.prefactor_exponent, self.a, n, self.a + n)

    def to_json(self) -> dict:
        z = self.numeric
        out = {
            "value": self.value.to_json(),
            "numeric": [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0],
            "a": self.a,
            "n_psi": self.n_psi,
            "nu_c": self.nu_c,
        }
        if self.in_mu4():
            out["mu4"] = str(self.mu4())
        return out


def _require_qp(chi: MultChar, psi: AddChar) -> None:
    if not psi.field.is_qp:
        raise UnsupportedField(f"explicit local constants need F = Q_p, got {psi.field}")
    if psi.field.p != chi.p:
        raise UnsupportedField("character and additive character live over different primes")


def local_constant(chi: MultChar, psi: AddChar, unit: int = 1) -> EpsilonResult:
    """W(chi, psi) = chi(c) q^{-a/2} sum_{x in U/U^a} chi^{-1}(x) psi(x/c).

    ``c = unit * p^{a + n(psi)}``; the result does not depend on the unit.
    """
    _require_qp(chi, psi)
    p = chi.p
    a = chi.conductor
    n = psi.conductor
    if unit % p == 0:
        raise ValueError("c must be modified by a p-adic unit")
    c = Fraction(unit) * Fraction(p) ** (a + n)
    if a == 0:
        return EpsilonResult(chi(c), Fraction(0), 0, n, n)
    # accumulate exponents of chi^{-1}(x) psi(x/c) and build the sum once
    counts: dict[Fraction, int] = defaultdict(int)
    for x in unit_representatives(p, a):
        r = -chi.exponent_at(x) + p_adic_fractional_part(psi.shift * x / c, p)
        counts[r % 1] += 1
    total = from_exponents(counts)
    value = chi(c) * total * q_power_half(p, -a)
    return EpsilonResult(value, Fraction(-a, 2), a, n, a + n)


def twist_by_unramified(chi: MultChar, eta: MultChar, psi: AddChar) -> EpsilonResult:
    """W(chi eta, psi) = eta(c) W(chi, psi) with eta unramified; no new sum."""
    if not eta.is_unramified:
        raise NotUnramified(f"twisting character has conductor {eta.conductor}")
    w = local_constant(chi, psi)
    return w.times(eta(Fraction(chi.p) ** w.nu_c))


def twist_by_shift(w: EpsilonResult, det: MultChar, b) -> EpsilonResult:
    """W(rho, b psi) = det_rho(b) W(rho, psi)."""
    b = Fraction(b)
    return w.times(det(b), w.n_psi + valuation(b, det.p))


def check_functional_equation(chi: MultChar, psi: AddChar) -> bool:
    """W(chi, psi) W(chi^{-1}, psi) == chi(-1)."""
    lhs = local_constant(chi, psi).value * local_constant(chi.inverse(), psi).value
    return lhs == chi(-1)


def _deligne_ratio(chars: Sequence[MultChar], psi: AddChar) -> CycloNumber:
    num = CycloNumber.one()
    for chi in chars:
        num = num * local_constant(chi, psi).value
    det = reduce(lambda x, y: x * y, chars)
    return num / local_constant(det, psi).value


def deligne_constant(chars: Sequence[MultChar], psi: AddChar, check_shift=None) -> CycloNumber:
    """c(rho) = prod W(chi_i) / W(prod chi_i) for rho = sum chi_i.

    The value is recomputed with a shifted psi; a mismatch means one of the
    formulas is wrong and raises :class:`DeligneDependsOnPsi`.
    """
    if not chars:
        raise ValueError("need at least one character")
    c = _deligne_ratio(chars, psi)
    b = check_shift if check_shift is not None else Fraction(chars[0].p) * (3 if chars[0].p != 3 else 2)
    if _deligne_ratio(chars, psi.shifted(b)) != c:
        raise DeligneDependsOnPsi(f"c(rho) changed under psi -> {b} psi")
    return c.simplified()
