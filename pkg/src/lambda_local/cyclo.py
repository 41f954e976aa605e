"""Exact arithmetic with rational combinations of roots of unity.

A :class:`CycloNumber` of order ``N`` is a finite sum ``sum c_k * zeta_N**k``
with rational ``c_k``.  Terms are stored as given (combined and reduced mod
``N``, zeros dropped); equality and zero tests reduce modulo the cyclotomic
polynomial ``Phi_N`` after lifting to a common order, which is a canonical
form in ``Q(zeta_N)``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .errors import InvalidOrder, NotAFourthRoot

__all__ = [
    "CycloNumber",
    "Mu4",
    "cyclotomic_polynomial",
    "root_of_unity",
    "from_exponents",
    "sqrt_prime",
    "snap_fourth_root",
]

# Per-term bound on the double-precision error of eval_complex.
EVAL_TERM_ERROR = 1e-12


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise InvalidOrder(f"cyclotomic polynomial of order {n}")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, dc in enumerate(den):
                num[i - dn + j] -= c * dc
    assert not any(num[:dn]), "cyclotomic division left a remainder"
    return out


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class CycloNumber:
    """Element of Q(zeta_N) stored as exponent -> rational coefficient."""

    __slots__ = ("order", "terms", "_canon")

    def __init__(self, order: int, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        if not isinstance(order, int) or order < 1:
            raise InvalidOrder(f"order must be a positive integer, got {order!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, c in items:
            k %= order
            acc[k] = acc.get(k, Fraction(0)) + _as_fraction(c)
        self.order = order
        self.terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._canon = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def rational(cls, x) -> "CycloNumber":
        return cls(1, {0: _as_fraction(x)})

    @classmethod
    def zero(cls) -> "CycloNumber":
        return cls(1)

    @classmethod
    def one(cls) -> "CycloNumber":
        return cls(1, {0: 1})

    # -- structure --------------------------------------------------------

    def lift(self, m: int) -> "CycloNumber":
        """Re-express with order ``m``; ``m`` must be a multiple of the order."""
        if m % self.order:
            raise InvalidOrder(f"cannot lift order {self.order} to {m}")
        r = m // self.order
        return CycloNumber(m, {k * r: c for k, c in self.terms.items()})

    def _common(self, other: "CycloNumber") -> tuple["CycloNumber", "CycloNumber"]:
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def canonical(self) -> tuple[Fraction, ...]:
        """Coefficients of the remainder mod Phi_N, lowest degree first."""
        if self._canon is None:
            n = self.order
            phi = cyclotomic_polynomial(n)
            deg = len(phi) - 1
            dense = [Fraction(0)] * max(n, deg)
            for k, c in self.terms.items():
                dense[k] += c
            for i in range(len(dense) - 1, deg - 1, -1):
                c = dense[i]
                if c:
                    dense[i] = Fraction(0)
                    for j in range(deg):
                        if phi[j]:
                            dense[i - deg + j] -= c * phi[j]
            self._canon = tuple(dense[:deg])
        return self._canon

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def is_rational(self) -> bool:
        return not any(self.canonical()[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        canon = self.canonical()
        return canon[0] if canon else Fraction(0)

    def normalized(self) -> "CycloNumber":
        """The canonical representative as a CycloNumber of the same order."""
        return CycloNumber(self.order, enumerate(self.canonical()))

    def simplified(self) -> "CycloNumber":
        """Normalized, with rational values collapsed to order 1."""
        if self.is_rational():
            return CycloNumber.rational(self.rational_value())
        return self.normalized()

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            return other
        return CycloNumber.rational(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return CycloNumber(a.order, terms)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycloNumber):
            a, b = self._common(other)
            n = a.order
            out: dict[int, Fraction] = {}
            for i, ci in a.terms.items():
                for j, cj in b.terms.items():
                    k = (i + j) % n
                    out[k] = out.get(k, Fraction(0)) + ci * cj
            return CycloNumber(n, out)
        try:
            s = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def scale(self, s) -> "CycloNumber":
        s = _as_fraction(s)
        return CycloNumber(self.order, {k: c * s for k, c in self.terms.items()})

    def conjugate(self) -> "CycloNumber":
        return CycloNumber(self.order, {-k: c for k, c in self.terms.items()})

    def galois(self, t: int) -> "CycloNumber":
        """Apply zeta_N -> zeta_N**t; ``t`` must be a unit mod N."""
        if math.gcd(t, self.order) != 1:
            raise ValueError(f"{t} is not a unit mod {self.order}")
        return CycloNumber(self.order, {k * t: c for k, c in self.terms.items()})

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_N) to Q."""
        prod = CycloNumber.one()
        for t in range(1, self.order + 1):
            if math.gcd(t, self.order) == 1:
                prod = (prod * self.galois(t)).normalized()
        return prod.rational_value()

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # a * prod_{t != 1} sigma_t(a) = N(a)
        cof = CycloNumber.one()
        for t in range(2, self.order + 1):
            if math.gcd(t, self.order) == 1:
                cof = (cof * self.galois(t)).normalized()
        n = (self * cof).rational_value()
        return cof.scale(1 / n)

    def __truediv__(self, other):
        if isinstance(other, CycloNumber):
            return self * other.inverse()
        try:
            s = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.scale(1 / s)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CycloNumber.one()
        while e:
            if e & 1:
                result = (result * base).normalized()
            base = (base * base).normalized()
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Mu4):
            other = other.to_cyclo()
        if not isinstance(other, CycloNumber):
            try:
                other = CycloNumber.rational(other)
            except TypeError:
                return NotImplemented
        a, b = self._common(other)
        return a.canonical() == b.canonical()

    __hash__ = None  # equality is up to lifting; no cheap canonical hash

    # -- numerics ---------------------------------------------------------

    def eval_complex(self) -> complex:
        """Double-precision value; each term contributes at most ~1e-12 error."""
        z = 0j
        for k, c in self.terms.items():
            z += float(c) * cmath.exp(2j * math.pi * k / self.order)
        return z

    def to_pair(self) -> tuple[float, float]:
        z = self.eval_complex()
        return (z.real, z.imag)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "terms": [[k, _frac_str(c)] for k, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CycloNumber":
        return cls(int(data["order"]), [(int(k), Fraction(c)) for k, c in data["terms"]])

    def __repr__(self):
        if not self.terms:
            return "CycloNumber(0)"
        parts = []
        for k, c in self.terms.items():
            coeff = _frac_str(c)
            parts.append(coeff if k == 0 else f"{coeff}*z{self.order}^{k}")
        return "CycloNumber(" + " + ".join(parts) + ")"


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def root_of_unity(n: int, k: int) -> CycloNumber:
    """``exp(2*pi*i*k/n)`` as a single-term CycloNumber."""
    if not isinstance(n, int) or n < 1:
        raise InvalidOrder(f"root of unity of order {n}")
    return CycloNumber(n, {k % n: 1})


def from_exponents(terms: Mapping[Fraction, object]) -> CycloNumber:
    """Build ``sum c * exp(2*pi*i*r)`` from a map rational r -> coefficient."""
    if not terms:
        return CycloNumber.zero()
    n = 1
    for r in terms:
        n = math.lcm(n, Fraction(r).denominator)
    out = {}
    for r, c in terms.items():
        r = Fraction(r)
        k = (r.numerator * (n // r.denominator)) % n
        out[k] = out.get(k, Fraction(0)) + _as_fraction(c)
    return CycloNumber(n, out)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@lru_cache(maxsize=None)
def sqrt_prime(p: int) -> CycloNumber:
    """The positive square root of a prime ``p`` as a cyclotomic number.

    Uses sqrt(2) = z8 - z8^3 and, for odd p, the quadratic Gauss sum
    g = sum (x/p) z_p^x, which equals sqrt(p) for p = 1 mod 4 and
    i*sqrt(p) for p = 3 mod 4.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return CycloNumber(8, {1: 1, 3: -1})
    g = CycloNumber(p, {x: _legendre(x, p) for x in range(1, p)})
    if p % 4 == 1:
        return g
    return g * root_of_unity(4, 3)


def _legendre(a: int, p: int) -> int:
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


class Mu4:
    """A fourth root of unity ``i**k``."""

    __slots__ = ("k",)
    _NAMES = ("1", "i", "-1", "-i")

    def __init__(self, k: int = 0):
        self.k = k % 4

    @classmethod
    def sign(cls, s: int) -> "Mu4":
        if s not in (1, -1):
            raise ValueError(f"not a sign: {s}")
        return cls(0 if s == 1 else 2)

    @classmethod
    def parse(cls, text: str) -> "Mu4":
        t = text.strip().replace("+", "")
        try:
            return cls(cls._NAMES.index(t))
        except ValueError:
            raise ValueError(f"not a fourth root of unity: {text!r}") from None

    def __mul__(self, other):
        if isinstance(other, Mu4):
            return Mu4(self.k + other.k)
        if isinstance(other, int) and other in (1, -1):
            return Mu4(self.k + (0 if other == 1 else 2))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Mu4(self.k + 2)

    def __pow__(self, e: int):
        return Mu4(self.k * e)

    def inverse(self) -> "Mu4":
        return Mu4(-self.k)

    conjugate = inverse

    def __eq__(self, other):
        if isinstance(other, Mu4):
            return self.k == other.k
        if isinstance(other, int):
            return (other == 1 and self.k == 0) or (other == -1 and self.k == 2)
        if isinstance(other, complex):
            return abs(self.to_complex() - other) < 1e-12
        if isinstance(other, CycloNumber):
            return other == self.to_cyclo()
        return NotImplemented

    def __hash__(self):
        return hash(("Mu4", self.k))

    def is_sign(self) -> bool:
        return self.k % 2 == 0

    def to_int(self) -> int:
        if not self.is_sign():
            raise ValueError(f"{self} is not a sign")
        return 1 if self.k == 0 else -1

    def to_complex(self) -> complex:
        return (1, 1j, -1, -1j)[self.k]

    def to_cyclo(self) -> CycloNumber:
        return root_of_unity(4, self.k)

    def __str__(self):
        return self._NAMES[self.k]

    def __repr__(self):
        return f"Mu4({self})"


_MU4 = tuple(Mu4(k) for k in range(4))


def snap_fourth_root(a: CycloNumber, tol: float = 1e-6) -> Mu4:
    """Return the fourth root of unity equal to ``a``.

    Exact comparison is tried first; a value that is only numerically within
    ``tol`` of a fourth root is accepted as a fallback.  Anything else raises
    :class:`NotAFourthRoot`, which always indicates an upstream formula bug.
    """
    if not isinstance(a, CycloNumber):
        raise TypeError("snap_fourth_root expects a CycloNumber")
    if len(a.terms) == 1 and 4 % (a.order // math.gcd(a.order, next(iter(a.terms)))) == 0:
        (k, c), = a.terms.items()
        if c == 1:
            return Mu4(k * 4 // a.order)
    for m in _MU4:
        if a == m.to_cyclo():
            return m
    z = a.eval_complex()
    if abs(abs(z) - 1) <= tol:
        close = [m for m in _MU4 if abs(z - m.to_complex()) <= tol]
        if len(close) == 1:
            return close[0]
    raise NotAFourthRoot(f"{a!r} ~ {z:.6g} is not a fourth root of unity")
