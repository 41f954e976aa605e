"""Finite fields GF(p^s), trace, canonical characters and quadratic Gauss sums.

Elements are coefficient tuples over GF(p) in the polynomial basis
``1, t, ..., t^(s-1)`` where ``t`` is a root of the field's modulus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .cyclo import CycloNumber, root_of_unity, sqrt_prime
from .errors import EvenCharacteristic, NotIrreducible, ZeroArgument

__all__ = [
    "FiniteField",
    "FFElement",
    "default_modulus",
    "is_irreducible",
    "trace_to_prime",
    "canonical_additive_char",
    "quadratic_character",
    "gauss_sum_bruteforce",
    "gauss_sum_closed_form",
]


# -- polynomials over GF(p), lists lowest degree first ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_mod(out, m, p)


def _poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin-style test: gcd(f, x^(p^k) - x mod f) = 1 for 1 <= k <= deg/2."""
    f = _trim([c % p for c in modulus])
    s = len(f) - 1
    if s < 1:
        return False
    if s == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(s // 2):
        xp = _poly_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, s: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree ``s``.

    Candidates ``x^s + c_{s-1} x^{s-1} + ... + c_0`` are ordered by the integer
    ``sum c_i p^i``, so the constant term varies fastest.
    """
    for n in range(p ** s):
        coeffs = [(n // p ** i) % p for i in range(s)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {s} over GF({p})")


@dataclass(frozen=True)
class FiniteField:
    p: int
    s: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("degree must be >= 1")
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.s))
        else:
            mod = tuple(c % self.p for c in self.modulus)
            if len(mod) != self.s + 1 or mod[-1] != 1:
                raise NotIrreducible(f"modulus must be monic of degree {self.s}")
            if not is_irreducible(mod, self.p):
                raise NotIrreducible(f"{mod} is reducible over GF({self.p})")
            object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p ** self.s

    def __len__(self):
        return self.q

    def element(self, coeffs: int | Sequence[int]) -> "FFElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs]
        c = _poly_mod(c, self.modulus, self.p) if len(c) > self.s else c
        return FFElement(self, tuple(c) + (0,) * (self.s - len(c)))

    def zero(self) -> "FFElement":
        return self.element(0)

    def one(self) -> "FFElement":
        return self.element(1)

    def gen(self) -> "FFElement":
        """The class of ``t``, a root of the modulus."""
        return self.element([0, 1])

    def elements(self) -> Iterator["FFElement"]:
        for c in itertools.product(range(self.p), repeat=self.s):
            yield FFElement(self, tuple(reversed(c)))

    def nonzero_elements(self) -> Iterator["FFElement"]:
        for x in self.elements():
            if not x.is_zero():
                yield x

    @cached_property
    def basis_traces(self) -> tuple[int, ...]:
        """Tr(t^j) for j < s; the trace is GF(p)-linear in these."""
        return tuple(trace_to_prime(self.element([0] * j + [1])) for j in range(self.s))

    @cached_property
    def multiplicative_generator(self) -> "FFElement":
        n = self.q - 1
        primes = _prime_factors(n)
        for x in self.nonzero_elements():
            if all(x ** (n // r) != self.one() for r in primes):
                return x
        raise AssertionError("no multiplicative generator found")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FFElement:
    field: FiniteField = field(repr=False)
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "FFElement") -> None:
        if other.field != self.field:
            raise ValueError("elements of different fields")

    def __add__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FFElement":
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: "FFElement") -> "FFElement":
        return self + (-other)

    def __mul__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        f = self.field
        prod = _poly_mulmod(self.coeffs, other.coeffs, f.modulus, f.p)
        return FFElement(f, tuple(prod) + (0,) * (f.s - len(prod)))

    def __pow__(self, e: int) -> "FFElement":
        f = self.field
        if e < 0:
            if self.is_zero():
                raise ZeroArgument("zero has no inverse")
            e %= f.q - 1
        r = _poly_powmod(self.coeffs, e, f.modulus, f.p)
        return FFElement(f, tuple(r) + (0,) * (f.s - len(r)))

    def frobenius(self) -> "FFElement":
        return self ** self.field.p

    def __int__(self) -> int:
        return sum(c * self.field.p ** i for i, c in enumerate(self.coeffs))


def trace_to_prime(x: FFElement) -> int:
    """Tr(x) = x + x^p + ... + x^(p^(s-1)), returned as an integer mod p."""
    total = x
    y = x
    for _ in range(x.field.s - 1):
        y = y.frobenius()
        total = total + y
    if any(total.coeffs[1:]):
        raise AssertionError("trace did not land in the prime field")
    return total.coeffs[0]


def canonical_additive_char(x: FFElement) -> CycloNumber:
    """psi_q(x) = exp(2 pi i Tr(x) / p)."""
    return root_of_unity(x.field.p, trace_to_prime(x))


def quadratic_character(x: FFElement) -> int:
    """Euler's criterion: x^((q-1)/2) in {1, -1}."""
    f = x.field
    if f.p == 2:
        raise EvenCharacteristic("quadratic character needs odd characteristic")
    if x.is_zero():
        raise ZeroArgument("quadratic character of 0")
    y = x ** ((f.q - 1) // 2)
    if y == f.one():
        return 1
    if y == -f.one():
        return -1
    raise AssertionError("Euler criterion gave a non-sign")


def gauss_sum_bruteforce(fld: FiniteField) -> CycloNumber:
    """Sum over all x != 0 of chi(x) psi(x) by explicit enumeration.

    The nonzero elements are walked as powers g^k of a multiplicative
    generator, so chi(g^k) = (-1)^k; psi uses the linear form of the trace.
    """
    p = fld.p
    if p == 2:
        raise EvenCharacteristic("Gauss sums are defined here for odd p only")
    g = fld.multiplicative_generator
    traces = fld.basis_traces
    counts = [0] * p
    x = fld.one()
    sign = 1
    for _ in range(fld.q - 1):
        tr = sum(c * t for c, t in zip(x.coeffs, traces)) % p
        counts[tr] += sign
        x = x * g
        sign = -sign
    if x != fld.one():
        raise AssertionError("generator walk did not close up")
    return CycloNumber(p, dict(enumerate(counts)))


def gauss_sum_closed_form(p: int, s: int) -> CycloNumber:
    """(-1)^(s-1) q^(1/2) for p = 1 mod 4, (-1)^(s-1) i^s q^(1/2) for p = 3 mod 4."""
    if p == 2:
        raise EvenCharacteristic("closed form needs odd p")
    if s < 1:
        raise ValueError("degree must be >= 1")
    sqrt_q = CycloNumber.rational(p ** (s // 2))
    if s % 2:
        sqrt_q = sqrt_q * sqrt_prime(p)
    value = sqrt_q.scale((-1) ** (s - 1))
    if p % 4 == 3:
        value = value * root_of_unity(4, s)
    return value
