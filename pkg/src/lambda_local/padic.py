"""Invariant-level local fields and explicit characters of Q_p^x.

Fields are described by their ramification/residue tower only; no element
arithmetic beyond rationals is attempted.  Characters of ``Q_p^x`` are
stored by their value on ``p`` and on generators of ``U/U^a`` where ``a``
is the conductor.  Values are roots of unity written as exponents ``r``
in ``[0, 1)`` standing for ``exp(2 pi i r)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .cyclo import CycloNumber, Mu4, _is_prime
from .errors import (
    InvalidCharacter,
    UnsupportedConductor,
    UnsupportedField,
    WildDifferentUnknown,
    ZeroArgument,
)

__all__ = [
    "LocalField",
    "ExtensionDescriptor",
    "AddChar",
    "MultChar",
    "valuation",
    "unit_part",
    "p_adic_fractional_part",
    "eval_canonical_add_char",
    "conductor_after_trace",
    "unit_representatives",
    "eval_mult_char",
    "square_class_group_order",
    "unit_generators",
    "quadratic_characters",
    "Q2_QUADRATIC_TABLE",
    "q2_character",
    "norm_group_classes",
    "hilbert_symbol_2",
    "MAX_EXPLICIT_CONDUCTOR",
]

MAX_EXPLICIT_CONDUCTOR = 3

STEP_KINDS = ("unramified", "tame", "wild")


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


# -- fields -----------------------------------------------------------------

def _tower_invariants(p: int, steps: tuple[tuple[str, int], ...]):
    e = f = 1
    d: int | None = 0
    for kind, k in steps:
        if kind not in STEP_KINDS:
            raise ValueError(f"unknown tower step {kind!r}")
        if k < 1:
            raise ValueError(f"step degree must be >= 1, got {k}")
        if kind == "unramified":
            f *= k
        elif kind == "tame":
            if k % p == 0:
                raise ValueError(f"tame step e={k} is divisible by p={p}")
            # tower rule d_{K/F} = e_{K/L} d_{L/F} + d_{K/L}
            d = None if d is None else k * d + (k - 1)
            e *= k
        else:
            if k % p:
                raise ValueError(f"wild step e={k} is prime to p={p}")
            d = None
            e *= k
    return e, f, d


@dataclass(frozen=True)
class LocalField:
    """A finite extension of Q_p given by a tower of steps over Q_p.

    Each step is ``("unramified", f)``, ``("tame", e)`` with ``p`` not
    dividing ``e``, or ``("wild", e)``.  The different exponent is only
    known when no wild step is present.
    """

    p: int
    tower: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        _check_prime(self.p)
        steps = tuple((str(k), int(n)) for k, n in self.tower)
        object.__setattr__(self, "tower", steps)
        _tower_invariants(self.p, steps)

    @classmethod
    def qp(cls, p: int) -> "LocalField":
        return cls(p, ())

    @property
    def e(self) -> int:
        return _tower_invariants(self.p, self.tower)[0]

    @property
    def f(self) -> int:
        return _tower_invariants(self.p, self.tower)[1]

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def is_qp(self) -> bool:
        return self.degree == 1

    @property
    def has_wild_step(self) -> bool:
        return any(k == "wild" for k, _ in self.tower)

    @property
    def different_exponent(self) -> int:
        """d_{F/Q_p}, the valuation of the different in the normalized valuation of F."""
        d = _tower_invariants(self.p, self.tower)[2]
        if d is None:
            raise WildDifferentUnknown("different exponent of a wild step is not determined")
        return d

    def extend(self, steps: Iterable[tuple[str, int]]) -> "LocalField":
        return LocalField(self.p, self.tower + tuple(steps))

    def to_json(self) -> dict:
        return {"p": self.p, "tower": [list(s) for s in self.tower]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LocalField":
        return cls(int(data["p"]), tuple(tuple(s) for s in data.get("tower", ())))

    def __str__(self):
        if not self.tower:
            return f"Q{self.p}"
        return f"Q{self.p}[" + ", ".join(f"{k} {n}" for k, n in self.tower) + "]"


EXTENSION_KINDS = ("unramified", "tame", "wild_quadratic", "galois")


@dataclass(frozen=True)
class ExtensionDescriptor:
    """K/F where F = ``base`` and K is ``base`` extended by ``steps``."""

    base: LocalField
    steps: tuple[tuple[str, int], ...]
    kind: str
    group: object | None = field(default=None, compare=False)
    ramification_break: int | None = None

    def __post_init__(self):
        steps = tuple((str(k), int(n)) for k, n in self.steps)
        object.__setattr__(self, "steps", steps)
        if self.kind not in EXTENSION_KINDS:
            raise ValueError(f"unknown extension kind {self.kind!r}")
        _tower_invariants(self.base.p, steps)
        kinds = {k for k, _ in steps}
        if self.kind == "unramified" and kinds - {"unramified"}:
            raise ValueError("unramified extension with ramified steps")
        if self.kind == "tame" and "wild" in kinds:
            raise ValueError("tame extension with a wild step")
        if self.kind == "wild_quadratic" and self.degree != 2:
            raise ValueError("wild quadratic extension must have degree 2")

    @classmethod
    def unramified(cls, base: LocalField, f: int) -> "ExtensionDescriptor":
        return cls(base, (("unramified", f),), "unramified")

    @classmethod
    def tame(cls, base: LocalField, e: int, f: int = 1) -> "ExtensionDescriptor":
        steps = ((("unramified", f),) if f > 1 else ()) + (("tame", e),)
        return cls(base, steps, "tame")

    @property
    def top(self) -> LocalField:
        return self.base.extend(self.steps)

    @property
    def e(self) -> int:
        return _tower_invariants(self.base.p, self.steps)[0]

    @property
    def f(self) -> int:
        return _tower_invariants(self.base.p, self.steps)[1]

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def different_exponent(self) -> int:
        d = _tower_invariants(self.base.p, self.steps)[2]
        if d is None:
            raise WildDifferentUnknown("wild step present; d_{K/F} unknown")
        return d

    def quadratic_conductor(self) -> int:
        """a(omega_{K/F}) = t + 1 for a quadratic K/F."""
        if self.degree != 2:
            raise ValueError("conductor of omega_{K/F} needs a quadratic extension")
        if self.ramification_break is not None:
            return self.ramification_break + 1
        if self.e == 1:
            return 0
        if self.kind == "tame" or self.base.p != 2:
            return 1
        raise WildDifferentUnknown("wild quadratic extension without a ramification break")


def conductor_after_trace(ext: ExtensionDescriptor, n_psi: int) -> int:
    """n(psi o Tr_{K/F}) = e_{K/F} n(psi) + d_{K/F}."""
    return ext.e * n_psi + ext.different_exponent


def square_class_group_order(F: LocalField) -> int:
    if F.p != 2:
        return 4
    return 2 ** (2 + F.degree)


# -- rationals as p-adic numbers -----------------------------------------------

def valuation(x, p: int) -> int:
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("valuation of 0")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def unit_part(x, p: int, modulus: int) -> int:
    """The class of x p^{-v(x)} in (Z/modulus)^x, for modulus a power of p."""
    x = Fraction(x) / Fraction(p) ** valuation(x, p)
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def p_adic_fractional_part(x, p: int) -> Fraction:
    """The r in Z[1/p] ∩ [0, 1) with x - r in Z_p.

    For x = a / (p^k m) with gcd(m, p) = 1 this is (a m^{-1} mod p^k) / p^k.
    Other primes in the denominator are units at p and contribute nothing.
    """
    x = Fraction(x)
    d = x.denominator
    pk = 1
    while d % p == 0:
        d //= p
        pk *= p
    if pk == 1:
        return Fraction(0)
    return Fraction(x.numerator * pow(d, -1, pk) % pk, pk)


def _root(r: Fraction) -> CycloNumber:
    r = r % 1
    return CycloNumber(r.denominator, {r.numerator: 1})


def eval_canonical_add_char(F: LocalField, x) -> CycloNumber:
    """psi_{Q_p}(x) = exp(2 pi i {x}_p)."""
    if not F.is_qp:
        raise UnsupportedField(f"explicit evaluation of psi_F needs F = Q_p, got {F}")
    return _root(p_adic_fractional_part(x, F.p))


@dataclass(frozen=True)
class AddChar:
    """psi(x) = psi_F(b x) for a rational shift b."""

    field: LocalField
    shift: Fraction = Fraction(1)

    def __post_init__(self):
        b = Fraction(self.shift)
        if b == 0:
            raise ZeroArgument("additive character shift must be nonzero")
        object.__setattr__(self, "shift", b)

    @property
    def conductor(self) -> int:
        """n(b psi_F) = nu_F(b) + d_{F/Q_p}."""
        return self.field.e * valuation(self.shift, self.field.p) + self.field.different_exponent

    def shifted(self, b) -> "AddChar":
        return AddChar(self.field, self.shift * Fraction(b))

    def __call__(self, x) -> CycloNumber:
        return eval_canonical_add_char(self.field, self.shift * Fraction(x))


# -- unit groups ---------------------------------------------------------------

def unit_representatives(p: int, a: int) -> list[int]:
    if a < 0:
        raise ValueError("conductor must be >= 0")
    if a == 0:
        return [1]
    m = p ** a
    return [x for x in range(1, m) if x % p]


@lru_cache(maxsize=None)
def _primitive_root(p: int) -> int:
    """Least g that generates (Z/p^k)^x for every k (p odd)."""
    phi = p - 1
    primes = [r for r in range(2, phi + 1) if phi % r == 0 and _is_prime(r)]
    for g in range(2, p * p):
        if g % p and all(pow(g, phi // r, p) != 1 for r in primes) and pow(g, p - 1, p * p) != 1:
            return g
    raise AssertionError("no primitive root")


def unit_generators(p: int) -> tuple[int, ...]:
    """Fixed generators of U/U^3: (3, 5) for p = 2, (g,) for odd p."""
    return (3, 5) if p == 2 else (_primitive_root(p),)


def _unit_exponents(p: int, u: int) -> tuple[int, ...]:
    """Coordinates of the unit u in the generators, modulo U^3."""
    if p == 2:
        return {1: (0, 0), 3: (1, 0), 5: (0, 1), 7: (1, 1)}[u % 8]
    m = p ** MAX_EXPLICIT_CONDUCTOR
    g = _primitive_root(p)
    return (_dlog(g, u % m, m),)


@lru_cache(maxsize=None)
def _dlog_table(g: int, m: int) -> dict[int, int]:
    table, x = {}, 1
    for k in range(m):
        if x in table:
            break
        table[x] = k
        x = x * g % m
    return table


def _dlog(g: int, u: int, m: int) -> int:
    return _dlog_table(g, m)[u]


# -- multiplicative characters -----------------------------------------------

_VALUE_RE = re.compile(r"^e\((-?\d+(?:/\d+)?)\)$")


def _parse_value(v) -> Fraction:
    """'+1', '-1', 'i', '-i', 'e(r)' or a Mu4/int into an exponent in [0, 1)."""
    if isinstance(v, Mu4):
        return Fraction(v.k, 4)
    if isinstance(v, int) and v in (1, -1):
        return Fraction(0 if v == 1 else 1, 2) % 1
    if isinstance(v, Fraction):
        return v % 1
    if isinstance(v, str):
        m = _VALUE_RE.match(v.strip())
        if m:
            return Fraction(m.group(1)) % 1
        try:
            return Fraction(Mu4.parse(v).k, 4)
        except ValueError:
            pass
    raise InvalidCharacter(f"cannot read a root of unity from {v!r}")


def _format_value(r: Fraction) -> str:
    if (4 * r).denominator == 1:
        return ("+1", "i", "-1", "-i")[int(4 * r)]
    return f"e({r})"


def _conductor(p: int, units: tuple[Fraction, ...]) -> int:
    if all(r == 0 for r in units):
        return 0
    if p == 2:
        # U^2 = <5> U^3 and U^1 = U; a = 1 cannot occur
        return 3 if units[1] != 0 else 2
    (r,) = units
    # U^m / U^3 is generated by g^{phi(p^m)}
    for m in range(1, MAX_EXPLICIT_CONDUCTOR + 1):
        if (r * (p - 1) * p ** (m - 1)).denominator == 1:
            return m
    raise UnsupportedConductor(f"character of conductor > {MAX_EXPLICIT_CONDUCTOR}")


@dataclass(frozen=True)
class MultChar:
    """A character of Q_p^x of conductor at most 3.

    ``on_uniformizer`` is the exponent of chi(p); ``on_units`` lists the
    exponents of chi on :func:`unit_generators` ``(p)``.
    """

    p: int
    on_uniformizer: Fraction
    on_units: tuple[Fraction, ...]

    def __post_init__(self):
        _check_prime(self.p)
        gens = unit_generators(self.p)
        units = tuple(_parse_value(v) for v in self.on_units)
        if len(units) != len(gens):
            raise InvalidCharacter(f"expected values on generators {gens}, got {len(units)}")
        if self.p == 2 and any((2 * r).denominator != 1 for r in units):
            raise InvalidCharacter("3 and 5 have order 2 in U/U^3, values must be signs")
        if self.p != 2:
            n = (self.p - 1) * self.p ** (MAX_EXPLICIT_CONDUCTOR - 1)
            if (units[0] * n).denominator != 1:
                raise UnsupportedConductor("value on the generator has order beyond U/U^3")
        object.__setattr__(self, "on_uniformizer", _parse_value(self.on_uniformizer))
        object.__setattr__(self, "on_units", units)
        _conductor(self.p, units)

    @classmethod
    def trivial(cls, p: int) -> "MultChar":
        return cls(p, Fraction(0), tuple(Fraction(0) for _ in unit_generators(p)))

    @classmethod
    def unramified(cls, p: int, value_at_p) -> "MultChar":
        return cls(p, value_at_p, tuple(Fraction(0) for _ in unit_generators(p)))

    @property
    def conductor(self) -> int:
        return _conductor(self.p, self.on_units)

    a = conductor

    @property
    def is_unramified(self) -> bool:
        return self.conductor == 0

    @property
    def is_quadratic(self) -> bool:
        return all((2 * r).denominator == 1 for r in (self.on_uniformizer,) + self.on_units)

    def exponent_at(self, x) -> Fraction:
        if Fraction(x) == 0:
            raise ZeroArgument("characters of F^x are not defined at 0")
        v = valuation(x, self.p)
        r = v * self.on_uniformizer
        if self.conductor:
            u = unit_part(x, self.p, self.p ** MAX_EXPLICIT_CONDUCTOR)
            for k, s in zip(_unit_exponents(self.p, u), self.on_units):
                r += k * s
        return r % 1

    def __call__(self, x) -> CycloNumber:
        return _root(self.exponent_at(x))

    def sign_at(self, x) -> int:
        r = self.exponent_at(x)
        if r == 0:
            return 1
        if r == Fraction(1, 2):
            return -1
        raise InvalidCharacter(f"chi({x}) is not a sign")

    def mu4_at(self, x) -> Mu4:
        r = self.exponent_at(x)
        if (4 * r).denominator != 1:
            raise InvalidCharacter(f"chi({x}) is not a fourth root of unity")
        return Mu4(int(4 * r))

    def inverse(self) -> "MultChar":
        return MultChar(self.p, -self.on_uniformizer, tuple(-r for r in self.on_units))

    def __mul__(self, other: "MultChar") -> "MultChar":
        if other.p != self.p:
            raise InvalidCharacter("characters over different fields")
        return MultChar(
            self.p,
            self.on_uniformizer + other.on_uniformizer,
            tuple(r + s for r, s in zip(self.on_units, other.on_units)),
        )

    def to_json(self) -> dict:
        gens = unit_generators(self.p)
        return {
            "p": self.p,
            "a": self.conductor,
            "on_uniformizer": _format_value(self.on_uniformizer),
            "on_units": {str(g): _format_value(r) for g, r in zip(gens, self.on_units)},
        }

    @classmethod
    def from_json(cls, data: Mapping, p: int | None = None) -> "MultChar":
        p = int(data.get("p", p if p is not None else 2))
        gens = unit_generators(p)
        units = data.get("on_units", {})
        extra = set(map(str, units)) - {str(g) for g in gens}
        if extra:
            raise InvalidCharacter(f"values must be given on generators {gens}, got keys {sorted(extra)}")
        chi = cls(p, data.get("on_uniformizer", "+1"), tuple(units.get(str(g), "+1") for g in gens))
        if "a" in data and int(data["a"]) != chi.conductor:
            raise InvalidCharacter(f"stated conductor {data['a']} but the data has conductor {chi.conductor}")
        return chi

    def __str__(self):
        gens = unit_generators(self.p)
        vals = ", ".join(f"chi({g})={_format_value(r)}" for g, r in zip(gens, self.on_units))
        return f"chi[p={self.p}, a={self.conductor}, chi({self.p})={_format_value(self.on_uniformizer)}, {vals}]"


def eval_mult_char(chi: MultChar, x) -> CycloNumber:
    return chi(x)


def quadratic_characters(p: int) -> tuple[MultChar, ...]:
    """All nontrivial quadratic characters of Q_p^x in a fixed order.

    Odd p: the unramified one, then the ramified ones with chi(p) = +1, -1.
    p = 2: the seven entries of :data:`Q2_QUADRATIC_TABLE`.
    """
    if p == 2:
        return tuple(q2_character(row) for row in Q2_QUADRATIC_TABLE)
    half = Fraction(1, 2)
    return (
        MultChar(p, half, (Fraction(0),)),
        MultChar(p, Fraction(0), (half,)),
        MultChar(p, half, (half,)),
    )


# Quadratic extensions Q_2(sqrt d) and their characters omega, keyed by
# (omega(2), omega(3), omega(5)); derived from Hilbert symbols (d, x)_2.
Q2_QUADRATIC_TABLE: tuple[dict, ...] = (
    {"label": "chi1", "d": 5, "key": (-1, 1, 1)},
    {"label": "chi2", "d": -1, "key": (1, -1, 1)},
    {"label": "chi3", "d": -5, "key": (-1, -1, 1)},
    {"label": "chi4", "d": 2, "key": (1, -1, -1)},
    {"label": "chi5", "d": 10, "key": (-1, -1, -1)},
    {"label": "chi6", "d": -2, "key": (1, 1, -1)},
    {"label": "chi7", "d": -10, "key": (-1, 1, -1)},
)


def q2_character(row: Mapping) -> MultChar:
    c2, c3, c5 = row["key"]
    return MultChar(2, c2, (c3, c5))


def norm_group_classes(chi: MultChar) -> list[int]:
    """Representatives in {1,3,5,7,2,6,10,14} of the kernel of a quadratic chi of Q_2^x."""
    if chi.p != 2:
        raise UnsupportedField("norm-group classes are tabulated for Q_2 only")
    reps = [1, 3, 5, 7, 2, 6, 10, 14]
    return [x for x in reps if chi.sign_at(x) == 1]


def hilbert_symbol_2(x, y) -> int:
    """(x, y)_2 for nonzero rationals, by the standard closed formula."""
    x, y = Fraction(x), Fraction(y)
    a, b = valuation(x, 2), valuation(y, 2)
    u, v = unit_part(x, 2, 8), unit_part(y, 2, 8)

    def eps(t):
        return (t - 1) // 2 % 2

    def omega(t):
        return (t * t - 1) // 8 % 2

    e = eps(u) * eps(v) + a * omega(v) + b * omega(u)
    return -1 if e % 2 else 1
