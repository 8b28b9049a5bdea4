"""Exact scalars and harmonic analysis on mu_2^k and mu_8.

Every computation in this package bottoms out here, and everything is exact:
half-integers are stored doubled so sums and negations stay integral,
rationals come from the standard library, sign vectors realize the elementary
abelian 2-group mu_2^k together with its self-dual Pontryagin pairing, and
eighth roots of unity are tracked by exponent.  ``Cyclotomic8`` implements
the field Q(zeta_8), big enough for every matrix identity checked downstream.
No floating point anywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

# Reduced form with positive denominator is exactly the stdlib invariant.
Rational = Fraction


@functools.total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    twice: int

    @classmethod
    def from_int(cls, n: int) -> "HalfInt":
        return cls(2 * n)

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse literals of the form ``"2"``, ``"-3"``, ``"3/2"``, ``"-1/2"``."""
        body = text.strip()
        if "/" in body:
            num, _, den = body.partition("/")
            if den.strip() != "2":
                raise ValueError(f"not a half-integer literal: {text!r}")
            return cls(int(num.strip()))
        return cls(2 * int(body))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_half_odd(self) -> bool:
        """True when the value lies in Z + 1/2."""
        return self.twice % 2 != 0

    @property
    def is_zero(self) -> bool:
        return self.twice == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < other.twice

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


@dataclass(frozen=True)
class SignVector:
    """An element of mu_2^k, as a tuple of +1/-1 entries."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (1, -1) for b in self.bits):
            raise ValueError(f"sign vector entries must be +1 or -1: {self.bits!r}")

    @classmethod
    def identity(cls, k: int) -> "SignVector":
        return cls((1,) * k)

    @classmethod
    def from_index(cls, index: int, k: int) -> "SignVector":
        """Binary encoding: bit j of ``index`` set means coordinate j is -1."""
        return cls(tuple(-1 if (index >> j) & 1 else 1 for j in range(k)))

    def to_index(self) -> int:
        return sum(1 << j for j, b in enumerate(self.bits) if b == -1)

    def __len__(self) -> int:
        return len(self.bits)

    def __mul__(self, other: "SignVector") -> "SignVector":
        if len(self) != len(other):
            raise ValueError("length mismatch in mu_2^k product")
        return SignVector(tuple(a * b for a, b in zip(self.bits, other.bits)))

    @property
    def is_identity(self) -> bool:
        return all(b == 1 for b in self.bits)


def all_sign_vectors(k: int) -> Iterator[SignVector]:
    """All of mu_2^k in binary order, identity first."""
    for index in range(1 << k):
        yield SignVector.from_index(index, k)


def character_eval(chi: SignVector, x: SignVector) -> int:
    """Self-dual pairing <chi, x> = product of x_i over {i : chi_i = -1}.

    Bilinear and symmetric; identifies mu_2^k with its Pontryagin dual.
    """
    if len(chi) != len(x):
        raise ValueError("length mismatch in character pairing")
    value = 1
    for c, b in zip(chi.bits, x.bits):
        if c == -1:
            value *= b
    return value


def fourier_delta(x: SignVector) -> int:
    """Sum of <chi, x> over the full dual: 2^k at the identity, 0 elsewhere."""
    return sum(character_eval(chi, x) for chi in all_sign_vectors(len(x)))


@dataclass(frozen=True)
class UnityRoot8:
    """The root e^{2 pi i exponent / 8}; exponent kept mod 8."""

    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % 8)

    def __mul__(self, other: "UnityRoot8") -> "UnityRoot8":
        return UnityRoot8(self.exponent + other.exponent)

    def conj(self) -> "UnityRoot8":
        return UnityRoot8(-self.exponent)


MU8_ONE = UnityRoot8(0)

_ZERO4 = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Cyclotomic8:
    """An element of Q(zeta_8): c0 + c1*z + c2*z^2 + c3*z^3 with z^4 = -1."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def zero(cls) -> "Cyclotomic8":
        return cls(_ZERO4)

    @classmethod
    def one(cls) -> "Cyclotomic8":
        return cls((Fraction(1),) + _ZERO4[1:])

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "Cyclotomic8":
        return cls((Fraction(value),) + _ZERO4[1:])

    @classmethod
    def from_root(cls, root: UnityRoot8) -> "Cyclotomic8":
        e = root.exponent
        sign = Fraction(1 if e < 4 else -1)
        coeffs = list(_ZERO4)
        coeffs[e % 4] = sign
        return cls(tuple(coeffs))

    def __add__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        return Cyclotomic8(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        return Cyclotomic8(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclotomic8":
        return Cyclotomic8(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "Cyclotomic8") -> "Cyclotomic8":
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b
                else:
                    out[k] += a * b
        return Cyclotomic8(tuple(out))

    def scale(self, factor: Fraction | int) -> "Cyclotomic8":
        f = Fraction(factor)
        return Cyclotomic8(tuple(a * f for a in self.coeffs))

    def conj(self) -> "Cyclotomic8":
        """Complex conjugation: z^k maps to z^{-k}."""
        c0, c1, c2, c3 = self.coeffs
        return Cyclotomic8((c0, -c3, -c2, -c1))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(a == 0 for a in self.coeffs[1:])
