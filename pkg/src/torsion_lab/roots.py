"""Exact arithmetic for roots of unity and small cyclotomic numbers.

A root of unity is stored as its rational exponent q (meaning e^{2 pi i q}),
reduced mod 1.  Sums of roots live in ``CyclotomicNumber``, a formal rational
combination with field-level equality decided by reduction modulo the
cyclotomic polynomial.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Union

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """e^{2 pi i * exponent} with exponent an exact rational in [0, 1)."""

    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

    @classmethod
    def make(cls, num: int, den: int) -> "RootOfUnity":
        return cls(Fraction(num, den))

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(ZERO)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + other.exponent)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * k)

    def is_one(self) -> bool:
        return self.exponent == 0

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def as_json(self) -> dict:
        return {"num": self.exponent.numerator, "den": self.exponent.denominator}

    def __repr__(self) -> str:
        q = self.exponent
        return f"RootOfUnity({q.numerator}/{q.denominator})"


def _poly_div_exact(num: list[int], den: Iterable[int]) -> list[int]:
    # exact division of integer polynomials, divisor monic; coefficients ascending
    den = list(den)
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicNumber:
    """Formal rational combination of roots of unity, with exact equality.

    Terms map an exponent q in [0, 1) to a rational coefficient.  Equality,
    zero-testing and rationality are decided in the field Q(zeta_L), L the lcm
    of the exponent denominators, by reducing mod the L-th cyclotomic
    polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict[Fraction, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for q, c in items:
                q = Fraction(q) % 1
                c = Fraction(c)
                if c:
                    data[q] = data.get(q, ZERO) + c
        self.terms = {q: c for q, c in data.items() if c}

    @classmethod
    def zero(cls) -> "CyclotomicNumber":
        return cls()

    @classmethod
    def from_rational(cls, c: RationalLike) -> "CyclotomicNumber":
        return cls({ZERO: Fraction(c)})

    @classmethod
    def from_root(cls, root: RootOfUnity, coeff: RationalLike = 1) -> "CyclotomicNumber":
        return cls({root.exponent: Fraction(coeff)})

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[Fraction, int]) -> "CyclotomicNumber":
        return cls({q: Fraction(c) for q, c in counts.items()})

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        other = _coerce(other)
        merged = dict(self.terms)
        for q, c in other.terms.items():
            merged[q] = merged.get(q, ZERO) + c
        return CyclotomicNumber(merged)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber({q: -c for q, c in self.terms.items()})

    def __sub__(self, other) -> "CyclotomicNumber":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CyclotomicNumber":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber({q: c * other for q, c in self.terms.items()})
        other = _coerce(other)
        out: dict[Fraction, Fraction] = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = (q1 + q2) % 1
                out[q] = out.get(q, ZERO) + c1 * c2
        return CyclotomicNumber(out)

    __rmul__ = __mul__

    def __truediv__(self, k: RationalLike) -> "CyclotomicNumber":
        return self * Fraction(1, 1) * Fraction(Fraction(k).denominator, Fraction(k).numerator)

    def _reduced(self) -> tuple[int, tuple[Fraction, ...]]:
        if not self.terms:
            return 1, ()
        L = lcm(*(q.denominator for q in self.terms))
        coeffs = [ZERO] * L
        for q, c in self.terms.items():
            coeffs[int(q * L)] += c
        phi = cyclotomic_polynomial(L)
        deg = len(phi) - 1
        for i in range(L - 1, deg - 1, -1):
            c = coeffs[i]
            if c:
                for j, pj in enumerate(phi):
                    coeffs[i - deg + j] -= c * pj
        rem = coeffs[:deg]
        while rem and rem[-1] == 0:
            rem.pop()
        return L, tuple(rem)

    def is_zero(self) -> bool:
        return not self._reduced()[1]

    def is_rational(self) -> bool:
        _, rem = self._reduced()
        return len(rem) <= 1

    def as_fraction(self) -> Fraction:
        _, rem = self._reduced()
        if len(rem) > 1:
            raise ValueError(f"{self!r} is not rational")
        return rem[0] if rem else ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # mutable-dict backed; use keys derived from as_json instead

    def as_json(self):
        if self.is_rational():
            return str(self.as_fraction())
        items = sorted(self.terms.items())
        return {
            "terms": [
                [{"num": q.numerator, "den": q.denominator}, str(c)] for q, c in items
            ]
        }

    def __repr__(self) -> str:
        if not self.terms:
            return "CyclotomicNumber(0)"
        bits = " + ".join(f"{c}*e({q})" for q, c in sorted(self.terms.items()))
        return f"CyclotomicNumber({bits})"


def _coerce(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, RootOfUnity):
        return CyclotomicNumber.from_root(x)
    if isinstance(x, (int, Fraction)):
        return CyclotomicNumber.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to CyclotomicNumber")
