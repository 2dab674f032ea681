"""Dense univariate polynomials with exact integer coefficients.

Coefficients are Python ints, so nothing overflows. The representation is a
tuple indexed by degree with trailing zeros stripped; the zero polynomial is
the empty tuple and has degree -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from flaghodge.errors import NonExactDivision

__all__ = [
    "IntPolynomial",
    "poly_mul",
    "poly_exact_div",
    "eval_at_one",
    "one_minus_t_power",
    "t_integer",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __floordiv__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_exact_div(self, other)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def even_part_only(self) -> bool:
        return all(c == 0 for c in self.coefficients[1::2])

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact product of two polynomials (schoolbook convolution)."""
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    bc = b.coefficients
    for i, ai in enumerate(a.coefficients):
        if ai == 0:
            continue
        for j, bj in enumerate(bc):
            if bj:
                out[i + j] += ai * bj
    return IntPolynomial(out)


def poly_exact_div(numerator: IntPolynomial, denominator: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``numerator == q * denominator``.

    Raises
    ------
    ZeroDivisionError
        If ``denominator`` is zero.
    NonExactDivision
        If no such integer polynomial exists. The exception carries the
        remainder reached by long division.
    """
    if denominator.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(numerator.coefficients)
    dc = denominator.coefficients
    dlead = dc[-1]
    dd = len(dc) - 1
    if len(rem) - 1 < dd:
        if rem:
            raise NonExactDivision(IntPolynomial(rem))
        return IntPolynomial()
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd]
        if c == 0:
            continue
        q, r = divmod(c, dlead)
        if r:
            raise NonExactDivision(
                IntPolynomial(rem),
                f"leading coefficient {dlead} does not divide {c} at degree {k + dd}",
            )
        quot[k] = q
        for j, dj in enumerate(dc):
            rem[k + j] -= q * dj
    if any(rem):
        raise NonExactDivision(IntPolynomial(rem))
    return IntPolynomial(quot)


def eval_at_one(p: IntPolynomial) -> int:
    return sum(p.coefficients)


def one_minus_t_power(d: int) -> IntPolynomial:
    """The binomial ``1 - t**d``."""
    if d <= 0:
        raise ValueError("exponent must be positive")
    return IntPolynomial((1,) + (0,) * (d - 1) + (-1,))


def t_integer(d: int) -> IntPolynomial:
    """The quantum integer ``(1 - t**d) / (1 - t) = 1 + t + ... + t**(d-1)``."""
    if d <= 0:
        raise ValueError("d must be positive")
    return IntPolynomial((1,) * d)
