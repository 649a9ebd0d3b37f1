"""
polyalg.polynomial
------------------
Integer-coefficient polynomials stored lowest degree first.

Greatest common divisors follow the primitive pseudo-remainder sequence from
``sympy.polys.euclidtools`` so every intermediate stays in Z[x].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Sequence

from sympy.polys.densearith import dup_div, dup_mul
from sympy.polys.densetools import dup_primitive
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_primitive_prs

from common.errors import PreconditionError


@dataclass(frozen=True)
class IntPolynomial:
    """c0 + c1*x + ... + cd*x^d with exact integer coefficients.

    Trailing zero coefficients are stripped, so the zero polynomial has no
    coefficients and degree -1.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_high_first(cls, coefficients: Sequence[int]) -> IntPolynomial:
        return cls(tuple(reversed([int(c) for c in coefficients])))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (c,))

    @classmethod
    def from_dup(cls, f: Sequence) -> IntPolynomial:
        return cls.from_high_first([int(c) for c in f])

    def to_dup(self) -> list:
        return [ZZ(c) for c in reversed(self.coefficients)]

    # properties

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading() == 1

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    # arithmetic

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.from_dup(dup_mul(self.to_dup(), other.to_dup(), ZZ))

    def __pow__(self, k: int) -> IntPolynomial:
        result = IntPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Quotient and remainder by a monic divisor (exact over Z)."""
        if not divisor.is_monic():
            raise PreconditionError(f"divisor {divisor} is not monic")
        q, r = dup_div(self.to_dup(), divisor.to_dup(), ZZ)
        return IntPolynomial.from_dup(q), IntPolynomial.from_dup(r)

    def divides(self, other: IntPolynomial) -> bool:
        """True when other = q * self for some q in Z[x]."""
        if self.is_zero():
            return other.is_zero()
        q, _ = dup_div(other.to_dup(), self.to_dup(), ZZ)
        return dup_mul(q, self.to_dup(), ZZ) == other.to_dup()

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        _, prim = dup_primitive(self.to_dup(), ZZ)
        result = IntPolynomial.from_dup(prim)
        return -result if result.leading() < 0 else result

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        raise PreconditionError("gcd of two zero polynomials is undefined")
    if q.is_zero():
        return p.primitive()
    if p.is_zero():
        return q.primitive()
    f, g = (p, q) if p.degree() >= q.degree() else (q, p)
    prs = dup_primitive_prs(f.to_dup(), g.to_dup(), ZZ)
    return IntPolynomial.from_dup(prs[-1]).primitive()


def format_polynomial(p: IntPolynomial, var: str = "x") -> str:
    """Render as ``c0 + c1*x + c2*x^2 ...`` with zero terms suppressed."""
    terms: list[tuple[bool, str]] = []
    for i, c in enumerate(p.coefficients):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    negative, body = terms[0]
    text = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


__all__ = ["IntPolynomial", "format_polynomial", "poly_gcd"]
