"""Integer polynomials and cyclotomic eigenvalue detection (see polyalg.cyclotomic)."""

from .polynomial import IntPolynomial, format_polynomial, poly_gcd

__all__ = ["IntPolynomial", "format_polynomial", "poly_gcd"]
