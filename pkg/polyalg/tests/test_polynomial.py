import pytest

from common.errors import PreconditionError
from polyalg.polynomial import IntPolynomial, format_polynomial, poly_gcd


def P(*high_first):
    return IntPolynomial.from_high_first(high_first)


def test_normalization_strips_trailing_zeros():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coefficients == (1, 2)
    assert p.degree() == 1
    zero = IntPolynomial(())
    assert zero.is_zero() and zero.degree() == -1 and zero.leading() == 0


def test_arithmetic():
    x = IntPolynomial.monomial(1)
    one = IntPolynomial.constant(1)
    assert (x - one) * (x + one) == P(1, 0, -1)
    assert (x - one) ** 3 == P(1, -3, 3, -1)
    assert (x + one) - (x + one) == IntPolynomial(())
    assert P(1, -3, 1).evaluate(2) == -1


def test_divmod_monic():
    q, r = P(1, 0, 0, -1).divmod_monic(P(1, -1))
    assert q == P(1, 1, 1)
    assert r.is_zero()
    with pytest.raises(PreconditionError):
        P(1, 0, 1).divmod_monic(P(2, 1))


def test_divides():
    assert P(1, 0, 1).divides(P(1, 0, 0, 0, -1))
    assert not P(1, -1).divides(P(1, 0, 1))
    assert P(2).divides(P(4, 2))
    assert not P(2).divides(P(3))


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (P(1, 0, -1), P(1, -1), P(1, -1)),
        (P(1, -3, 1), P(1, 0, 0, 0, -1), P(1)),
        (P(1, 0, 1), P(1, 0, 0, 0, -1), P(1, 0, 1)),
        (P(-2, 2), IntPolynomial(()), P(1, -1)),
    ],
)
def test_poly_gcd(p, q, expected):
    assert poly_gcd(p, q) == expected
    assert poly_gcd(q, p) == expected


def test_poly_gcd_of_two_zeros_is_rejected():
    with pytest.raises(PreconditionError):
        poly_gcd(IntPolynomial(()), IntPolynomial(()))


def test_display_format():
    assert format_polynomial(P(1, -5, 3, -1)) == "-1 + 3*x - 5*x^2 + x^3"
    assert format_polynomial(P(1, 0, 1)) == "1 + x^2"
    assert format_polynomial(P(-1, 0)) == "-x"
    assert format_polynomial(IntPolynomial(())) == "0"
    assert str(P(2, 0, 0)) == "2*x^2"
