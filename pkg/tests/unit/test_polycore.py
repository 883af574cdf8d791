"""
Unit tests for polynomial arithmetic, composition and parsing.
"""
import pytest

from nearring.algebra.polycore import (
    NEG_INFINITY,
    IntPoly,
    add,
    coeff_at,
    compose,
    mul,
    neg,
    parse_poly,
    power,
    render_poly,
    scale,
    sub,
)
from nearring.utils.logging import PolynomialSyntaxError


X = IntPoly.identity()
X2 = IntPoly.monomial(1, 2)
X3 = IntPoly.monomial(1, 3)


class TestIntPoly:
    """Test the polynomial value type."""

    def test_trailing_zeros_stripped(self):
        """Test that construction normalizes trailing zeros."""
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly((0, 0)) == IntPoly.zero()

    @pytest.mark.parametrize("coeffs", [(1, 2.5), (1.0,), ("3",)])
    def test_non_integer_coefficients(self, coeffs):
        """Test that non-integer coefficients are rejected instead of truncated."""
        with pytest.raises(TypeError, match="must be integers"):
            IntPoly(coeffs)

    def test_zero_degree(self):
        """Test that the zero polynomial has degree minus infinity."""
        assert IntPoly.zero().degree == NEG_INFINITY
        assert IntPoly.constant(5).degree == 0
        assert X3.degree == 3

    def test_from_terms_sums_repeats(self):
        """Test building from (coefficient, exponent) pairs."""
        p = IntPoly.from_terms([(3, 15), (3, 21), (1, 15)])
        assert p.coeff(15) == 4
        assert p.coeff(21) == 3
        assert p.degree == 21

    def test_monomial_negative_exponent(self):
        """Test that negative exponents are rejected."""
        with pytest.raises(ValueError):
            IntPoly.monomial(1, -1)

    def test_coeff_beyond_degree(self):
        """Test coefficient lookup past the degree."""
        assert coeff_at(X2, 7) == 0
        assert coeff_at(X2, 2) == 1

    def test_coeff_negative_index(self):
        """Test that a negative coefficient index is rejected."""
        with pytest.raises(ValueError):
            coeff_at(X2, -1)

    def test_to_vector(self):
        """Test zero-padded coefficient vectors."""
        assert IntPoly((1, 2)).to_vector(4) == (1, 2, 0, 0)
        with pytest.raises(ValueError):
            X3.to_vector(3)

    def test_is_constant(self):
        """Test constant detection."""
        assert IntPoly.zero().is_constant()
        assert IntPoly.constant(-4).is_constant()
        assert not X.is_constant()


class TestArithmetic:
    """Test ring operations."""

    def test_add_sub_neg(self):
        """Test addition, subtraction and negation."""
        p = IntPoly((1, 2, 3))
        q = IntPoly((0, -2, 0, 5))
        assert add(p, q) == IntPoly((1, 0, 3, 5))
        assert sub(p, p) == IntPoly.zero()
        assert neg(p) == IntPoly((-1, -2, -3))
        assert p + q == add(p, q)
        assert p - q == sub(p, q)
        assert -p == neg(p)

    def test_scale(self):
        """Test integer scaling and operator sugar."""
        assert scale(X2, 3) == IntPoly.monomial(3, 2)
        assert X2 * 3 == 3 * X2 == IntPoly.monomial(3, 2)
        assert scale(X2, 0) == IntPoly.zero()

    def test_mul(self):
        """Test the convolution product."""
        p = IntPoly((1, 1))
        assert mul(p, p) == IntPoly((1, 2, 1))
        assert p * IntPoly.zero() == IntPoly.zero()

    def test_power(self):
        """Test repeated multiplication."""
        assert power(IntPoly((1, 1)), 3) == IntPoly((1, 3, 3, 1))
        assert power(X2, 0) == IntPoly.one()
        with pytest.raises(ValueError):
            power(X2, -1)


class TestCompose:
    """Test functional composition."""

    def test_square_of_binomial(self):
        """Test x^2 o (x + 1)."""
        assert compose(X2, IntPoly((1, 1))) == IntPoly((1, 2, 1))

    def test_monomials(self):
        """Test that exponents multiply."""
        assert compose(X2, X3) == IntPoly.monomial(1, 6)
        assert compose(X3, X2) == IntPoly.monomial(1, 6)

    def test_left_identity(self):
        """Test that x is a left identity."""
        p = IntPoly((3, 0, -4, 0, 0, 0, 4))
        assert compose(X, p) == p
        assert compose(p, X) == p

    def test_constant_absorbs(self):
        """Test that constants ignore their argument."""
        c = IntPoly.constant(7)
        assert compose(c, X3) == c
        assert compose(IntPoly.zero(), X3) == IntPoly.zero()

    def test_separation_identity(self):
        """Test x^2 o (x^2 + x^8) - x^4 - x^16 = 2x^10."""
        x8 = IntPoly.monomial(1, 8)
        value = compose(X2, X2 + x8) - IntPoly.monomial(1, 4) - IntPoly.monomial(1, 16)
        assert value == IntPoly.monomial(2, 10)

    def test_method_and_call_sugar(self):
        """Test p.compose(q) and p(q)."""
        assert X2.compose(X3) == X2(X3) == compose(X2, X3)

    def test_left_distributivity_fails(self):
        """Test that x^2 o (x + x) differs from x^2 o x + x^2 o x."""
        assert compose(X2, X + X) != compose(X2, X) + compose(X2, X)


class TestParsing:
    """Test the polynomial grammar."""

    def test_monomial(self):
        """Test a coefficient times a power."""
        assert parse_poly("2x^10") == IntPoly.monomial(2, 10)

    def test_mixed_signs(self):
        """Test several terms with a constant."""
        p = parse_poly("4x^6-4x^3+3")
        assert p.coeff(6) == 4
        assert p.coeff(3) == -4
        assert p.coeff(0) == 3

    def test_zero(self):
        """Test the zero polynomial."""
        assert parse_poly("0") == IntPoly.zero()

    def test_bare_x(self):
        """Test that x alone is x^1."""
        assert parse_poly("x") == X
        assert parse_poly("-x") == neg(X)

    def test_whitespace_insignificant(self):
        """Test spaces between tokens."""
        assert parse_poly(" 3x^2 + 1 ") == IntPoly((1, 0, 3))

    def test_repeated_exponents_sum(self):
        """Test that repeated exponents are summed."""
        assert parse_poly("x^2+x^2") == IntPoly.monomial(2, 2)

    @pytest.mark.parametrize("text", ["2x^", "x^^2", "3y", "", "+-x"])
    def test_syntax_errors(self, text):
        """Test that malformed text raises a syntax error."""
        with pytest.raises(PolynomialSyntaxError) as excinfo:
            parse_poly(text)
        assert excinfo.value.text == text
        assert excinfo.value.position >= 0


class TestRender:
    """Test canonical rendering."""

    def test_render_examples(self):
        """Test descending-degree rendering."""
        assert render_poly(parse_poly("4x^6-4x^3+3")) == "4x^6 - 4x^3 + 3"
        assert render_poly(neg(X)) == "-x"
        assert render_poly(IntPoly.zero()) == "0"
        assert str(IntPoly((-1, 1))) == "x - 1"

    @pytest.mark.parametrize(
        "p",
        [
            IntPoly((3, 0, -4, 0, 0, 0, 4)),
            IntPoly((0, -1)),
            IntPoly((-7,)),
            IntPoly.from_terms([(3, 15), (3, 21)]),
        ],
    )
    def test_render_parses_back(self, p):
        """Test that parse_poly inverts render_poly."""
        assert parse_poly(render_poly(p)) == p
