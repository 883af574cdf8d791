"""
Exact integer polynomial arithmetic, composition and the polynomial text grammar.
"""
from dataclasses import dataclass
from itertools import zip_longest
from operator import index
from typing import Any, Iterable, List, Tuple, Union

from pyparsing import (
    Literal,
    Opt,
    ParseException,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
    one_of,
)

from nearring.utils.logging import PolynomialSyntaxError


NEG_INFINITY = float("-inf")

Degree = Union[int, float]


@dataclass(frozen=True)
class IntPoly:
    """
    Dense integer polynomial; coeffs[i] is the coefficient of x^i.

    Trailing zeros are stripped on construction, so the zero polynomial
    has an empty coefficient tuple.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        try:
            coeffs = tuple(index(c) for c in self.coeffs)
        except TypeError:
            raise TypeError(f"Coefficients must be integers, got {self.coeffs!r}") from None
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def identity(cls) -> "IntPoly":
        """The polynomial x, left identity for composition."""
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError(f"Exponent must be non-negative, got {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]]) -> "IntPoly":
        """Build from (coefficient, exponent) pairs, summing repeats."""
        result: List[int] = []
        for coefficient, exponent in terms:
            if exponent >= len(result):
                result.extend([0] * (exponent + 1 - len(result)))
            result[exponent] += coefficient
        return cls(tuple(result))

    from_vector = from_coeffs

    @property
    def degree(self) -> Degree:
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> int:
        return coeff_at(self, i)

    def to_vector(self, length: int) -> Tuple[int, ...]:
        """Coefficients c_0..c_{length-1}, zero padded."""
        if len(self.coeffs) > length:
            raise ValueError(f"Degree {self.degree} does not fit in a vector of length {length}")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def terms(self) -> List[Tuple[int, int]]:
        """Nonzero (coefficient, exponent) pairs in ascending degree."""
        return [(c, i) for i, c in enumerate(self.coeffs) if c]

    def compose(self, other: "IntPoly") -> "IntPoly":
        return compose(self, other)

    def __call__(self, other: "IntPoly") -> "IntPoly":
        return compose(self, other)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return sub(self, other)

    def __neg__(self) -> "IntPoly":
        return neg(self)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other: int) -> "IntPoly":
        return scale(self, other)

    def __str__(self) -> str:
        return render_poly(self)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return IntPoly(tuple(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0)))


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return IntPoly(tuple(a - b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0)))


def neg(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(-c for c in p.coeffs))


def scale(p: IntPoly, k: int) -> IntPoly:
    return IntPoly(tuple(k * c for c in p.coeffs))


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Convolution product."""
    if p.is_zero() or q.is_zero():
        return IntPoly.zero()
    result = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            result[i + j] += a * b
    return IntPoly(tuple(result))


def power(p: IntPoly, n: int) -> IntPoly:
    """p multiplied by itself n times."""
    if n < 0:
        raise ValueError(f"Power must be non-negative, got {n}")
    result = IntPoly.one()
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """
    Substitute q into p, i.e. (p o q)(x) = p(q(x)).

    Evaluated by Horner's scheme over IntPoly.

    Args:
        p: Outer polynomial
        q: Inner polynomial

    Returns:
        The composition p o q
    """
    if p.is_constant():
        return p
    result = IntPoly.zero()
    for c in reversed(p.coeffs):
        result = add(mul(result, q), IntPoly((c,)))
    return result


def coeff_at(p: IntPoly, i: int) -> int:
    """Coefficient of x^i; zero beyond the degree."""
    if i < 0:
        raise ValueError(f"Coefficient index must be non-negative, got {i}")
    return p.coeffs[i] if i < len(p.coeffs) else 0


def render_poly(p: IntPoly) -> str:
    """
    Render in canonical descending-degree form, e.g. "4x^6 - 4x^3 + 3".

    Args:
        p: Polynomial to render

    Returns:
        Text accepted back by parse_poly
    """
    if p.is_zero():
        return "0"

    parts: List[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        magnitude = abs(c)
        body = "" if magnitude == 1 and i > 0 else str(magnitude)
        if i == 1:
            body += "x"
        elif i > 1:
            body += f"x^{i}"

        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


class PolynomialParser:
    """pyparsing grammar for poly := term (('+'|'-') term)*."""

    def __init__(self) -> None:
        natural = Word(nums).set_name("natural")
        natural.set_parse_action(lambda t: int(t[0]))

        # a bare "x" is x^1
        power = Suppress(Literal("x")) + Opt(Suppress("^") + natural, default=1)
        power.set_parse_action(lambda t: [("x", t[0])])

        term = (natural + Opt(power)) | power
        term.set_parse_action(self._term_to_pair)

        sign = one_of("+ -")
        first = Opt(sign, default="+") + term
        rest = sign + term
        first.set_parse_action(self._apply_sign)
        rest.set_parse_action(self._apply_sign)

        self.polynomial = first + ZeroOrMore(rest)

    @staticmethod
    def _term_to_pair(toks: Any) -> List[Tuple[int, int]]:
        coefficient, exponent = 1, 0
        for tok in toks:
            if isinstance(tok, tuple):
                exponent = tok[1]
            else:
                coefficient = tok
        return [(coefficient, exponent)]

    @staticmethod
    def _apply_sign(toks: Any) -> List[Tuple[int, int]]:
        sign, (coefficient, exponent) = toks[0], toks[1]
        return [(-coefficient if sign == "-" else coefficient, exponent)]

    def parse(self, text: str) -> IntPoly:
        try:
            pairs = self.polynomial.parse_string(text, parse_all=True)
        except ParseException as e:
            raise PolynomialSyntaxError(
                f"cannot parse polynomial {text!r} at position {e.loc}", text=text, position=e.loc
            )
        return IntPoly.from_terms(pairs)


_parser = PolynomialParser()


def parse_poly(text: str) -> IntPoly:
    """
    Parse polynomial text such as "2x^10" or "-3x^3+1".

    Args:
        text: Polynomial text; whitespace is insignificant

    Returns:
        The polynomial denoted

    Raises:
        PolynomialSyntaxError: If the text does not match the grammar
    """
    return _parser.parse(text)
