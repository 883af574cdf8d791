"""
Hand-built derivations for the constructive membership identities.

Environments index their generators in increasing degree: {x^2} is g0,
{x^2, x^3} is g0 and g1, {x, x^2, x^3} is g0, g1, g2 and {x^3} is g0.
"""
from functools import lru_cache
from typing import Dict, List, Tuple

from nearring.algebra.polycore import IntPoly
from nearring.witness.terms import (
    Add,
    Compose,
    Derivation,
    Environment,
    Gen,
    Sub,
    Term,
    Zero,
    times,
)


def _x(e: int) -> IntPoly:
    return IntPoly.monomial(1, e)


def _diff(first: Term, *rest: Term) -> Term:
    """first - rest[0] - rest[1] - ..."""
    result = first
    for t in rest:
        result = Sub(result, t)
    return result


X2_ENV = Environment.of(_x(2))
X2X3_ENV = Environment.of(_x(2), _x(3))
XX2X3_ENV = Environment.of(_x(1), _x(2), _x(3))
X3_ENV = Environment.of(_x(3))


def separation_term() -> Term:
    """x^2 o (x^2 + x^8) - x^4 - x^16 over {x^2}, which is 2x^10."""
    g = Gen(0)
    x4 = Compose(g, g)
    x8 = Compose(g, x4)
    x16 = Compose(g, x8)
    return Sub(Compose(g, Add(g, x8)), Add(x4, x16))


# ---- the nearring generated by x^2 and x^3 ----

_G2 = Gen(0)
_G3 = Gen(1)


def _two_x5() -> Term:
    return _diff(Compose(_G2, Add(_G2, _G3)), x2x3_monomial_term(4), x2x3_monomial_term(6))


def _three_x17() -> Term:
    m = x2x3_monomial_term
    return _diff(
        Compose(_G3, Add(m(4), m(9))),
        m(12),
        times(3, Compose(_G2, m(11))),
        Compose(_G3, m(9)),
    )


def _step_parts(j1: int, j2: int) -> Tuple[Term, Term]:
    """
    The two halves of the induction step for x^(2 j1 + j2).

    Returns:
        (3 x^(2 j1 + j2), 2 x^(2 j1 + j2)) as terms over {x^2, x^3}
    """
    m = x2x3_monomial_term
    low, high = m(j2), m(j1)
    triple = _diff(
        Compose(_G3, Add(high, low)),
        Compose(_G3, low),
        Compose(_G3, high),
        times(3, m(2 * j2 + j1)),
    )
    double = _diff(
        Compose(_G2, Add(m(2 * j1), low)),
        Compose(_G2, m(2 * j1)),
        Compose(_G2, low),
    )
    return triple, double


@lru_cache(maxsize=None)
def x2x3_monomial_term(i: int) -> Term:
    """
    Term over {x^2, x^3} that evaluates to x^i.

    Exponents up to 13 use the explicit constructions; every larger one
    splits as 2 j1 + j2 with j2 in {2, 3} and recurses on smaller exponents.

    Raises:
        ValueError: If i < 2 or i == 5 (x^5 is not a member, only 2x^5)
    """
    if i < 2 or i == 5:
        raise ValueError(f"x^{i} is not in the nearring generated by x^2 and x^3")
    m = x2x3_monomial_term

    if i == 2:
        return _G2
    if i == 3:
        return _G3
    if i == 4:
        return Compose(_G2, _G2)
    if i == 6:
        return Compose(_G2, _G3)
    if i == 8:
        return Compose(_G2, m(4))
    if i == 9:
        return Compose(_G3, _G3)
    if i == 12:
        return Compose(_G3, m(4))
    if i == 7:
        two_x5 = _two_x5()
        quadruple = _diff(Compose(_G2, Add(_G2, two_x5)), m(4), Compose(_G2, two_x5))
        triple = _diff(Compose(_G3, Add(_G2, _G3)), m(6), m(9), times(3, m(8)))
        return Sub(quadruple, triple)
    if i == 10:
        triple = _diff(Compose(_G3, Add(_G2, m(4))), m(6), times(3, m(8)), Compose(_G3, m(4)))
        return Sub(Compose(_G2, _two_x5()), triple)
    if i == 11:
        triple = _diff(Compose(_G3, Add(_G3, m(4))), m(9), times(3, m(10)), Compose(_G3, m(4)))
        double = _diff(Compose(_G2, Add(m(7), m(4))), Compose(_G2, m(7)), m(8))
        return Sub(triple, double)
    if i == 13:
        triple = _diff(Compose(_G3, Add(_G3, m(7))), m(9), _three_x17(), Compose(_G3, m(7)))
        double = _diff(Compose(_G2, Add(_G2, m(11))), m(4), Compose(_G2, m(11)))
        return Sub(triple, double)

    j2 = 2 if i % 2 == 0 else 3
    triple, double = _step_parts((i - j2) // 2, j2)
    return Sub(triple, double)


# ---- the nearring generated by x^3 ----

_G = Gen(0)


def x3_power_term(a: int) -> Term:
    """x^(3^a) over {x^3}, for a >= 1."""
    if a < 1:
        raise ValueError(f"Exponent index must be at least 1, got {a}")
    term: Term = _G
    for _ in range(a - 1):
        term = Compose(_G, term)
    return term


def _cube_cross(p: Term, y: Term) -> Term:
    """x^3 o (p + y) - x^3 o p - x^3 o y, which is 3 p^2 y + 3 p y^2."""
    return _diff(Compose(_G, Add(p, y)), Compose(_G, p), Compose(_G, y))


def x3_family_terms(p: Term, a: int) -> Dict[str, Term]:
    """
    The three members built from p in the nearring and y = x^(3^a).

    Returns:
        "cross" for 3 p^2 y + 3 p y^2, "p2y" for 6 p^2 y and "py2" for 6 p y^2
    """
    y = x3_power_term(a)
    plus = _cube_cross(p, y)
    minus = _cube_cross(Sub(Zero(), p), y)
    return {"cross": plus, "p2y": Add(plus, minus), "py2": Sub(plus, minus)}


def _x3_family(p_exponent: int, a: int, names: Dict[str, str]) -> List[Derivation]:
    p_index = {3: 1, 9: 2, 27: 3}[p_exponent]
    terms = x3_family_terms(x3_power_term(p_index), a)
    y = 3 ** a
    p2y = 2 * p_exponent + y
    py2 = p_exponent + 2 * y
    values = {
        "cross": IntPoly.from_terms([(3, p2y), (3, py2)]),
        "p2y": IntPoly.monomial(6, p2y),
        "py2": IntPoly.monomial(6, py2),
    }
    return [Derivation(name, terms[key], X3_ENV, values[key]) for key, name in names.items()]


def builtin_derivations() -> List[Derivation]:
    """Every built-in derivation, each verifying against its claimed value."""
    m = x2x3_monomial_term
    step_triple, step_double = _step_parts(6, 2)

    derivations = [
        Derivation("sec1-2x10", separation_term(), X2_ENV, IntPoly.monomial(2, 10)),
        Derivation("sec1-x4", m(4), X2_ENV, _x(4)),
        Derivation("thm-x2x3-2x5", _two_x5(), X2X3_ENV, IntPoly.monomial(2, 5)),
        Derivation("thm-x2x3-x7", m(7), X2X3_ENV, _x(7)),
        Derivation("thm-x2x3-x10", m(10), X2X3_ENV, _x(10)),
        Derivation("thm-x2x3-x11", m(11), X2X3_ENV, _x(11)),
        Derivation("thm-x2x3-3x17", _three_x17(), X2X3_ENV, IntPoly.monomial(3, 17)),
        Derivation("thm-x2x3-x13", m(13), X2X3_ENV, _x(13)),
        Derivation("thm-x2x3-step-6-2-3x14", step_triple, X2X3_ENV, IntPoly.monomial(3, 14)),
        Derivation("thm-x2x3-step-6-2-2x14", step_double, X2X3_ENV, IntPoly.monomial(2, 14)),
        Derivation("thm-x2x3-step-6-2", m(14), X2X3_ENV, _x(14)),
        Derivation("thm-xx2x3-x5", _xx2x3_x5(), XX2X3_ENV, _x(5)),
    ]

    derivations.extend(
        Derivation(f"lem-x3-x{3 ** a}", x3_power_term(a), X3_ENV, _x(3 ** a)) for a in (1, 2, 3, 4)
    )
    derivations.extend(
        _x3_family(3, 2, {"cross": "lem-x3-3x15-3x21", "p2y": "lem-x3-6x15", "py2": "lem-x3-6x21"})
    )
    derivations.extend(
        _x3_family(3, 3, {"cross": "lem-x3-3x33-3x57", "p2y": "lem-x3-6x33", "py2": "lem-x3-6x57"})
    )
    derivations.extend(
        _x3_family(9, 3, {"cross": "lem-x3-3x45-3x63", "p2y": "lem-x3-6x45", "py2": "lem-x3-6x63"})
    )
    derivations.extend(_x3_family(9, 1, {"p2y": "lem-x3-p9-6x21"}))
    return derivations


def _xx2x3_x5() -> Term:
    """3x^5 - 2x^5 over {x, x^2, x^3}."""
    x, x2, x3 = Gen(0), Gen(1), Gen(2)
    triple = _diff(
        Compose(x3, Add(x, x2)),
        x3,
        Compose(x3, x2),
        times(3, Compose(x2, x2)),
    )
    double = _diff(Compose(x2, Add(x2, x3)), Compose(x2, x2), Compose(x2, x3))
    return Sub(triple, double)


def derivation_by_name(name: str) -> Derivation:
    """Look up a built-in derivation; KeyError lists the known names."""
    table = {d.name: d for d in builtin_derivations()}
    if name not in table:
        raise KeyError(f"Unknown derivation {name!r}; known: {', '.join(table)}")
    return table[name]
