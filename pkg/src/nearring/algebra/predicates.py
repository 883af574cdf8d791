"""
Membership characterizations for the nearrings generated by subsets of {1, x, x^2, x^3}.
"""
import logging
import random
from typing import Dict, List, NamedTuple, Optional, Tuple

from nearring.algebra.numtheory import ResidueClassSet, digit_sum, divides, standard_sets
from nearring.algebra.polycore import IntPoly
from nearring.utils.logging import ConfigurationError, InvariantError


logger = logging.getLogger(__name__)

_TOKENS = ("1", "x", "x2", "x3")
_EMPTY_LABEL = "0"

# rows whose characterization is cited rather than derived
_EXTERNAL_ROWS = {
    (False, True, True, False),
    (True, True, True, False),
    (True, True, False, True),
    (True, True, True, True),
}


class GeneratorBasis(NamedTuple):
    """Inclusion flags for the generators 1, x, x^2, x^3."""
    a0: bool
    a1: bool
    a2: bool
    a3: bool

    @classmethod
    def parse(cls, text: str) -> "GeneratorBasis":
        """
        Parse a comma-separated basis such as "x2,x3" or "1,x".

        "0" or an empty string denotes the empty generating set.
        """
        tokens = [token.strip().lower().replace("^", "") for token in text.split(",")]
        tokens = [token for token in tokens if token and token != _EMPTY_LABEL]
        unknown = [token for token in tokens if token not in _TOKENS]
        if unknown:
            raise ConfigurationError(
                f"Unknown basis element(s) {unknown}; expected a subset of {list(_TOKENS)}"
            )
        return cls(*(token in tokens for token in _TOKENS))

    @classmethod
    def all_bases(cls) -> List["GeneratorBasis"]:
        """All 16 bases, ordered by the flag tuple read as a binary number a0 a1 a2 a3."""
        return [
            cls(bool(n & 8), bool(n & 4), bool(n & 2), bool(n & 1)) for n in range(16)
        ]

    @property
    def label(self) -> str:
        tokens = [token for token, flag in zip(_TOKENS, self) if flag]
        return ",".join(tokens) or _EMPTY_LABEL

    @property
    def bits(self) -> str:
        return "".join("1" if flag else "0" for flag in self)

    @property
    def cites_external(self) -> bool:
        return tuple(self) in _EXTERNAL_ROWS

    def generators(self) -> List[IntPoly]:
        """The included monomials, lowest degree first."""
        return [IntPoly.monomial(1, e) for e, flag in enumerate(self) if flag]

    def issubset(self, other: "GeneratorBasis") -> bool:
        return all(not mine or theirs for mine, theirs in zip(self, other))


class ParityConstraint(NamedTuple):
    """The coefficients over indices must have an even sum."""
    name: str
    indices: Tuple[int, ...]


class PredicateConditions(NamedTuple):
    """Machine-readable export of one characterization up to a degree cap."""
    zeros: Tuple[int, ...]
    divisibility: Tuple[Tuple[int, int], ...]
    parity: Tuple[ParityConstraint, ...]

    def modulus_at(self, i: int) -> int:
        """Required divisor of c_i; 0 when c_i is forced to vanish."""
        if i in self.zeros:
            return 0
        return dict(self.divisibility).get(i, 1)


class Violation(NamedTuple):
    """One violated condition."""
    condition: str
    index: str
    need: str
    got: int
    detail: str = ""

    def line(self) -> str:
        return f"COND {self.condition} idx={self.index} need={self.need} got={self.got}"


class MembershipVerdict(NamedTuple):
    """Outcome of a membership test; member iff no violations."""
    member: bool
    violations: List[Violation]

    @classmethod
    def from_violations(cls, violations: List[Violation]) -> "MembershipVerdict":
        return cls(member=not violations, violations=violations)

    def report_lines(self) -> List[str]:
        return [v.line() for v in self.violations]


def _two_power(i: int) -> int:
    return 2 ** (digit_sum(i, 2) - 1)


def _three_power_odd(i: int) -> int:
    s = digit_sum(i, 3)
    if s % 2 == 0:
        raise InvariantError(f"digit sum s_3({i}) = {s} is even where an odd value is required")
    return 3 ** ((s - 1) // 2)


def _three_power_floor(i: int) -> int:
    return 3 ** (digit_sum(i, 3) // 2)


def _parity(name: str, residues: ResidueClassSet, degree_cap: int) -> Tuple[ParityConstraint, ...]:
    indices = tuple(residues.members_upto(degree_cap))
    return (ParityConstraint(name, indices),) if indices else ()


def predicate_conditions(basis: GeneratorBasis, degree_cap: int) -> PredicateConditions:
    """
    Export the characterization of basis up to degree_cap.

    Args:
        basis: Generating subset of {1, x, x^2, x^3}
        degree_cap: Largest coefficient index considered

    Returns:
        Forced-zero indices, (index, modulus) divisibility pairs and
        parity-sum constraints
    """
    cap = range(degree_cap + 1)
    key = tuple(basis)
    zeros: List[int] = []
    divisibility: List[Tuple[int, int]] = []
    parity: Tuple[ParityConstraint, ...] = ()
    sets = standard_sets()

    if key == (False, False, False, False):
        zeros = list(cap)
    elif key == (True, False, False, False):
        zeros = [i for i in cap if i >= 1]
    elif key == (False, True, False, False):
        zeros = [i for i in cap if i != 1]
    elif key == (True, True, False, False):
        zeros = [i for i in cap if i >= 2]
    elif key in {(False, False, True, False), (True, False, True, False)}:
        zeros = [i for i in cap if i % 2 == 1 or (i == 0 and not basis.a0)]
        divisibility = [(i, _two_power(i // 2)) for i in cap if i >= 2 and i % 2 == 0]
    elif key in {(False, True, True, False), (True, True, True, False)}:
        zeros = [0] if not basis.a0 else []
        divisibility = [(i, _two_power(i)) for i in cap if i >= 1]
    elif key == (False, False, False, True):
        zeros = [i for i in cap if i % 6 != 3]
        divisibility = [(i, _three_power_odd(i)) for i in cap if i % 6 == 3]
        parity = _parity("A", sets.a, degree_cap) + _parity("B", sets.b, degree_cap)
    elif key == (False, True, False, True):
        zeros = [i for i in cap if i % 2 == 0]
        divisibility = [(i, _three_power_odd(i)) for i in cap if i % 2 == 1]
        parity = _parity("C", sets.c, degree_cap) + _parity("D", sets.d, degree_cap)
    elif key == (True, False, False, True):
        zeros = [i for i in cap if i % 3 != 0]
        divisibility = [(i, _three_power_floor(i)) for i in cap if i % 3 == 0]
    elif key == (True, True, False, True):
        divisibility = [(i, _three_power_floor(i)) for i in cap]
    elif key in {(False, False, True, True), (True, False, True, True)}:
        zeros = [i for i in (0, 1) if i <= degree_cap and (i == 1 or not basis.a0)]
        divisibility = [(5, 2)] if degree_cap >= 5 else []
    elif key == (False, True, True, True):
        zeros = [0]
    # (1,1,1,1): the whole of Z[x]

    return PredicateConditions(tuple(zeros), tuple(divisibility), parity)


def member(basis: GeneratorBasis, p: IntPoly) -> MembershipVerdict:
    """
    Decide whether p lies in the nearring generated by basis.

    Every violated condition is reported: forced zeros first, then
    divisibility, then parity sums.

    Args:
        basis: Generating subset of {1, x, x^2, x^3}
        p: Polynomial to test

    Returns:
        MembershipVerdict with all violations
    """
    degree_cap = max(len(p.coeffs) - 1, 0)
    conditions = predicate_conditions(basis, degree_cap)
    cited = " (cited characterization)" if basis.cites_external else ""
    violations: List[Violation] = []

    for i in conditions.zeros:
        c = p.coeff(i)
        if c:
            violations.append(Violation("zero", str(i), "0", c, f"c_{i} must vanish{cited}"))

    for i, modulus in conditions.divisibility:
        c = p.coeff(i)
        if modulus > 1 and i not in conditions.zeros and not divides(modulus, c):
            violations.append(
                Violation("div", str(i), f"{modulus}|c", c, f"{modulus} must divide c_{i}{cited}")
            )

    for constraint in conditions.parity:
        total = sum(p.coeff(i) for i in constraint.indices)
        if total % 2:
            violations.append(
                Violation(
                    "parity",
                    constraint.name,
                    "2|sum",
                    total,
                    f"coefficients over {constraint.name} must have an even sum{cited}",
                )
            )

    if violations:
        logger.debug(f"{p} fails {len(violations)} condition(s) for basis {basis.label}")
    return MembershipVerdict.from_violations(violations)


def pullback_pairs() -> List[Tuple[GeneratorBasis, IntPoly, GeneratorBasis]]:
    """
    (outer basis, inner polynomial a, pulled-back basis) triples such that
    p is in the outer nearring iff p o a is in the pulled-back one.
    """
    x2 = IntPoly.monomial(1, 2)
    x3 = IntPoly.monomial(1, 3)
    return [
        (GeneratorBasis.parse("x,x2"), x2, GeneratorBasis.parse("x2")),
        (GeneratorBasis.parse("1,x,x2"), x2, GeneratorBasis.parse("1,x2")),
        (GeneratorBasis.parse("x,x3"), x3, GeneratorBasis.parse("x3")),
        (GeneratorBasis.parse("1,x,x3"), x3, GeneratorBasis.parse("1,x3")),
    ]


def sample_member(
    basis: GeneratorBasis,
    degree_cap: int,
    rng: random.Random,
    spread: int = 3,
) -> IntPoly:
    """
    Draw a random element of the characterized set with degree <= degree_cap.

    Args:
        basis: Generating subset of {1, x, x^2, x^3}
        degree_cap: Largest degree
        rng: Seeded random source
        spread: Largest multiplier applied to each required modulus

    Returns:
        A polynomial satisfying member(basis, .)
    """
    conditions = predicate_conditions(basis, degree_cap)
    coeffs: Dict[int, int] = {}
    for i in range(degree_cap + 1):
        modulus = conditions.modulus_at(i)
        if modulus:
            coeffs[i] = modulus * rng.randint(-spread, spread)

    for constraint in conditions.parity:
        if sum(coeffs.get(i, 0) for i in constraint.indices) % 2 == 0:
            continue
        fix = _private_odd_index(constraint, conditions)
        if fix is None:
            # doubling keeps every divisibility and makes every sum even
            coeffs = {i: 2 * c for i, c in coeffs.items()}
            break
        coeffs[fix] += conditions.modulus_at(fix)

    return IntPoly.from_terms((c, i) for i, c in coeffs.items())


def _private_odd_index(
    constraint: ParityConstraint, conditions: PredicateConditions
) -> Optional[int]:
    """An index of constraint in no other parity set whose modulus is odd."""
    others = {i for other in conditions.parity if other != constraint for i in other.indices}
    for i in constraint.indices:
        if i not in others and conditions.modulus_at(i) % 2 == 1:
            return i
    return None
