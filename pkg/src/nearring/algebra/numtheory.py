"""
Digit sums, multinomial coefficients, valuations and residue-class sets.

Also hosts the executable checkers for the two multinomial divisibility
lemmas and for the mod-24 / mod-72 residue arguments used by the
characterization of the nearring generated by x^3.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from math import comb, gcd
from typing import FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple

from nearring.utils.logging import LemmaViolation


logger = logging.getLogger(__name__)


def digit_sum(n: int, base: int) -> int:
    """
    Sum of the base-b digits of n.

    Args:
        n: Non-negative integer
        base: Base, at least 2

    Returns:
        The digit sum s_base(n)
    """
    if base < 2:
        raise ValueError(f"Base must be at least 2, got {base}")
    if n < 0:
        raise ValueError(f"Digit sum needs a non-negative integer, got {n}")
    total = 0
    while n:
        n, digit = divmod(n, base)
        total += digit
    return total


def multinomial(k: int, parts: Sequence[int]) -> int:
    """
    Exact multinomial coefficient k! / (k_1! ... k_n!).

    Computed as a product of binomials so no factorial is ever formed.
    """
    if any(part < 0 for part in parts):
        raise ValueError(f"Multinomial parts must be non-negative: {list(parts)}")
    if sum(parts) != k:
        raise ValueError(f"Parts {list(parts)} do not sum to {k}")
    result = 1
    remaining = k
    for part in parts:
        result *= comb(remaining, part)
        remaining -= part
    return result


def padic_valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n."""
    if n == 0:
        raise ValueError("Valuation of 0 is infinite")
    if p < 2:
        raise ValueError(f"Prime must be at least 2, got {p}")
    n = abs(n)
    valuation = 0
    while n % p == 0:
        n //= p
        valuation += 1
    return valuation


def divides(modulus: int, value: int) -> bool:
    """modulus | value, with every modulus dividing 0."""
    return value == 0 or (modulus != 0 and value % modulus == 0)


@dataclass(frozen=True)
class ResidueClassSet:
    """
    Naturals congruent to one of the residues modulo modulus, minus exclusions.
    """
    modulus: int
    residues: FrozenSet[int]
    exclusions: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", frozenset(self.residues))
        object.__setattr__(self, "exclusions", frozenset(self.exclusions))
        if self.modulus < 1:
            raise ValueError(f"Modulus must be positive, got {self.modulus}")
        if not self.residues:
            raise ValueError("Residue set must be nonempty")
        if any(r < 0 or r >= self.modulus for r in self.residues):
            raise ValueError(f"Residues must lie in [0, {self.modulus})")

    def contains(self, n: int) -> bool:
        return n >= 0 and n % self.modulus in self.residues and n not in self.exclusions

    __contains__ = contains

    def members_upto(self, bound: int) -> List[int]:
        """Sorted members n with n <= bound."""
        return [n for n in range(bound + 1) if self.contains(n)]

    def render(self) -> str:
        text = "[" + ",".join(str(r) for r in sorted(self.residues)) + f"]_{self.modulus}"
        if self.exclusions:
            text += " \\ {" + ",".join(str(e) for e in sorted(self.exclusions)) + "}"
        return text


class StandardSets(NamedTuple):
    """The four index sets carrying parity-sum conditions."""
    a: ResidueClassSet
    b: ResidueClassSet
    c: ResidueClassSet
    d: ResidueClassSet


def standard_sets() -> StandardSets:
    """
    Return the sets A, B, C, D.

    A and B carry the parity conditions for the nearring generated by x^3,
    C and D those for the one generated by x and x^3.
    """
    return StandardSets(
        a=ResidueClassSet(24, frozenset({15, 21})),
        b=ResidueClassSet(72, frozenset({3, 33, 45, 51, 57, 63}), frozenset({3})),
        c=ResidueClassSet(8, frozenset({5, 7})),
        d=ResidueClassSet(24, frozenset({1, 11, 15, 17, 19, 21}), frozenset({1})),
    )


def check_lemma_31(p: int, s: int, parts: Sequence[int], j: int) -> bool:
    """
    Check the prime-power multinomial criterion on one instance.

    If p^s divides k = sum(parts) and gcd(parts[j], p) = 1, then p^s
    divides the multinomial coefficient.

    Args:
        p: Prime
        s: Positive exponent
        parts: Nonempty sequence of non-negative integers
        j: Index into parts

    Returns:
        True if the hypotheses hold (and the conclusion was confirmed),
        False if the instance is vacuous

    Raises:
        LemmaViolation: If the hypotheses hold but the conclusion fails
    """
    if not parts:
        raise ValueError("parts must be nonempty")
    if not 0 <= j < len(parts):
        raise ValueError(f"Index {j} out of range for {len(parts)} parts")

    k = sum(parts)
    modulus = p ** s
    if k % modulus != 0 or gcd(parts[j], p) != 1:
        return False

    value = multinomial(k, parts)
    if value % modulus != 0:
        raise LemmaViolation(
            f"{modulus} does not divide multinomial({k}, {list(parts)}) = {value} (j={j})"
        )
    return True


def check_lemma_32(ls: Sequence[int], ks: Sequence[int], m: int) -> bool:
    """
    Check the parity multinomial criterion on one instance.

    Hypotheses: m >= 1, n = len(ks) >= 1, k = sum(ks) even, every l_i even
    and sum(l_i * k_i) = 2^(m+1) - 2. Conclusion: multinomial(k, ks) is even.

    Returns:
        True if the hypotheses hold (and the conclusion was confirmed),
        False if the instance is vacuous

    Raises:
        LemmaViolation: If the hypotheses hold but the conclusion fails
    """
    if len(ls) != len(ks):
        raise ValueError(f"ls and ks differ in length: {len(ls)} != {len(ks)}")

    k = sum(ks)
    if m < 1 or not ks or k % 2 or any(l % 2 for l in ls):
        return False
    if sum(l * ki for l, ki in zip(ls, ks)) != 2 ** (m + 1) - 2:
        return False

    value = multinomial(k, ks)
    if value % 2:
        raise LemmaViolation(
            f"multinomial({k}, {list(ks)}) = {value} is odd for ls={list(ls)}, m={m}"
        )
    return True


class SweepSummary(NamedTuple):
    """Outcome of an exhaustive sweep over a finite box."""
    checked: int
    applicable: int
    violations: List[str]

    @property
    def success(self) -> bool:
        return not self.violations


def _tuples(values: Iterable[int], max_len: int) -> Iterable[Tuple[int, ...]]:
    pool = list(values)
    for length in range(1, max_len + 1):
        yield from product(pool, repeat=length)


def sweep_lemma_31(
    primes: Sequence[int] = (2, 3),
    max_s: int = 2,
    max_part: int = 6,
    max_len: int = 3,
) -> SweepSummary:
    """Exhaustive check of the prime-power criterion over a box."""
    checked = applicable = 0
    violations: List[str] = []

    for p in primes:
        for s in range(1, max_s + 1):
            for parts in _tuples(range(max_part + 1), max_len):
                for j in range(len(parts)):
                    checked += 1
                    try:
                        applicable += check_lemma_31(p, s, parts, j)
                    except LemmaViolation as e:
                        violations.append(str(e))

    logger.debug(f"Prime-power sweep: {checked} instances, {applicable} applicable")
    return SweepSummary(checked, applicable, violations)


def sweep_lemma_32(max_m: int = 3, max_len: int = 3, max_value: int = 8) -> SweepSummary:
    """Exhaustive check of the parity criterion over a box."""
    checked = applicable = 0
    violations: List[str] = []
    targets = {2 ** (m + 1) - 2: m for m in range(1, max_m + 1)}

    for length in range(1, max_len + 1):
        for ls in product(range(max_value + 1), repeat=length):
            for ks in product(range(max_value + 1), repeat=length):
                checked += max_m
                # at most one m can match the weighted sum
                m = targets.get(sum(l * ki for l, ki in zip(ls, ks)))
                if m is None:
                    continue
                try:
                    applicable += check_lemma_32(ls, ks, m)
                except LemmaViolation as e:
                    violations.append(str(e))

    logger.debug(f"Parity sweep: {checked} instances, {applicable} applicable")
    return SweepSummary(checked, applicable, violations)


def check_residue_lemmas(limit: int = 10_000) -> List[int]:
    """
    Check the mod-24 and mod-72 equivalences for every k in [3]_6 up to limit.

    Returns:
        The k for which one of the equivalences fails (empty on success)
    """
    b_residues = {3, 33, 45, 51, 57, 63}
    b_preimage = {15, 21, 39, 45, 63, 69}
    failures = []

    for k in range(3, limit + 1, 6):
        ok = ((3 * k) % 24 == 21) == (k % 24 == 15)
        ok = ok and ((3 * k) % 24 == 15) == (k % 24 == 21)
        ok = ok and (((3 * k) % 72 in b_residues) == (k % 72 in b_preimage))
        if not ok:
            failures.append(k)

    return failures
