"""
Bounded saturation of a generating set under +, - and left composition by generators.

A subset of Z[x] that contains F, is closed under + and -, and satisfies
g o m in M for every generator g and every m in M already equals the
nearring generated by F. The engine therefore only ever composes
generators on the left of elements it has found.
"""
import logging
from itertools import combinations, product
from typing import Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from nearring.algebra.polycore import IntPoly, compose
from nearring.algebra.predicates import GeneratorBasis
from nearring.closure.lattice import CoeffLattice, HermiteEchelon, predicate_lattice
from nearring.config.models import ClosureConfig
from nearring.utils.executor import ParallelMapper
from nearring.utils.logging import InfeasibleConfigError


logger = logging.getLogger(__name__)


class SaturationReport(NamedTuple):
    """Outcome of a saturation run."""
    lattice: CoeffLattice
    working_lattice: CoeffLattice
    rounds: int
    converged: bool
    candidates: int


class ComparisonReport(NamedTuple):
    """Closure lattice against the characterization lattice."""
    basis: GeneratorBasis
    degree_cap: int
    closure: CoeffLattice
    predicate: CoeffLattice
    contained: bool
    equal: bool
    escaped: List[IntPoly]
    missing: List[IntPoly]
    escalations: int

    @property
    def success(self) -> bool:
        return self.contained and self.equal

    def lines(self) -> List[str]:
        """Human-readable detail lines."""
        lines = [
            f"basis {{{self.basis.label}}} D={self.degree_cap}: "
            f"closure rank {self.closure.rank}, predicate rank {self.predicate.rank}"
        ]
        lines.extend(f"ESCAPED {p}" for p in self.escaped)
        lines.extend(f"MISSING {p}" for p in self.missing)
        return lines

    @property
    def note(self) -> str:
        if not self.contained:
            return "containment violated"
        return "equal" if self.equal else f"contained, {len(self.missing)} missing"


class ParityReport(NamedTuple):
    """Parity of one coefficient across a saturated lattice."""
    exponent: int
    generators: List[IntPoly]
    lattice: CoeffLattice
    violations: List[IntPoly]

    @property
    def success(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        gens = ", ".join(str(g) for g in self.generators)
        lines = [
            f"generators {{{gens}}} exponent {self.exponent}: "
            f"{self.lattice.rank} basis rows checked"
        ]
        lines.extend(
            f"ODD coeff({p}, {self.exponent}) = {p.coeff(self.exponent)}" for p in self.violations
        )
        return lines


class ClosureEngine:
    """Saturate generators inside the polynomials of degree <= the working degree."""

    def __init__(self, config: ClosureConfig):
        """
        Initialize the engine.

        Args:
            config: Closure configuration with caps and execution settings
        """
        self.config = config
        self.mapper = ParallelMapper(config)

    def run(self, generators: Sequence[IntPoly]) -> SaturationReport:
        """
        Saturate generators until the lattice stops changing or rounds run out.

        Args:
            generators: Generating polynomials

        Returns:
            SaturationReport with the lattice truncated to degree_cap
        """
        cap = self.config.degree_cap
        work = self.config.work_degree

        if not generators:
            empty = CoeffLattice.empty(cap)
            return SaturationReport(empty, CoeffLattice.empty(work), 0, True, 0)

        fitting = [g for g in generators if g.degree <= work]
        if not fitting:
            raise InfeasibleConfigError(
                f"No generator fits the working degree {work} (degree cap {cap})"
            )
        skipped = len(generators) - len(fitting)
        if skipped:
            logger.warning(f"Skipping {skipped} generator(s) above the working degree {work}")

        echelon: HermiteEchelon[None] = HermiteEchelon(work + 1)
        for g in fitting:
            echelon.insert(_vector(g, work))

        composers = [g for g in fitting if not g.is_constant()]
        tried: Set[Tuple[int, Tuple[int, ...]]] = set()
        snapshot = echelon.canonical()
        candidates = 0
        converged = False
        rounds = 0

        for rounds in range(1, self.config.max_rounds + 1):
            members = CoeffLattice(work, snapshot).polys()
            tasks: List[Tuple[IntPoly, IntPoly]] = []
            for index, g in enumerate(composers):
                limit = min(cap, work // int(g.degree))
                rows = [p for p in members if p.degree <= limit]
                for q in self._right_arguments(rows, int(g.degree)):
                    key = (index, q.coeffs)
                    if key not in tried:
                        tried.add(key)
                        tasks.append((g, q))

            results = self.mapper.map(_compose_pair, tasks)
            for result in results:
                echelon.insert(_vector(result, work))
            candidates += len(tasks)

            current = echelon.canonical()
            logger.debug(
                f"Round {rounds}: {len(tasks)} compositions, rank {len(current)}"
            )
            if current == snapshot:
                converged = True
                break
            snapshot = current

        if not converged:
            logger.warning(
                f"Saturation stopped after {rounds} rounds without reaching a fixpoint"
            )

        working = CoeffLattice(work, snapshot)
        return SaturationReport(working.truncate(cap), working, rounds, converged, candidates)

    def _right_arguments(self, rows: List[IntPoly], degree: int) -> Iterator[IntPoly]:
        for combination in simplex_combinations(
            len(rows), degree, self.config.coeff_cap, self.config.combo_width
        ):
            q = IntPoly.zero()
            for index, weight in combination:
                q = q + rows[index] * weight
            yield q


def simplex_combinations(
    count: int,
    degree: int,
    coeff_cap: int,
    combo_width: int,
) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """
    Sparse weight vectors (index, b) over count rows: at most combo_width
    nonzero b, each 1 <= b <= coeff_cap, and sum(b) <= degree.

    The empty combination comes first. Once coeff_cap and combo_width reach
    degree, the values g o (sum l_r row_r) over all integer l, for g of that
    degree, lie in the span of the values on this simplex.
    """
    yield ()
    width = min(combo_width, degree, count)
    top = min(coeff_cap, degree)
    for size in range(1, width + 1):
        for chosen in combinations(range(count), size):
            for weights in product(range(1, top + 1), repeat=size):
                if sum(weights) <= degree:
                    yield tuple(zip(chosen, weights))


def _vector(p: IntPoly, work: int) -> Tuple[int, ...]:
    return tuple(reversed(p.to_vector(work + 1)))


def _compose_pair(pair: Tuple[IntPoly, IntPoly]) -> IntPoly:
    return compose(pair[0], pair[1])


def saturate(generators: Sequence[IntPoly], config: ClosureConfig) -> CoeffLattice:
    """Lattice of discovered elements of the generated nearring with degree <= degree_cap."""
    return ClosureEngine(config).run(generators).lattice


def compare_closure_vs_predicate(
    basis: GeneratorBasis,
    config: ClosureConfig,
    escalations: int = 0,
) -> ComparisonReport:
    """
    Differential test of saturation against the characterization of basis.

    Containment must always hold. When equality is not reached, the caps
    are escalated up to escalations times before the gap is reported.

    Args:
        basis: Generating subset of {1, x, x^2, x^3}
        config: Closure configuration
        escalations: Extra attempts with escalated caps

    Returns:
        ComparisonReport
    """
    predicate = predicate_lattice(basis, config.degree_cap)
    attempt = 0

    while True:
        closure = saturate(basis.generators(), config)
        escaped = closure.missing_from(predicate)
        missing = predicate.missing_from(closure)
        if escaped:
            logger.error(f"Closure of {{{basis.label}}} escapes its characterization: {escaped}")
        if not missing or escaped or attempt >= escalations:
            break
        attempt += 1
        config = config.escalated()
        logger.info(
            f"Escalating caps for {{{basis.label}}}: coeff_cap={config.coeff_cap}, "
            f"combo_width={config.combo_width}"
        )

    return ComparisonReport(
        basis=basis,
        degree_cap=config.degree_cap,
        closure=closure,
        predicate=predicate,
        contained=not escaped,
        equal=not escaped and not missing,
        escaped=escaped,
        missing=missing,
        escalations=attempt,
    )


def parity_coefficient_check(
    generators: Sequence[IntPoly],
    target_exponent: int,
    config: ClosureConfig,
) -> ParityReport:
    """
    Check that every saturated basis vector has an even coefficient at target_exponent.

    Args:
        generators: Generating polynomials
        target_exponent: Exponent whose coefficient must stay even
        config: Closure configuration

    Returns:
        ParityReport listing the offending basis vectors
    """
    if target_exponent > config.degree_cap:
        raise ValueError(
            f"Exponent {target_exponent} exceeds the degree cap {config.degree_cap}"
        )
    report = ClosureEngine(config).run(generators)
    # the working lattice holds every discovered element, not only degree <= cap
    lattice = report.working_lattice
    violations = [p for p in lattice.polys() if p.coeff(target_exponent) % 2]
    return ParityReport(target_exponent, list(generators), lattice, violations)


def theorem_41_generators(j: int, degree_cap: int) -> List[IntPoly]:
    """The monomials x^(2^(i+1) - 2) for i >= 1, i != j, of degree <= degree_cap."""
    generators = []
    i = 1
    while 2 ** (i + 1) - 2 <= degree_cap:
        if i != j:
            generators.append(IntPoly.monomial(1, 2 ** (i + 1) - 2))
        i += 1
    return generators


def theorem_41_exponent(j: int) -> int:
    return 2 ** (j + 1) - 2


class ChainReport(NamedTuple):
    """One step of the descending chain of nearrings generated by x^(2^(2^i))."""
    index: int
    outer: CoeffLattice
    inner: CoeffLattice
    square_identity: bool
    contained: bool
    generator_absent: bool

    @property
    def success(self) -> bool:
        return self.square_identity and self.contained and self.generator_absent


def descending_chain_check(
    i: int,
    config: ClosureConfig,
    degree_cap: Optional[int] = None,
) -> ChainReport:
    """
    Check that the nearring generated by x^(2^(2^(i+1))) sits inside the one
    generated by x^(2^(2^i)) and misses its generator.

    Args:
        i: Chain index
        config: Closure configuration
        degree_cap: Overrides config.degree_cap

    Returns:
        ChainReport
    """
    if degree_cap is not None:
        config = config.model_copy(update={"degree_cap": degree_cap})
    small = IntPoly.monomial(1, 2 ** (2 ** i))
    large = IntPoly.monomial(1, 2 ** (2 ** (i + 1)))

    outer = saturate([small], config)
    inner = saturate([large], config)
    return ChainReport(
        index=i,
        outer=outer,
        inner=inner,
        square_identity=compose(small, small) == large,
        contained=inner.is_sublattice_of(outer),
        generator_absent=small.degree > config.degree_cap or not inner.contains(small),
    )
