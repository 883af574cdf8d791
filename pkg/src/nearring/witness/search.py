"""
Bounded witness search by tagged saturation.

Every lattice row carries an integer linear form over "base" terms: the
generator leaves and the compositions g o q found so far. When a target
enters the lattice, its form is turned back into a term and verified.
"""
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from nearring.algebra.polycore import IntPoly, compose
from nearring.closure.lattice import HermiteEchelon, TagAlgebra
from nearring.closure.saturation import simplex_combinations
from nearring.config.models import SearchConfig
from nearring.utils.executor import ParallelMapper
from nearring.utils.logging import InvariantError
from nearring.witness.terms import Compose, Environment, Gen, Term, Zero, eval_term, sum_terms, times


logger = logging.getLogger(__name__)

LinearForm = Dict[int, int]


class LinearFormAlgebra(TagAlgebra[LinearForm]):
    """Sparse integer combinations of base-term indices."""

    def zero(self) -> LinearForm:
        return {}

    def combine(self, c1: int, t1: LinearForm, c2: int, t2: LinearForm) -> LinearForm:
        result: LinearForm = {}
        for coefficient, form in ((c1, t1), (c2, t2)):
            if not coefficient or not form:
                continue
            for index, value in form.items():
                total = result.get(index, 0) + coefficient * value
                if total:
                    result[index] = total
                else:
                    result.pop(index, None)
        return result


class WitnessSearch:
    """
    Deepening search state for one generator list, reusable across targets.

    Depth d allows d rounds of left composition by a generator. Elements are
    kept up to the working degree degree_cap * work_factor, and right
    arguments are drawn from rows of degree <= degree_cap.
    """

    def __init__(self, generators: Sequence[IntPoly], config: SearchConfig, degree_cap: int):
        """
        Initialize the search.

        Args:
            generators: Generating polynomials, bound to g0, g1, ... in order
            config: Search bounds and execution settings
            degree_cap: Largest target degree this state will answer for
        """
        self.generators = list(generators)
        self.environment = Environment(tuple(self.generators))
        self.config = config
        self.degree_cap = degree_cap
        self.work = degree_cap * config.work_factor
        self.mapper = ParallelMapper(config)

        self._algebra = LinearFormAlgebra()
        self._echelon: HermiteEchelon[LinearForm] = HermiteEchelon(self.work + 1, self._algebra)
        # base i is a generator leaf index or a (generator index, right-argument form) pair
        self._bases: List[Union[int, Tuple[int, LinearForm]]] = []
        self._base_terms: Dict[int, Term] = {}
        self._tried: Set[Tuple[int, Tuple[int, ...]]] = set()
        self.depth = 0
        self.exhausted = False

        for index, g in enumerate(self.generators):
            if g.degree <= self.work:
                self._add_base(index, g)

    @classmethod
    def for_target(
        cls, target: IntPoly, generators: Sequence[IntPoly], config: SearchConfig
    ) -> "WitnessSearch":
        """A search state whose degree cap is the degree of target."""
        degree_cap = max(int(target.degree), 0) if not target.is_zero() else 0
        return cls(generators, config, degree_cap)

    def _vector(self, p: IntPoly) -> Tuple[int, ...]:
        return tuple(reversed(p.to_vector(self.work + 1)))

    def _add_base(self, base: Union[int, Tuple[int, LinearForm]], value: IntPoly) -> bool:
        self._bases.append(base)
        return self._echelon.insert(self._vector(value), {len(self._bases) - 1: 1})

    def to_term(self, form: LinearForm) -> Term:
        """The term sum(c * base) for a linear form."""
        return sum_terms([times(c, self._base_term(i)) for i, c in sorted(form.items()) if c])

    def _base_term(self, i: int) -> Term:
        if i not in self._base_terms:
            base = self._bases[i]
            if isinstance(base, int):
                self._base_terms[i] = Gen(base)
            else:
                self._base_terms[i] = Compose(Gen(base[0]), self.to_term(base[1]))
        return self._base_terms[i]

    def find(self, target: IntPoly) -> Optional[Term]:
        """
        Search for a term over the generators that evaluates to target.

        Returns:
            A verified term, or None when the bounds are exhausted. None is
            not a proof of non-membership.
        """
        if target.is_zero():
            return Zero()
        for index, g in enumerate(self.generators):
            if g == target:
                return Gen(index)
        if target.degree > self.degree_cap:
            logger.debug(f"Target {target} exceeds the search degree cap {self.degree_cap}")
            return None

        while True:
            term = self._express(target)
            if term is not None:
                return term
            if self.depth >= self.config.max_depth or self.exhausted:
                return None
            self._deepen()

    def _express(self, target: IntPoly) -> Optional[Term]:
        form = self._echelon.express(self._vector(target))
        if form is None:
            return None
        term = self.to_term(form)
        value = eval_term(term, self.environment)
        if value != target:
            raise InvariantError(f"Search produced a term for {value} while looking for {target}")
        logger.debug(f"Found witness for {target} at depth {self.depth}")
        return term

    def _deepen(self) -> None:
        """One round of left compositions by every non-constant generator."""
        self.depth += 1
        rows = self._echelon.tagged_rows()
        members = [(_from_row(row), tag) for row, tag in rows]
        tasks: List[Tuple[int, IntPoly, IntPoly, LinearForm]] = []

        for index, g in enumerate(self.generators):
            if g.is_constant() or g.degree > self.work:
                continue
            degree = int(g.degree)
            limit = min(self.degree_cap, self.work // degree)
            usable = [(p, tag) for p, tag in members if p.degree <= limit]
            for combination in simplex_combinations(
                len(usable), degree, self.config.coeff_cap, self.config.combo_width
            ):
                q = IntPoly.zero()
                form: LinearForm = {}
                for position, weight in combination:
                    p, tag = usable[position]
                    q = q + p * weight
                    form = self._algebra.combine(1, form, weight, tag or {})
                key = (index, q.coeffs)
                if key in self._tried:
                    continue
                self._tried.add(key)
                tasks.append((index, g, q, form))

        values = self.mapper.map(_compose_task, tasks)
        grew = False
        for (index, _, _, form), value in zip(tasks, values):
            if value.degree > self.work:
                continue
            grew |= self._add_base((index, form), value)

        logger.debug(
            f"Search depth {self.depth}: {len(tasks)} compositions, rank {len(self._echelon)}"
        )
        if not grew:
            self.exhausted = True


def _from_row(row: Sequence[int]) -> IntPoly:
    return IntPoly(tuple(reversed(row)))


def _compose_task(task: Tuple[int, IntPoly, IntPoly, LinearForm]) -> IntPoly:
    return compose(task[1], task[2])


def search_witness(
    target: IntPoly,
    generators: Sequence[IntPoly],
    config: Optional[SearchConfig] = None,
) -> Optional[Term]:
    """
    One-shot witness search for target over generators.

    Args:
        target: Polynomial to derive
        generators: Generating polynomials, bound to g0, g1, ... in order
        config: Search bounds; defaults when omitted

    Returns:
        A term that evaluates to target, or None on exhaustion
    """
    return WitnessSearch.for_target(target, generators, config or SearchConfig()).find(target)
