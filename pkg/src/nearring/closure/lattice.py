"""
Integer coefficient lattices in Hermite normal form.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Generic, Iterable, List, Optional, Sequence, Tuple, TypeVar

from nearring.algebra.polycore import IntPoly
from nearring.algebra.predicates import GeneratorBasis, predicate_conditions


logger = logging.getLogger(__name__)

Tag = TypeVar("Tag")
Row = Tuple[int, ...]

_NORMALIZE_EVERY = 64


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class TagAlgebra(Generic[Tag]):
    """Integer linear combinations of row tags, tracked alongside row operations."""

    def zero(self) -> Tag:
        raise NotImplementedError

    def combine(self, c1: int, t1: Tag, c2: int, t2: Tag) -> Tag:
        """The tag of c1*row1 + c2*row2."""
        raise NotImplementedError


class HermiteEchelon(Generic[Tag]):
    """
    Mutable row echelon basis of a subgroup of Z^n, grown one vector at a time.

    Each row is keyed by its pivot column. Optional tags follow every row
    operation so a member vector can be expressed through the inserted ones.
    """

    def __init__(self, dimension: int, algebra: Optional[TagAlgebra[Tag]] = None):
        self.dimension = dimension
        self.algebra = algebra
        self._rows: Dict[int, List[int]] = {}
        self._tags: Dict[int, Any] = {}
        self._inserts = 0

    def __len__(self) -> int:
        return len(self._rows)

    def _combine(self, c1: int, t1: Any, c2: int, t2: Any) -> Any:
        if self.algebra is None:
            return None
        return self.algebra.combine(c1, t1, c2, t2)

    def insert(self, vector: Sequence[int], tag: Optional[Tag] = None) -> bool:
        """
        Add vector to the generating set.

        Returns:
            True if the spanned subgroup grew
        """
        if len(vector) != self.dimension:
            raise ValueError(f"Expected a vector of length {self.dimension}, got {len(vector)}")

        vec = list(vector)
        grew = False
        for j in range(self.dimension):
            b = vec[j]
            if not b:
                continue
            row = self._rows.get(j)
            if row is None:
                if b < 0:
                    vec = [-v for v in vec]
                    tag = self._combine(-1, tag, 0, tag)
                self._rows[j] = vec
                if self.algebra is not None:
                    self._tags[j] = tag
                grew = True
                break

            a = row[j]
            row_tag = self._tags.get(j)
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
                tag = self._combine(1, tag, -q, row_tag)
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                self._rows[j] = [x * r + y * v for r, v in zip(row, vec)]
                vec = [ag * v - bg * r for r, v in zip(row, vec)]
                if self.algebra is not None:
                    self._tags[j] = self._combine(x, row_tag, y, tag)
                    tag = self._combine(-bg, row_tag, ag, tag)
                grew = True

        self._inserts += 1
        if self._inserts % _NORMALIZE_EVERY == 0:
            self.normalize()
        return grew

    def normalize(self) -> None:
        """Reduce entries above every pivot into [0, pivot)."""
        pivots = sorted(self._rows)
        for index, j in enumerate(pivots):
            row = self._rows[j]
            pivot = row[j]
            for above in pivots[:index]:
                upper = self._rows[above]
                q = upper[j] // pivot
                if q:
                    self._rows[above] = [u - q * r for u, r in zip(upper, row)]
                    if self.algebra is not None:
                        self._tags[above] = self._combine(1, self._tags[above], -q, self._tags[j])

    def canonical(self) -> Tuple[Row, ...]:
        """Hermite normal form rows, ordered by pivot column."""
        self.normalize()
        return tuple(tuple(self._rows[j]) for j in sorted(self._rows))

    def tagged_rows(self) -> List[Tuple[Row, Optional[Tag]]]:
        self.normalize()
        return [(tuple(self._rows[j]), self._tags.get(j)) for j in sorted(self._rows)]

    def contains(self, vector: Sequence[int]) -> bool:
        return self._eliminate(vector) is not None

    def express(self, vector: Sequence[int]) -> Optional[Tag]:
        """Tag combination equal to vector, or None if vector is not a member."""
        steps = self._eliminate(vector)
        if steps is None or self.algebra is None:
            return None
        acc = self.algebra.zero()
        for j, q in steps:
            acc = self.algebra.combine(1, acc, q, self._tags[j])
        return acc

    def _eliminate(self, vector: Sequence[int]) -> Optional[List[Tuple[int, int]]]:
        """Back-substitution; the (pivot column, multiplier) steps, or None."""
        vec = list(vector)
        steps: List[Tuple[int, int]] = []
        for j in range(self.dimension):
            b = vec[j]
            if not b:
                continue
            row = self._rows.get(j)
            if row is None or b % row[j]:
                return None
            q = b // row[j]
            vec = [v - q * r for v, r in zip(vec, row)]
            steps.append((j, q))
        return steps


def hnf(rows: Iterable[Sequence[int]]) -> List[List[int]]:
    """
    Hermite normal form of the row span, leftmost pivots first.

    Zero and dependent rows disappear; pivots are positive and entries
    above each pivot lie in [0, pivot).

    Args:
        rows: Integer row vectors of equal length

    Returns:
        The canonical basis rows
    """
    matrix = [list(r) for r in rows]
    if not matrix:
        return []
    echelon: HermiteEchelon[None] = HermiteEchelon(len(matrix[0]))
    for row in matrix:
        echelon.insert(row)
    return [list(r) for r in echelon.canonical()]


def _to_internal(p: IntPoly, degree_cap: int) -> Row:
    # columns run from x^degree_cap down to x^0
    return tuple(reversed(p.to_vector(degree_cap + 1)))


def _from_internal(row: Sequence[int]) -> IntPoly:
    return IntPoly(tuple(reversed(row)))


@dataclass(frozen=True)
class CoeffLattice:
    """
    Subgroup of the polynomials of degree <= degree_cap, held in Hermite normal form.

    Columns are ordered by descending degree, so the rows whose leading
    degree is at most k form a basis of the sublattice of degree <= k.
    """
    degree_cap: int
    basis: Tuple[Row, ...] = ()

    @classmethod
    def empty(cls, degree_cap: int) -> "CoeffLattice":
        return cls(degree_cap, ())

    @classmethod
    def from_polys(cls, polys: Iterable[IntPoly], degree_cap: int) -> "CoeffLattice":
        echelon: HermiteEchelon[None] = HermiteEchelon(degree_cap + 1)
        for p in polys:
            if p.degree > degree_cap:
                raise ValueError(f"Degree {p.degree} exceeds the cap {degree_cap}")
            echelon.insert(_to_internal(p, degree_cap))
        return cls(degree_cap, echelon.canonical())

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], degree_cap: int) -> "CoeffLattice":
        """Build from coefficient vectors c_0..c_D."""
        return cls.from_polys((IntPoly(tuple(v)) for v in vectors), degree_cap)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_empty(self) -> bool:
        return not self.basis

    def rows(self) -> List[Row]:
        """Basis rows as coefficient vectors c_0..c_D."""
        return [tuple(reversed(row)) for row in self.basis]

    def polys(self) -> List[IntPoly]:
        return [_from_internal(row) for row in self.basis]

    def _echelon(self) -> HermiteEchelon[None]:
        echelon: HermiteEchelon[None] = HermiteEchelon(self.degree_cap + 1)
        for row in self.basis:
            echelon.insert(row)
        return echelon

    def contains(self, p: IntPoly) -> bool:
        if p.degree > self.degree_cap:
            raise ValueError(f"Degree {p.degree} exceeds the lattice cap {self.degree_cap}")
        return self._echelon().contains(_to_internal(p, self.degree_cap))

    def contains_vector(self, vector: Sequence[int]) -> bool:
        """Membership of a coefficient vector c_0..c_D."""
        return self.contains(IntPoly(tuple(vector)))

    def extended(self, polys: Iterable[IntPoly]) -> "CoeffLattice":
        """Lattice spanned by this one and polys."""
        return CoeffLattice.from_polys(list(self.polys()) + list(polys), self.degree_cap)

    def truncate(self, degree: int) -> "CoeffLattice":
        """Sublattice of elements with degree <= degree."""
        if degree >= self.degree_cap:
            return self
        drop = self.degree_cap - degree
        kept = tuple(row[drop:] for row in self.basis if not any(row[:drop]))
        return CoeffLattice(degree, kept)

    def is_sublattice_of(self, other: "CoeffLattice") -> bool:
        return not self.missing_from(other)

    def missing_from(self, other: "CoeffLattice") -> List[IntPoly]:
        """Basis elements of this lattice that other does not contain."""
        cap = max(self.degree_cap, other.degree_cap)
        mine = self.recapped(cap)
        echelon = other.recapped(cap)._echelon()
        return [
            p for p, row in zip(mine.polys(), mine.basis) if not echelon.contains(row)
        ]

    def recapped(self, degree_cap: int) -> "CoeffLattice":
        """Same lattice viewed inside a larger ambient degree."""
        if degree_cap == self.degree_cap:
            return self
        if degree_cap < self.degree_cap:
            return self.truncate(degree_cap)
        pad = (0,) * (degree_cap - self.degree_cap)
        return CoeffLattice(degree_cap, tuple(pad + row for row in self.basis))

    def dump(self) -> List[str]:
        """Header line then one row per line as c_0..c_D."""
        lines = [f"HNF D={self.degree_cap} rows={self.rank}"]
        lines.extend(" ".join(str(c) for c in row) for row in self.rows())
        return lines


def lattice_contains(lattice: CoeffLattice, p: IntPoly) -> bool:
    """Whether p is an integer combination of the lattice basis."""
    return lattice.contains(p)


def _parity_kernel(basis: List[IntPoly], indices: Sequence[int]) -> List[IntPoly]:
    """Generators of the sublattice where the coefficient sum over indices is even."""
    odd = [p for p in basis if sum(p.coeff(i) for i in indices) % 2]
    if not odd:
        return basis
    pivot = odd[0]
    even = [p for p in basis if p not in odd]
    return even + [p - pivot for p in odd[1:]] + [pivot * 2]


def predicate_lattice(basis: GeneratorBasis, degree_cap: int) -> CoeffLattice:
    """
    Lattice of coefficient vectors satisfying the characterization of basis.

    Args:
        basis: Generating subset of {1, x, x^2, x^3}
        degree_cap: Largest degree

    Returns:
        Diagonal divisibility lattice cut down by every parity constraint
    """
    conditions = predicate_conditions(basis, degree_cap)
    generators = [
        IntPoly.monomial(conditions.modulus_at(i), i)
        for i in range(degree_cap + 1)
        if conditions.modulus_at(i)
    ]
    for constraint in conditions.parity:
        generators = CoeffLattice.from_polys(generators, degree_cap).polys()
        generators = _parity_kernel(generators, constraint.indices)
    return CoeffLattice.from_polys(generators, degree_cap)
