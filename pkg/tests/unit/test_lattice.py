"""
Unit tests for Hermite normal form lattices.
"""
from typing import Tuple

import pytest

from nearring.algebra.polycore import IntPoly, parse_poly
from nearring.algebra.predicates import GeneratorBasis
from nearring.closure.lattice import (
    CoeffLattice,
    HermiteEchelon,
    TagAlgebra,
    hnf,
    lattice_contains,
    predicate_lattice,
    xgcd,
)


class CountTags(TagAlgebra[Tuple[int, ...]]):
    """Tags as coefficient tuples over the inserted vectors."""

    def __init__(self, size: int):
        self.size = size

    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.size

    def combine(self, c1, t1, c2, t2):
        return tuple(c1 * a + c2 * b for a, b in zip(t1, t2))


def _apply(tag, vectors):
    return [sum(c * v[k] for c, v in zip(tag, vectors)) for k in range(len(vectors[0]))]


class TestXgcd:
    """Test the extended Euclidean algorithm."""

    @pytest.mark.parametrize("a,b", [(2, 1), (12, 18), (-4, 6), (0, 5), (7, 0), (-3, -9)])
    def test_bezout(self, a, b):
        """Test that the coefficients reproduce a nonnegative gcd."""
        x, y, g = xgcd(a, b)
        assert g >= 0
        assert x * a + y * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


class TestHnf:
    """Test the canonical basis."""

    def test_two_rows(self):
        """Test a full-rank 2x2 example."""
        assert hnf([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]

    @pytest.mark.parametrize(
        "rows,expected",
        [
            ([[2, 0], [0, 3]], [[2, 0], [0, 3]]),
            ([[2, 0], [4, 0]], [[2, 0]]),
            ([[1, 1], [1, -1]], [[1, 1], [0, 2]]),
        ],
    )
    def test_reference_cases(self, rows, expected):
        """Test the already-reduced, dependent and row-reduction cases."""
        assert hnf(rows) == expected

    def test_dependent_rows_vanish(self):
        """Test that zero and dependent rows disappear."""
        assert hnf([[0, 0], [2, 2], [1, 1]]) == [[1, 1]]

    def test_empty(self):
        """Test the empty input."""
        assert hnf([]) == []

    def test_negative_pivot(self):
        """Test that pivots come out positive."""
        assert hnf([[-3, 1]]) == [[3, -1]]

    def test_order_independent(self):
        """Test that row order does not change the result."""
        rows = [[4, 6, 2], [2, 0, 8], [0, 3, 3]]
        assert hnf(rows) == hnf(list(reversed(rows)))


class TestHermiteEchelon:
    """Test incremental insertion and tagged expression."""

    def test_insert_reports_growth(self):
        """Test that only independent or refining vectors grow the span."""
        echelon: HermiteEchelon[None] = HermiteEchelon(2)
        assert echelon.insert([2, 0])
        assert not echelon.insert([4, 0])
        assert echelon.insert([1, 0])
        assert len(echelon) == 1

    def test_dimension_mismatch(self):
        """Test that vectors of the wrong length are rejected."""
        with pytest.raises(ValueError):
            HermiteEchelon(3).insert([1, 2])

    def test_contains(self):
        """Test span membership."""
        echelon: HermiteEchelon[None] = HermiteEchelon(2)
        echelon.insert([2, 4])
        echelon.insert([1, 3])
        assert echelon.contains([3, 7])
        assert echelon.contains([0, 2])
        assert not echelon.contains([0, 1])

    def test_express_reconstructs(self):
        """Test that the returned tag rebuilds the target from inserted vectors."""
        vectors = [[2, 4, 0], [1, 3, 5], [0, 2, 7]]
        echelon = HermiteEchelon(3, CountTags(3))
        for k, v in enumerate(vectors):
            tag = tuple(1 if i == k else 0 for i in range(3))
            echelon.insert(v, tag)

        target = [3, 9, 12]
        tag = echelon.express(target)
        assert tag is not None
        assert _apply(tag, vectors) == target

    def test_express_after_normalize(self):
        """Test that normalization keeps the tags consistent."""
        vectors = [[2, 4], [1, 3]]
        echelon = HermiteEchelon(2, CountTags(2))
        echelon.insert(vectors[0], (1, 0))
        echelon.insert(vectors[1], (0, 1))
        echelon.normalize()
        for row, tag in echelon.tagged_rows():
            assert _apply(tag, vectors) == list(row)

    def test_express_non_member(self):
        """Test that non-members have no expression."""
        echelon = HermiteEchelon(2, CountTags(1))
        echelon.insert([2, 0], (1,))
        assert echelon.express([1, 0]) is None

    def test_express_without_algebra(self):
        """Test that untagged echelons express nothing."""
        echelon: HermiteEchelon[None] = HermiteEchelon(1)
        echelon.insert([1])
        assert echelon.express([5]) is None


class TestCoeffLattice:
    """Test polynomial lattices."""

    def test_dump(self):
        """Test the header and c_0..c_D rows."""
        lattice = CoeffLattice.from_polys([IntPoly.monomial(2, 1), IntPoly.monomial(1, 2)], 2)
        assert lattice.dump() == ["HNF D=2 rows=2", "0 0 1", "0 2 0"]

    def test_empty(self):
        """Test the empty lattice."""
        lattice = CoeffLattice.empty(4)
        assert lattice.is_empty()
        assert lattice.dump() == ["HNF D=4 rows=0"]
        assert lattice_contains(lattice, IntPoly.zero())

    def test_degree_over_cap(self):
        """Test that polynomials above the cap are rejected."""
        with pytest.raises(ValueError):
            CoeffLattice.from_polys([IntPoly.monomial(1, 5)], 3)
        with pytest.raises(ValueError):
            CoeffLattice.empty(3).contains(IntPoly.monomial(1, 4))

    def test_contains(self):
        """Test membership of integer combinations."""
        lattice = CoeffLattice.from_polys([parse_poly("x^2+x"), parse_poly("2x")], 2)
        assert lattice.contains(parse_poly("x^2+3x"))
        assert lattice.contains_vector((0, 4, 0))
        assert not lattice.contains(parse_poly("x"))

    def test_from_vectors(self):
        """Test building from coefficient vectors."""
        lattice = CoeffLattice.from_vectors([(0, 2), (1, 0)], 1)
        assert lattice.contains(parse_poly("1+4x"))
        assert lattice.rank == 2

    def test_truncate(self):
        """Test the sublattice of low degree."""
        lattice = CoeffLattice.from_polys([parse_poly("x^3+x"), parse_poly("2x")], 3)
        low = lattice.truncate(2)
        assert low.degree_cap == 2
        assert low.polys() == [IntPoly.monomial(2, 1)]
        assert lattice.truncate(5) is lattice

    def test_missing_from(self):
        """Test basis elements absent from another lattice."""
        small = CoeffLattice.from_polys([IntPoly.monomial(2, 1)], 3)
        large = CoeffLattice.from_polys([IntPoly.identity()], 2)
        assert small.is_sublattice_of(large)
        assert large.missing_from(small) == [IntPoly.identity()]
        assert not large.is_sublattice_of(small)

    def test_extended(self):
        """Test adding generators."""
        lattice = CoeffLattice.from_polys([IntPoly.monomial(2, 1)], 2)
        assert lattice.extended([IntPoly.identity()]).contains(IntPoly.identity())


class TestPredicateLattice:
    """Test the lattice of the characterization."""

    def test_x2x3_rank(self):
        """Test that everything from x^2 upward is free except one modulus."""
        lattice = predicate_lattice(GeneratorBasis.parse("x2,x3"), 13)
        assert lattice.rank == 12
        assert lattice.contains(IntPoly.monomial(2, 5))
        assert not lattice.contains(IntPoly.monomial(1, 5))

    def test_x2_moduli(self):
        """Test the power-of-two moduli."""
        lattice = predicate_lattice(GeneratorBasis.parse("x2"), 10)
        assert lattice.contains(IntPoly.monomial(1, 4))
        assert lattice.contains(IntPoly.monomial(2, 10))
        assert not lattice.contains(IntPoly.monomial(1, 10))
        assert not lattice.contains(IntPoly.monomial(1, 3))

    def test_x3_parity_cut(self):
        """Test that parity constraints halve the relevant sublattice."""
        lattice = predicate_lattice(GeneratorBasis.parse("x3"), 40)
        assert lattice.contains(parse_poly("3x^15+3x^21"))
        assert lattice.contains(IntPoly.monomial(6, 15))
        assert not lattice.contains(IntPoly.monomial(3, 15))
        assert lattice.contains(IntPoly.monomial(6, 33))
        assert not lattice.contains(IntPoly.monomial(3, 33))

    def test_empty_basis(self):
        """Test that the empty basis gives the zero lattice."""
        assert predicate_lattice(GeneratorBasis.parse("0"), 5).is_empty()
