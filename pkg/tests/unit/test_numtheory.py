"""
Unit tests for the number-theory helpers and lemma checkers.
"""
import pytest

from nearring.algebra.numtheory import (
    ResidueClassSet,
    check_lemma_31,
    check_lemma_32,
    check_residue_lemmas,
    digit_sum,
    divides,
    multinomial,
    padic_valuation,
    standard_sets,
    sweep_lemma_31,
    sweep_lemma_32,
)


class TestDigitSum:
    """Test base-b digit sums."""

    @pytest.mark.parametrize(
        "n,base,expected",
        [(10, 2, 2), (15, 3, 3), (0, 2, 0), (21, 3, 3), (81, 3, 1), (255, 2, 8)],
    )
    def test_values(self, n, base, expected):
        """Test known digit sums."""
        assert digit_sum(n, base) == expected

    def test_base_too_small(self):
        """Test that bases below 2 are rejected."""
        with pytest.raises(ValueError):
            digit_sum(5, 1)

    def test_negative(self):
        """Test that negative numbers are rejected."""
        with pytest.raises(ValueError):
            digit_sum(-1, 2)


class TestMultinomial:
    """Test multinomial coefficients."""

    def test_values(self):
        """Test small multinomials."""
        assert multinomial(4, [2, 2]) == 6
        assert multinomial(3, [1, 1, 1]) == 6
        assert multinomial(5, [5]) == 1
        assert multinomial(0, [0, 0]) == 1

    def test_sum_mismatch(self):
        """Test that parts must sum to k."""
        with pytest.raises(ValueError):
            multinomial(4, [1, 2])

    def test_negative_part(self):
        """Test that negative parts are rejected."""
        with pytest.raises(ValueError):
            multinomial(0, [1, -1])


class TestValuationAndDivides:
    """Test p-adic valuation and divisibility."""

    def test_valuation(self):
        """Test known valuations."""
        assert padic_valuation(24, 2) == 3
        assert padic_valuation(-54, 3) == 3
        assert padic_valuation(7, 2) == 0

    def test_valuation_of_zero(self):
        """Test that the valuation of 0 is rejected."""
        with pytest.raises(ValueError):
            padic_valuation(0, 2)

    def test_divides(self):
        """Test divisibility, with every modulus dividing 0."""
        assert divides(3, 9)
        assert not divides(2, 5)
        assert divides(0, 0)
        assert divides(5, 0)
        assert not divides(0, 5)


class TestResidueClassSet:
    """Test residue-class sets."""

    def test_standard_sets(self):
        """Test membership in A, B, C, D."""
        sets = standard_sets()
        assert 15 in sets.a and 39 in sets.a and 21 in sets.a
        assert 3 not in sets.a
        assert 3 not in sets.b
        assert 33 in sets.b and 75 in sets.b
        assert 5 in sets.c and 7 in sets.c and 13 in sets.c
        assert 1 not in sets.d
        assert 25 in sets.d and 11 in sets.d

    def test_members_upto(self):
        """Test sorted enumeration up to a bound."""
        assert standard_sets().a.members_upto(45) == [15, 21, 39, 45]

    def test_render(self):
        """Test the bracket notation."""
        sets = standard_sets()
        assert sets.a.render() == "[15,21]_24"
        assert sets.b.render() == "[3,33,45,51,57,63]_72 \\ {3}"

    def test_invalid(self):
        """Test rejection of malformed sets."""
        with pytest.raises(ValueError):
            ResidueClassSet(0, frozenset({0}))
        with pytest.raises(ValueError):
            ResidueClassSet(6, frozenset({6}))
        with pytest.raises(ValueError):
            ResidueClassSet(6, frozenset())


class TestLemmaCheckers:
    """Test the single-instance lemma checkers."""

    def test_lemma_31_applicable(self):
        """Test instances whose hypotheses hold."""
        assert check_lemma_31(2, 1, [1, 1], 0)
        assert check_lemma_31(3, 1, [1, 2], 0)
        assert check_lemma_31(2, 2, [1, 3], 1)

    def test_lemma_31_vacuous(self):
        """Test instances whose hypotheses fail."""
        assert not check_lemma_31(2, 1, [2, 2], 0)
        assert not check_lemma_31(3, 1, [1, 1], 0)

    def test_lemma_31_bad_index(self):
        """Test that an out-of-range index is rejected."""
        with pytest.raises(ValueError):
            check_lemma_31(2, 1, [1, 1], 2)

    def test_lemma_32_applicable(self):
        """Test an instance whose hypotheses hold."""
        assert check_lemma_32([2, 4], [1, 1], 2)

    def test_lemma_32_vacuous(self):
        """Test instances whose hypotheses fail."""
        assert not check_lemma_32([2], [1], 1)
        assert not check_lemma_32([2, 4], [1, 1], 1)
        assert not check_lemma_32([0], [0], 0)
        assert not check_lemma_32([3, 3], [1, 1], 2)

    def test_lemma_32_length_mismatch(self):
        """Test that ls and ks must align."""
        with pytest.raises(ValueError):
            check_lemma_32([2], [1, 1], 1)


class TestSweeps:
    """Test the exhaustive sweeps."""

    def test_lemma_31_sweep(self):
        """Test that the default box has no counterexample."""
        summary = sweep_lemma_31()
        assert summary.success
        assert summary.applicable > 0
        assert summary.checked > summary.applicable

    def test_lemma_32_sweep(self):
        """Test that the default box has no counterexample."""
        summary = sweep_lemma_32()
        assert summary.success
        assert summary.applicable > 0

    def test_residue_lemmas(self):
        """Test the mod-24 and mod-72 equivalences."""
        assert check_residue_lemmas(5000) == []
