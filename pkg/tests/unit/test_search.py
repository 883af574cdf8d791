"""
Unit tests for the bounded witness search.
"""
import pytest

from nearring.algebra.polycore import IntPoly
from nearring.algebra.predicates import GeneratorBasis
from nearring.closure.lattice import predicate_lattice
from nearring.config.models import ExecutionMode, SearchConfig
from nearring.witness.search import LinearFormAlgebra, WitnessSearch, search_witness
from nearring.witness.terms import Environment, Gen, Zero, eval_term, parse_term, render_term


X2 = IntPoly.monomial(1, 2)
X3 = IntPoly.monomial(1, 3)


def _assert_round_trip(term, env, target):
    """The term, its text and the parsed text all evaluate to target."""
    assert eval_term(term, env) == target
    assert eval_term(parse_term(render_term(term)), env) == target


@pytest.fixture
def serial_config():
    """Search configuration that stays on the calling thread."""
    return SearchConfig(execution_mode=ExecutionMode.SERIAL)


class TestLinearFormAlgebra:
    """Test sparse linear forms."""

    def test_combine(self):
        """Test integer combinations."""
        algebra = LinearFormAlgebra()
        assert algebra.combine(2, {0: 1, 1: 1}, 3, {1: 1}) == {0: 2, 1: 5}

    def test_cancellation_drops_keys(self):
        """Test that zero coefficients are removed."""
        algebra = LinearFormAlgebra()
        assert algebra.combine(1, {0: 1}, 1, {0: -1}) == {}
        assert algebra.combine(0, {0: 4}, 1, {}) == {}

    def test_zero(self):
        """Test the empty form."""
        assert LinearFormAlgebra().zero() == {}


class TestSearchWitness:
    """Test one-shot searches."""

    def test_two_x5(self, serial_config):
        """Test that 2x^5 is found over {x^2, x^3}."""
        term = search_witness(IntPoly.monomial(2, 5), [X2, X3], serial_config)
        assert term is not None
        _assert_round_trip(term, Environment.of(X2, X3), IntPoly.monomial(2, 5))

    def test_x5_not_found(self, serial_config):
        """Test that x^5 exhausts the bounds."""
        assert search_witness(IntPoly.monomial(1, 5), [X2, X3], serial_config) is None

    def test_separation(self, serial_config):
        """Test that 2x^10 is found over {x^2}."""
        term = search_witness(IntPoly.monomial(2, 10), [X2], serial_config)
        assert term is not None
        _assert_round_trip(term, Environment.of(X2), IntPoly.monomial(2, 10))

    def test_generator_target(self, serial_config):
        """Test that a generator is its own witness."""
        term = search_witness(X3, [X2, X3], serial_config)
        assert isinstance(term, Gen)
        assert term.index == 1

    def test_zero_target(self, serial_config):
        """Test that 0 is witnessed by the zero leaf."""
        assert isinstance(search_witness(IntPoly.zero(), [X2], serial_config), Zero)

    def test_depth_zero(self):
        """Test that depth 0 only expresses sums of generators."""
        config = SearchConfig(execution_mode=ExecutionMode.SERIAL, max_depth=0)
        term = search_witness(IntPoly.from_terms([(2, 2), (-1, 3)]), [X2, X3], config)
        assert term is not None
        assert search_witness(IntPoly.monomial(1, 4), [X2], config) is None

    def test_parallel_matches_serial(self):
        """Test that the thread pool finds a valid term too."""
        config = SearchConfig(execution_mode=ExecutionMode.PARALLEL, max_workers=2)
        term = search_witness(IntPoly.monomial(2, 5), [X2, X3], config)
        assert term is not None
        assert eval_term(term, Environment.of(X2, X3)) == IntPoly.monomial(2, 5)


class TestWitnessSearch:
    """Test the reusable search state."""

    def test_above_degree_cap(self, serial_config):
        """Test that targets above the cap are not searched."""
        search = WitnessSearch([X2], serial_config, 4)
        assert search.find(IntPoly.monomial(2, 10)) is None
        assert search.depth == 0

    def test_reuse(self, serial_config):
        """Test several targets against one state."""
        search = WitnessSearch([X2, X3], serial_config, 8)
        env = Environment.of(X2, X3)
        for target in (IntPoly.monomial(1, 4), IntPoly.monomial(1, 6), IntPoly.monomial(2, 5)):
            term = search.find(target)
            assert term is not None
            _assert_round_trip(term, env, target)

    @pytest.mark.slow
    def test_x2x3_predicate_rows(self, serial_config):
        """Test that every row of the degree-13 characterization is re-derived."""
        lattice = predicate_lattice(GeneratorBasis.parse("x2,x3"), 13)
        search = WitnessSearch([X2, X3], serial_config, 13)
        env = Environment.of(X2, X3)
        for row in lattice.polys():
            term = search.find(row)
            assert term is not None, f"no witness for {row}"
            _assert_round_trip(term, env, row)


class TestDeepWitnesses:
    """Test monomials that need several composition rounds."""

    @pytest.mark.parametrize(
        "exponent", [7, 11, pytest.param(13, marks=pytest.mark.slow)]
    )
    def test_x2x3_monomial(self, serial_config, exponent):
        """Test that x^i is found over {x^2, x^3} and survives rendering."""
        target = IntPoly.monomial(1, exponent)
        search = WitnessSearch.for_target(target, [X2, X3], serial_config)
        term = search.find(target)
        assert term is not None
        assert search.depth >= 1
        _assert_round_trip(term, Environment.of(X2, X3), target)

    def test_for_target_cap(self, serial_config):
        """Test that the state answers up to the target degree."""
        assert WitnessSearch.for_target(IntPoly.monomial(1, 7), [X2], serial_config).degree_cap == 7
        assert WitnessSearch.for_target(IntPoly.zero(), [X2], serial_config).degree_cap == 0
