"""
Acceptance suite manager: named checks over the whole library.
"""
import logging
import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from nearring.algebra.numtheory import check_residue_lemmas, sweep_lemma_31, sweep_lemma_32
from nearring.algebra.polycore import IntPoly, compose, parse_poly
from nearring.algebra.predicates import GeneratorBasis, member, pullback_pairs, sample_member
from nearring.closure.lattice import predicate_lattice
from nearring.closure.saturation import (
    compare_closure_vs_predicate,
    descending_chain_check,
    parity_coefficient_check,
    saturate,
    theorem_41_exponent,
    theorem_41_generators,
)
from nearring.config.models import CheckConfig, SearchConfig
from nearring.utils.executor import CheckResult, ParallelMapper, SuiteSummary
from nearring.utils.report import ReportBuilder
from nearring.witness.fixtures import X2_ENV, builtin_derivations, separation_term
from nearring.witness.search import WitnessSearch
from nearring.witness.terms import eval_term, lift_round_trip, verify_derivation


logger = logging.getLogger(__name__)

# (bits, degree cap) groups that must reach lattice equality
EQUALITY_GROUPS: Tuple[Tuple[Tuple[str, ...], int], ...] = (
    (("0010", "1010", "0110", "1110"), 16),
    (("0011", "1011", "0111", "1111"), 13),
    (("0000", "1000", "0100", "1100"), 8),
)
CONTAINMENT_CAP = 24

X3_FIXTURES = (
    "x^3",
    "x^9",
    "6x^15",
    "3x^15+3x^21",
    "x^27",
    "6x^33",
    "3x^15+3x^39",
    "3x^15+3x^33+3x^45",
    "3x^33+9x^51",
    "3x^33+3x^57",
    "3x^15+3x^33+3x^63",
    "3x^15+9x^69",
    "3x^33+9x^75",
)
X3_FIXTURE_CAP = 75

THEOREM_41_CAP = 30
THEOREM_41_JS = (1, 2, 3)
CHAIN_INDEX = 1
CHAIN_CAP = 64
WITNESS_CAP = 13
PULLBACK_DEGREE = 10


def _basis_from_bits(bits: str) -> GeneratorBasis:
    return GeneratorBasis(*(flag == "1" for flag in bits))


def _random_poly(rng: random.Random, degree: int, spread: int = 9) -> IntPoly:
    return IntPoly(tuple(rng.randint(-spread, spread) for _ in range(degree + 1)))


class AcceptanceSuite:
    """Runs the acceptance checks by name."""

    def __init__(self, config: CheckConfig):
        """
        Initialize the suite.

        Args:
            config: Check configuration; an explicit degree_cap overrides
                the per-check default caps
        """
        self.config = config
        self.mapper = ParallelMapper(config)
        self.checks: Dict[str, Callable[[], CheckResult]] = {
            "separation": self.separation,
            "compare": self.compare,
            "x3-fixtures": self.x3_fixtures,
            "theorem-4.1": self.theorem_41,
            "lemma-3.1": self.lemma_31,
            "lemma-3.2": self.lemma_32,
            "residues": self.residues,
            "pullback": self.pullback,
            "witness": self.witness,
            "algebra": self.algebra,
            "chain": self.chain,
        }

    @property
    def names(self) -> List[str]:
        return list(self.checks) + ["all"]

    def run(self, names: Sequence[str]) -> SuiteSummary:
        """
        Run the named checks; "all" expands to every check.

        Raises:
            KeyError: If a name is not a known check
        """
        selected: List[str] = []
        for name in names:
            if name == "all":
                selected.extend(self.checks)
            elif name in self.checks:
                selected.append(name)
            else:
                raise KeyError(f"Unknown check {name!r}; expected one of {self.names}")
        return self.mapper.run_checks([(name, self.checks[name]) for name in selected])

    def _cap(self, default: int) -> int:
        if "degree_cap" in self.config.model_fields_set:
            return self.config.degree_cap
        return default

    def _closure_config(self, degree_cap: int) -> CheckConfig:
        return self.config.model_copy(update={"degree_cap": degree_cap})

    def separation(self) -> CheckResult:
        """2x^10 is in the nearring generated by x^2, x^10 is not."""
        x2 = GeneratorBasis.parse("x2")
        doubled = member(x2, IntPoly.monomial(2, 10))
        single = member(x2, IntPoly.monomial(1, 10))
        value = eval_term(separation_term(), X2_ENV)
        report = (
            f"member(x2, 2x^10) = {ReportBuilder.bool_word(doubled.member)}",
            f"member(x2, x^10) = {ReportBuilder.bool_word(single.member)}",
            f"derivation value = {value}",
        )
        ok = doubled.member and not single.member and value == IntPoly.monomial(2, 10)
        return CheckResult("separation", ok, report=report)

    def compare(self) -> CheckResult:
        """Lattice equality for the tabulated bases and containment for all 16."""
        report: List[str] = []
        failures = 0

        for group, default_cap in EQUALITY_GROUPS:
            config = self._closure_config(self._cap(default_cap))
            for bits in group:
                result = compare_closure_vs_predicate(
                    _basis_from_bits(bits), config, self.config.escalations
                )
                report.extend(result.lines())
                report.append(f"compare {bits} D={config.degree_cap}: {result.note}")
                failures += not result.success

        config = self._closure_config(self._cap(CONTAINMENT_CAP))
        for basis in GeneratorBasis.all_bases():
            escaped = saturate(basis.generators(), config).missing_from(
                predicate_lattice(basis, config.degree_cap)
            )
            report.extend(f"ESCAPED {basis.bits} {p}" for p in escaped)
            failures += bool(escaped)
        report.append(f"containment D={config.degree_cap}: 16 bases checked")

        detail = "equal" if not failures else f"{failures} failure(s)"
        return CheckResult("compare", failures == 0, detail=detail, report=tuple(report))

    def x3_fixtures(self) -> CheckResult:
        """The tabulated members of the nearring generated by x^3."""
        basis = GeneratorBasis.parse("x3")
        fixtures = [parse_poly(text) for text in X3_FIXTURES]
        cap = self._cap(X3_FIXTURE_CAP)
        config = self._closure_config(cap)
        for _ in range(self.config.escalations):
            config = config.escalated()

        lattice = saturate(basis.generators(), config)
        report: List[str] = []
        failures = 0
        for p in fixtures:
            in_predicate = member(basis, p).member
            in_closure = p.degree <= cap and lattice.contains(p)
            if not (in_predicate and in_closure):
                failures += 1
                report.append(
                    f"FIXTURE {p}: member={ReportBuilder.bool_word(in_predicate)} "
                    f"closure={ReportBuilder.bool_word(in_closure)}"
                )

        x3_derivations = [d for d in builtin_derivations() if d.name.startswith("lem-x3-")]
        unverified = [d.name for d in x3_derivations if not verify_derivation(d)]
        report.extend(f"UNVERIFIED {name}" for name in unverified)
        failures += len(unverified)

        detail = f"{len(fixtures)} fixtures, {len(x3_derivations)} derivations"
        return CheckResult("x3-fixtures", failures == 0, detail=detail, report=tuple(report))

    def theorem_41(self) -> CheckResult:
        """Even coefficient at x^(2^(j+1)-2) across the saturated lattice."""
        cap = self._cap(THEOREM_41_CAP)
        config = self._closure_config(cap)
        js = (self.config.j,) if self.config.j is not None else THEOREM_41_JS
        report: List[str] = []
        violations = 0

        for j in js:
            exponent = theorem_41_exponent(j)
            if exponent > cap:
                report.append(f"j={j}: exponent {exponent} above degree cap {cap}, skipped")
                continue
            result = parity_coefficient_check(theorem_41_generators(j, cap), exponent, config)
            report.extend(result.lines())
            violations += len(result.violations)

        return CheckResult(
            "theorem-4.1", violations == 0, detail=f"{violations} violation(s)", report=tuple(report)
        )

    def lemma_31(self) -> CheckResult:
        summary = sweep_lemma_31()
        return CheckResult(
            "lemma-3.1",
            summary.success,
            detail=f"{summary.applicable} of {summary.checked} instances applicable",
            report=tuple(summary.violations),
        )

    def lemma_32(self) -> CheckResult:
        summary = sweep_lemma_32()
        return CheckResult(
            "lemma-3.2",
            summary.success,
            detail=f"{summary.applicable} of {summary.checked} instances applicable",
            report=tuple(summary.violations),
        )

    def residues(self) -> CheckResult:
        failures = check_residue_lemmas()
        return CheckResult(
            "residues",
            not failures,
            detail=f"{len(failures)} failing k",
            report=tuple(f"RESIDUE k={k}" for k in failures),
        )

    def pullback(self) -> CheckResult:
        """p in the outer nearring iff p o a is in the pulled-back one."""
        rng = random.Random(self.config.seed)
        report: List[str] = []

        for outer, inner, pulled in pullback_pairs():
            discrepancies = 0
            for n in range(self.config.samples):
                # alternate arbitrary polynomials with members of the outer nearring
                if n % 2:
                    p = sample_member(outer, PULLBACK_DEGREE, rng)
                else:
                    p = _random_poly(rng, rng.randint(0, PULLBACK_DEGREE))
                if member(outer, p).member != member(pulled, compose(p, inner)).member:
                    discrepancies += 1
                    if discrepancies <= 5:
                        report.append(f"DISCREPANCY {outer.label} o {inner}: {p}")
            report.append(
                f"{{{outer.label}}} vs {{{pulled.label}}} o {inner}: "
                f"{discrepancies} discrepancies in {self.config.samples} samples"
            )
            if discrepancies:
                return CheckResult("pullback", False, detail="discrepancy found", report=tuple(report))

        return CheckResult("pullback", True, detail=f"{len(pullback_pairs())} pairs", report=tuple(report))

    def witness(self) -> CheckResult:
        """Derivations verify, lift round-trips, and search re-derives the x^2, x^3 basis."""
        report: List[str] = []
        failures = 0
        derivations = builtin_derivations()

        for d in derivations:
            if not verify_derivation(d):
                failures += 1
                report.append(f"UNVERIFIED {d.name}")
            elif len(d.environment.generators) == 1 and not lift_round_trip(d):
                failures += 1
                report.append(f"LIFT {d.name}")

        cap = self._cap(WITNESS_CAP)
        basis = GeneratorBasis.parse("x2,x3")
        search = WitnessSearch(
            basis.generators(), self._search_config(), degree_cap=cap
        )
        rows = predicate_lattice(basis, cap).polys()
        for row in rows:
            term = search.find(row)
            if term is None:
                failures += 1
                report.append(f"NOT FOUND {row}")

        detail = f"{len(derivations)} derivations, {len(rows)} searched rows"
        return CheckResult("witness", failures == 0, detail=detail, report=tuple(report))

    def _search_config(self) -> SearchConfig:
        return SearchConfig(
            execution_mode=self.config.execution_mode,
            max_workers=self.config.max_workers,
            coeff_cap=self.config.coeff_cap,
            combo_width=self.config.combo_width,
            work_factor=self.config.work_factor,
            max_depth=self.config.max_rounds,
        )

    def algebra(self) -> CheckResult:
        """Nearring laws of composition on random polynomials."""
        rng = random.Random(self.config.seed)
        cases = self.config.samples * 10
        counts = {
            "associativity": 0,
            "right distributivity": 0,
            "right cancellation": 0,
            "constant absorption": 0,
        }

        for _ in range(cases):
            f, g, h = (_random_poly(rng, rng.randint(0, 3), spread=5) for _ in range(3))
            if compose(compose(f, g), h) != compose(f, compose(g, h)):
                counts["associativity"] += 1
            if compose(f + g, h) != compose(f, h) + compose(g, h):
                counts["right distributivity"] += 1
            a = _random_poly(rng, rng.randint(1, 3), spread=5)
            if a.degree >= 1 and f != g and compose(f, a) == compose(g, a):
                counts["right cancellation"] += 1
            c = IntPoly.constant(rng.randint(-9, 9))
            if compose(c, f) != c:
                counts["constant absorption"] += 1

        x, x2 = IntPoly.identity(), IntPoly.monomial(1, 2)
        left_fails = compose(x2, x + x) != compose(x2, x) + compose(x2, x)

        report = [f"{law}: {n} violation(s) in {cases} cases" for law, n in counts.items()]
        report.append(
            f"left distributivity fails for x^2 o (x + x): {ReportBuilder.bool_word(left_fails)}"
        )
        ok = left_fails and not any(counts.values())
        return CheckResult("algebra", ok, detail=f"{cases} cases per law", report=tuple(report))

    def chain(self) -> CheckResult:
        """The nearring generated by x^16 sits inside the one generated by x^4."""
        result = descending_chain_check(CHAIN_INDEX, self.config, degree_cap=self._cap(CHAIN_CAP))
        report = (
            f"x^4 o x^4 = x^16: {ReportBuilder.bool_word(result.square_identity)}",
            f"contained: {ReportBuilder.bool_word(result.contained)}",
            f"x^4 absent from inner: {ReportBuilder.bool_word(result.generator_absent)}",
        )
        return CheckResult("chain", result.success, report=report)


def run_suite(names: Sequence[str], config: Optional[CheckConfig] = None) -> SuiteSummary:
    """Run named checks with a default configuration when none is given."""
    return AcceptanceSuite(config or CheckConfig()).run(names)
