"""
Line-oriented report builders for the command-line front end.
"""
import logging
from typing import List, Optional, Sequence

from nearring.algebra.polycore import IntPoly
from nearring.algebra.predicates import MembershipVerdict
from nearring.closure.lattice import CoeffLattice
from nearring.witness.terms import Term, render_term


logger = logging.getLogger(__name__)


class ReportBuilder:
    """Build the stable report lines printed on stdout."""

    @staticmethod
    def bool_word(value: bool) -> str:
        return "true" if value else "false"

    @staticmethod
    def membership(verdict: MembershipVerdict) -> List[str]:
        """
        Violated conditions followed by the verdict.

        Args:
            verdict: Outcome of a membership test

        Returns:
            COND lines, then "MEMBER true|false"
        """
        lines = verdict.report_lines()
        lines.append(f"MEMBER {ReportBuilder.bool_word(verdict.member)}")
        return lines

    @staticmethod
    def polynomial(p: IntPoly) -> List[str]:
        return [f"POLY {p}"]

    @staticmethod
    def lattice(lattice: CoeffLattice) -> List[str]:
        return lattice.dump()

    @staticmethod
    def witness(term: Optional[Term]) -> List[str]:
        """ "WITNESS <s-expression>" or "WITNESS none"."""
        return [f"WITNESS {render_term(term) if term is not None else 'none'}"]

    @staticmethod
    def verification(name: str, value: IntPoly, ok: bool) -> List[str]:
        return [f"VALUE {name} {value}", f"VERIFY {ReportBuilder.bool_word(ok)}"]

    @staticmethod
    def generators(generators: Sequence[IntPoly]) -> str:
        """Brace-enclosed generator list, e.g. "{x^2, x^3}"."""
        return "{" + ", ".join(str(g) for g in generators) + "}"
