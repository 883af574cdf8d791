"""
Work distribution engine with parallel and serial modes.
"""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, TypeVar

from nearring.config.models import BaseConfig, ExecutionMode


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class CheckResult(NamedTuple):
    """Result of a single named check."""
    name: str
    success: bool
    detail: str = ""
    error: Optional[str] = None
    report: Tuple[str, ...] = ()

    @property
    def line(self) -> str:
        """Machine-readable verdict line."""
        verdict = "PASS" if self.success else "FAIL"
        note = self.error or self.detail
        suffix = f" ({note})" if note else ""
        return f"RESULT {self.name} {verdict}{suffix}"


class SuiteSummary(NamedTuple):
    """Summary of a run over several checks."""
    total_checks: int
    passed_checks: int
    failed_checks: int
    results: List[CheckResult]
    overall_success: bool


class ParallelMapper:
    """Map pure functions over work items, serially or on a thread pool."""

    def __init__(self, config: BaseConfig):
        """
        Initialize the mapper.

        Args:
            config: Configuration object with execution settings
        """
        self.config = config

    def map(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """
        Apply func to every item, returning results in input order.

        Args:
            func: Pure function to apply
            items: Work items

        Returns:
            List of results aligned with items
        """
        if not items:
            return []
        if self.config.execution_mode == ExecutionMode.SERIAL or self.config.max_workers == 1:
            return [func(item) for item in items]
        return self._map_parallel(func, items)

    def _map_parallel(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Map chunks of items on a thread pool."""
        chunks = self._chunk(items, self.config.max_workers * 4)
        results: List[Optional[List[R]]] = [None] * len(chunks)

        with ThreadPoolExecutor(max_workers=min(len(chunks), self.config.max_workers)) as executor:
            future_to_chunk = {
                executor.submit(lambda chunk: [func(item) for item in chunk], chunk): index
                for index, chunk in enumerate(chunks)
            }

            for future in as_completed(future_to_chunk):
                results[future_to_chunk[future]] = future.result()

        return [result for chunk_results in results if chunk_results for result in chunk_results]

    @staticmethod
    def _chunk(items: Sequence[T], count: int) -> List[Sequence[T]]:
        """Split items into at most count contiguous chunks."""
        size = max(1, -(-len(items) // count))
        return [items[start:start + size] for start in range(0, len(items), size)]

    def run_checks(self, checks: Sequence[Tuple[str, Callable[[], CheckResult]]]) -> SuiteSummary:
        """
        Run named checks, capturing failures per check.

        Checks run serially: each one may itself use this mapper.

        Args:
            checks: (name, zero-argument callable) pairs

        Returns:
            SuiteSummary over all checks
        """
        results = []

        for name, check in checks:
            logger.info(f"Running check {name}")
            try:
                results.append(check())
            except Exception as e:
                logger.error(f"Check {name} raised: {e}")
                results.append(CheckResult(name=name, success=False, error=f"check error: {e}"))

        return self._create_summary(results)

    def _create_summary(self, results: List[CheckResult]) -> SuiteSummary:
        """Create a summary from check results."""
        passed = sum(1 for r in results if r.success)
        failed = len(results) - passed

        return SuiteSummary(
            total_checks=len(results),
            passed_checks=passed,
            failed_checks=failed,
            results=results,
            overall_success=failed == 0,
        )
