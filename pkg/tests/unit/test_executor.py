"""
Unit tests for the work distribution engine.
"""
import pytest

from nearring.config.models import BaseConfig, ExecutionMode
from nearring.utils.executor import CheckResult, ParallelMapper
from nearring.utils.logging import get_exit_code


def _square(n: int) -> int:
    return n * n


@pytest.fixture(params=[ExecutionMode.SERIAL, ExecutionMode.PARALLEL])
def mapper(request):
    """Mapper in each execution mode."""
    return ParallelMapper(BaseConfig(execution_mode=request.param, max_workers=3))


class TestParallelMapper:
    """Test mapping in both modes."""

    def test_preserves_order(self, mapper):
        """Test that results line up with inputs."""
        items = list(range(50))
        assert mapper.map(_square, items) == [n * n for n in items]

    def test_empty(self, mapper):
        """Test mapping over nothing."""
        assert mapper.map(_square, []) == []

    def test_single_worker_runs_inline(self, mocker):
        """Test that one worker never starts a thread pool."""
        pool = mocker.patch("nearring.utils.executor.ThreadPoolExecutor")
        mapper = ParallelMapper(BaseConfig(max_workers=1))
        assert mapper.map(_square, [1, 2, 3]) == [1, 4, 9]
        pool.assert_not_called()

    def test_chunk(self):
        """Test contiguous chunking."""
        chunks = ParallelMapper._chunk(list(range(10)), 4)
        assert [list(c) for c in chunks] == [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9]]


class TestRunChecks:
    """Test named check runs."""

    def test_summary(self):
        """Test pass and fail counts."""
        mapper = ParallelMapper(BaseConfig(execution_mode=ExecutionMode.SERIAL))
        summary = mapper.run_checks(
            [
                ("good", lambda: CheckResult("good", True)),
                ("bad", lambda: CheckResult("bad", False, detail="no")),
            ]
        )
        assert summary.total_checks == 2
        assert summary.passed_checks == 1
        assert summary.failed_checks == 1
        assert not summary.overall_success
        assert get_exit_code(summary) == 1

    def test_exception_becomes_failure(self):
        """Test that a raising check is recorded, not propagated."""

        def boom() -> CheckResult:
            raise RuntimeError("exploded")

        summary = ParallelMapper(BaseConfig()).run_checks([("boom", boom)])
        result = summary.results[0]
        assert not result.success
        assert result.error == "check error: exploded"
        assert result.line == "RESULT boom FAIL (check error: exploded)"

    def test_all_pass(self):
        """Test the exit code of a passing run."""
        summary = ParallelMapper(BaseConfig()).run_checks([("ok", lambda: CheckResult("ok", True))])
        assert summary.overall_success
        assert get_exit_code(summary) == 0


class TestCheckResult:
    """Test verdict lines."""

    def test_lines(self):
        """Test PASS and FAIL with and without notes."""
        assert CheckResult("compare", True).line == "RESULT compare PASS"
        assert CheckResult("compare", True, detail="equal").line == "RESULT compare PASS (equal)"
        assert CheckResult("chain", False).line == "RESULT chain FAIL"
