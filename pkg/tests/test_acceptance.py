"""
Test suite for the acceptance criteria.
"""

import pytest

from gravicav.models import PhaseConvention
from gravicav.scenarios import CRITERIA, RunStatus, acceptance

FAST = ["vacuum_minimum", "revivals", "thermal_estimate", "constants", "typo_detection"]


def _by_name(summaries):
    return {s.name: s for s in summaries}


class TestAcceptance:

    def test_criteria_order(self):
        assert [name for name, _ in CRITERIA] == [
            "vacuum_minimum",
            "revivals",
            "oracle_vacuum",
            "factorized_unitary",
            "bch_identities",
            "coherent_wave",
            "squeezed_wave",
            "thermal_estimate",
            "constants",
            "typo_detection",
        ]

    def test_fast_criteria_pass(self):
        summaries = acceptance(only=FAST)
        assert [s.name for s in summaries] == FAST
        for s in summaries:
            assert s.status == RunStatus.PASS, (s.name, s.metrics)

    def test_vacuum_minimum_values(self):
        [summary] = acceptance(only=["vacuum_minimum"])
        assert summary.metrics["F0"] == pytest.approx(0.33, abs=0.02)
        assert summary.metrics["varMin"] == pytest.approx(0.68, abs=0.01)

    def test_printed_convention_fails_minimum(self):
        by_name = _by_name(acceptance(PhaseConvention.PAPER_PRINTED, only=["vacuum_minimum", "revivals"]))
        assert by_name["vacuum_minimum"].status == RunStatus.FAIL
        assert by_name["revivals"].status == RunStatus.PASS

    def test_constants_metrics(self):
        [summary] = acceptance(only=["constants"])
        assert summary.metrics["Epl"] == pytest.approx(1.855e43, rel=1e-3)
        assert summary.metrics["Epl_relative_deviation"] <= 1e-6

    def test_budget_failure_is_recorded(self):
        [summary] = acceptance(only=["oracle_vacuum"], budget=100)
        assert summary.status == RunStatus.FAIL
        assert summary.metrics == {"error_code": "BUDGET_EXCEEDED"}

    def test_oracle_criteria(self):
        summaries = acceptance(only=["oracle_vacuum", "factorized_unitary", "bch_identities"])
        for s in summaries:
            assert s.status == RunStatus.PASS, (s.name, s.metrics)

    def test_full_suite(self):
        summaries = acceptance(max_workers=2)
        assert len(summaries) == len(CRITERIA)
        failed = [(s.name, s.metrics, s.message) for s in summaries if s.status != RunStatus.PASS]
        assert failed == []
        squeezed = _by_name(summaries)["squeezed_wave"]
        assert 3.9 < squeezed.metrics["paper_to_exact_correction_ratio"] < 4.1
