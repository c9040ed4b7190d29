"""
gravicav scenarios — configuration, execution and reporting of named experiments.
"""

from .acceptance import CRITERIA, acceptance
from .config import (
    ConfigIssue,
    Scenario,
    ScenarioKind,
    ScenarioValidator,
    Severity,
    TimeGrid,
    default_scenarios,
    load_config,
    parse_config,
)
from .report import RunStatus, RunSummary, SuiteReport
from .runner import (
    ORACLE_COLUMNS,
    VACUUM_COLUMNS,
    output_prefix,
    run,
    run_all,
    write_summary,
    write_time_series,
)

__all__ = [
    "CRITERIA",
    "acceptance",
    "ConfigIssue",
    "Scenario",
    "ScenarioKind",
    "ScenarioValidator",
    "Severity",
    "TimeGrid",
    "default_scenarios",
    "load_config",
    "parse_config",
    "RunStatus",
    "RunSummary",
    "SuiteReport",
    "ORACLE_COLUMNS",
    "VACUUM_COLUMNS",
    "output_prefix",
    "run",
    "run_all",
    "write_summary",
    "write_time_series",
]
