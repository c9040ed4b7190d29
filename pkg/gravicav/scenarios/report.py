"""
gravicav scenarios — run summaries and suite reports.

Outputs terminal-friendly tables and JSON summaries. Wall time lives only
in summaries, never in CSV data files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


# ANSI colors
class _C:
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    CYAN = "\033[36m"
    DIM = "\033[2m"
    BOLD = "\033[1m"
    RESET = "\033[0m"


class RunStatus(str, Enum):
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"


STATUS_ICONS = {
    RunStatus.PASS: f"{_C.GREEN}PASS{_C.RESET}",
    RunStatus.WARN: f"{_C.YELLOW}WARN{_C.RESET}",
    RunStatus.FAIL: f"{_C.RED}FAIL{_C.RESET}",
}


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if hasattr(value, "item"):
        return value.item()
    return value


@dataclass
class RunSummary:
    """Outcome of one scenario or acceptance criterion."""

    name: str
    status: RunStatus
    metrics: Dict[str, Any] = field(default_factory=dict)
    tolerances: Dict[str, Any] = field(default_factory=dict)
    runtime_s: float = 0.0
    message: str = ""
    outputs: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != RunStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "name": self.name,
            "status": self.status.value,
            "metrics": _json_safe(self.metrics),
            "tolerances": _json_safe(self.tolerances),
            "runtime_s": self.runtime_s,
        }
        if self.message:
            d["message"] = self.message
        return d

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def save_json(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")


class SuiteReport:
    """A list of summaries with aggregate exit status."""

    def __init__(self, summaries: List[RunSummary], title: str = "gravicav run"):
        self._summaries = list(summaries)
        self._title = title

    @property
    def summaries(self) -> List[RunSummary]:
        return list(self._summaries)

    @property
    def exit_code(self) -> int:
        return 0 if all(s.passed for s in self._summaries) else 1

    def _counts(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in RunStatus}
        for s in self._summaries:
            counts[s.status.value] += 1
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self._title,
            "summary": self._counts(),
            "runs": [s.to_dict() for s in self._summaries],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def save_json(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")

    def to_terminal(self, color: bool = True) -> str:
        lines = []
        lines.append(f"\n{_C.CYAN}{self._title}{_C.RESET}")
        lines.append(f"{_C.DIM}{'─' * 64}{_C.RESET}")
        if not self._summaries:
            lines.append(f"  {_C.DIM}No scenarios.{_C.RESET}")
            return _strip(lines, color)

        lines.append(f"  {_C.BOLD}{'Name':<28} {'Status':<8} {'Time':>8}  {'Detail'}{_C.RESET}")
        lines.append(f"  {'─' * 60}")
        for s in self._summaries:
            detail = s.message or _headline(s.metrics)
            lines.append(f"  {s.name[:27]:<28} {STATUS_ICONS[s.status]:<17} {s.runtime_s:>7.2f}s  {_C.DIM}{detail}{_C.RESET}")

        counts = self._counts()
        lines.append(f"  {'─' * 60}")
        lines.append(
            f"  Ran: {_C.BOLD}{len(self._summaries)}{_C.RESET} | "
            f"{_C.GREEN}{counts['pass']} pass{_C.RESET} | "
            f"{_C.YELLOW}{counts['warn']} warn{_C.RESET} | "
            f"{_C.RED}{counts['fail']} fail{_C.RESET}"
        )
        return _strip(lines, color)


def _headline(metrics: Dict[str, Any], limit: int = 3) -> str:
    parts = []
    for key, value in metrics.items():
        if isinstance(value, float):
            parts.append(f"{key}={value:.4g}")
        elif isinstance(value, (int, str, bool)):
            parts.append(f"{key}={value}")
        if len(parts) == limit:
            break
    return ", ".join(parts)


def _strip(lines: List[str], color: bool) -> str:
    text = "\n".join(lines)
    if color:
        return text
    for code in (_C.RED, _C.GREEN, _C.YELLOW, _C.CYAN, _C.DIM, _C.BOLD, _C.RESET):
        text = text.replace(code, "")
    return text
