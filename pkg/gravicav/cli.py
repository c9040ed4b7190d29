#!/usr/bin/env python3
"""
gravicav CLI — cavity field response to quantized gravitational waves

Commands:
    gravicav simulate <config>   Run the scenarios of a JSON configuration
    gravicav sweep-variance      Vacuum variance scan over the Kerr phase F
    gravicav verify              Oracle checks (propagator, factorized unitary, BCH)
    gravicav acceptance          Full acceptance suite

Exit codes: 0 all pass, 1 any failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional

from . import __version__
from .errors import ConfigError, GravicavError
from .models import DisplacementVariant, Frame, PhaseConvention


# ANSI
class _C:
    CYAN = "\033[36m"
    GREEN = "\033[32m"
    RED = "\033[31m"
    YELLOW = "\033[33m"
    DIM = "\033[2m"
    BOLD = "\033[1m"
    RESET = "\033[0m"


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2

VERIFY_CRITERIA = ["oracle_vacuum", "factorized_unitary", "bch_identities"]


def _banner():
    return f"{_C.CYAN}gravicav{_C.RESET} {_C.DIM}v{__version__} — cavity field vs quantized gravitational waves{_C.RESET}"


def _color() -> bool:
    return sys.stdout.isatty()


def _defaults(args) -> dict:
    return {"frame": args.frame, "convention": args.convention, "variant": args.variant}


def _config_error(e: GravicavError) -> int:
    print(f"  {_C.RED}Configuration error{_C.RESET} [{e.code}] {e.message}", file=sys.stderr)
    for issue in getattr(e, "issues", []) or []:
        print(f"    {issue}", file=sys.stderr)
    return EXIT_CONFIG


def _resolve_budget(args) -> int:
    """--budget, else GRAVICAV_BUDGET, else the default; a bad environment value is a config error."""
    from .oracle import default_budget

    return args.budget if args.budget is not None else default_budget()


def _finish(report, output: Optional[str]) -> int:
    print(report.to_terminal(color=_color()))
    if output:
        report.save_json(output)
        print(f"\n  {_C.DIM}Report saved to {output}{_C.RESET}")
    return report.exit_code


# ─── simulate ────────────────────────────────────────────────

def cmd_simulate(args) -> int:
    """Run every scenario of a configuration file."""
    print(_banner())

    from .scenarios import SuiteReport, load_config, run_all

    try:
        scenarios = load_config(args.config, _defaults(args))
        budget = _resolve_budget(args)
    except ConfigError as e:
        return _config_error(e)
    except OSError as e:
        print(f"  {_C.RED}Cannot read {args.config}: {e.strerror}{_C.RESET}", file=sys.stderr)
        return EXIT_CONFIG

    if not scenarios:
        print(f"  {_C.YELLOW}No scenarios in {args.config}.{_C.RESET}")
        return EXIT_OK
    print(f"  Running {_C.BOLD}{len(scenarios)}{_C.RESET} scenario(s) into {args.output_dir}")
    summaries = run_all(scenarios, args.output_dir, budget=budget, jobs=args.jobs)
    return _finish(SuiteReport(summaries, title=f"simulate {os.path.basename(args.config)}"), args.report)


# ─── sweep-variance ──────────────────────────────────────────

def cmd_sweep_variance(args) -> int:
    """Vacuum variance over F ∈ [0, fmax]."""
    print(_banner())

    from .scenarios import Scenario, ScenarioKind, SuiteReport, TimeGrid, run

    if args.samples < 2 or args.fmax <= 0 or args.alpha < 0 or not 0 < args.D <= 1:
        return _config_error(ConfigError("need samples >= 2, fmax > 0, alpha >= 0 and 0 < D <= 1"))
    scenario = Scenario(
        name="sweep_variance",
        kind=ScenarioKind.VACUUM_SQUEEZING,
        params={"alpha": args.alpha, "D": args.D, "lnRatio": 62.0, "omega0": None},
        time_grid=TimeGrid(0.0, args.fmax, args.samples),
        output=args.output,
        convention=PhaseConvention(args.convention),
    )

    summary = run(scenario)
    for path in summary.outputs:
        print(f"  {_C.DIM}wrote {path}{_C.RESET}")
    return _finish(SuiteReport([summary], title="sweep-variance"), None)


# ─── verify ──────────────────────────────────────────────────

def cmd_verify(args) -> int:
    """Brute-force oracle checks only."""
    print(_banner())

    from .scenarios import SuiteReport, acceptance

    try:
        summaries = acceptance(
            max_workers=args.jobs,
            budget=_resolve_budget(args),
            only=VERIFY_CRITERIA,
        )
    except ConfigError as e:
        return _config_error(e)
    return _finish(SuiteReport(summaries, title="verify"), args.report)


# ─── acceptance ──────────────────────────────────────────────

def cmd_acceptance(args) -> int:
    """All acceptance criteria."""
    print(_banner())

    from .scenarios import SuiteReport, acceptance

    try:
        summaries = acceptance(
            convention=args.convention,
            variant=args.variant,
            max_workers=args.jobs,
            budget=_resolve_budget(args),
        )
    except ConfigError as e:
        return _config_error(e)
    return _finish(SuiteReport(summaries, title="acceptance"), args.report)


# ─── main ────────────────────────────────────────────────────

def _budget(raw: str) -> int:
    value = int(raw)
    if value < 4:
        raise argparse.ArgumentTypeError("budget must be >= 4")
    return value


def build_parser() -> argparse.ArgumentParser:
    # each subcommand takes only the model options it uses
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    frame = argparse.ArgumentParser(add_help=False)
    frame.add_argument("--frame", choices=[f.value for f in Frame], default=Frame.ROTATING.value)
    convention = argparse.ArgumentParser(add_help=False)
    convention.add_argument(
        "--convention", choices=[c.value for c in PhaseConvention], default=PhaseConvention.ORACLE_CORRECTED.value
    )
    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument(
        "--variant", choices=[v.value for v in DisplacementVariant], default=DisplacementVariant.EXACT_IDENTITY.value
    )

    parser = argparse.ArgumentParser(
        prog="gravicav",
        description="gravicav — cavity field response to quantized gravitational waves",
    )
    parser.add_argument("--version", action="version", version=f"gravicav {__version__}")
    sub = parser.add_subparsers(dest="command")

    # simulate
    p_sim = sub.add_parser("simulate", parents=[common, frame, convention, variant], help="Run scenarios from a JSON configuration")
    p_sim.add_argument("config", help="Scenario configuration (JSON)")
    p_sim.add_argument("--output-dir", "-d", default=".", help="Directory for CSV/JSON outputs")
    p_sim.add_argument("--jobs", "-j", type=int, default=1, help="Scenarios run in parallel")
    p_sim.add_argument("--budget", type=_budget, help="Dimension budget (overrides GRAVICAV_BUDGET)")
    p_sim.add_argument("--report", help="Save the suite report as JSON")
    p_sim.set_defaults(func=cmd_simulate)

    # sweep-variance
    p_sweep = sub.add_parser("sweep-variance", parents=[common, convention], help="Vacuum variance scan")
    p_sweep.add_argument("--alpha", type=float, default=1.0)
    p_sweep.add_argument("--fmax", type=float, default=12.566370614359172)
    p_sweep.add_argument("--samples", type=int, default=2001)
    p_sweep.add_argument("--D", type=float, default=1.0, help="Damping factor in (0, 1]")
    p_sweep.add_argument("--output", "-o", default="sweep_variance", help="Output path prefix")
    p_sweep.set_defaults(func=cmd_sweep_variance)

    # verify
    p_verify = sub.add_parser("verify", parents=[common], help="Brute-force oracle checks")
    p_verify.add_argument("--budget", type=_budget, help="Dimension budget (overrides GRAVICAV_BUDGET)")
    p_verify.add_argument("--jobs", "-j", type=int, default=None, help="Worker threads per time grid")
    p_verify.add_argument("--report", help="Save the suite report as JSON")
    p_verify.set_defaults(func=cmd_verify)

    # acceptance
    p_acc = sub.add_parser("acceptance", parents=[common, convention, variant], help="Full acceptance suite")
    p_acc.add_argument("--budget", type=_budget, help="Dimension budget (overrides GRAVICAV_BUDGET)")
    p_acc.add_argument("--jobs", "-j", type=int, default=None, help="Worker threads per time grid")
    p_acc.add_argument("--report", "-o", help="Save the suite report as JSON")
    p_acc.set_defaults(func=cmd_acceptance)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
