"""Command-line entry point.

Subcommands:

* ``run``       one simulation at a single tau; writes a final-state snapshot
* ``converge``  full tau sweep; writes errors.csv and report.txt
* ``selftest``  operator-identity and bound checks (seconds)

Exit codes: 0 success, 1 acceptance-band or selftest failure, 2 configuration
error, 3 numerical instability.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import lp_norm, sobolev_norm
from .errors import ConfigurationError, InstabilityError, UsageError
from .harness import (
    ExperimentConfig,
    export_report,
    load_config,
    preset,
    preset_names,
    run_convergence,
    write_snapshot,
)
from .integrator import run as run_trajectory
from .selftest import run_selftest

EXIT_OK = 0
EXIT_BAND_FAILURE = 1
EXIT_CONFIG = 2
EXIT_UNSTABLE = 3


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--preset", help=f"named experiment; one of: {', '.join(preset_names())}")
    p.add_argument("--config", help="path to a key-value experiment file")
    p.add_argument("--out", help="output directory")
    p.add_argument("--scale", type=int, help="divide the per-axis point count by this factor")
    p.add_argument("--threads", type=int, default=1, help="worker threads for the sweep")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized diagnostics")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlsewi", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="single simulation at one tau")
    _add_common(p_run)
    p_run.add_argument("--tau", type=float, help="time step (defaults to the sweep's coarsest)")

    p_conv = sub.add_parser("converge", help="tau sweep with order fit and report")
    _add_common(p_conv)
    p_conv.add_argument("--tau", help="comma-separated decreasing tau list overriding the default")

    p_self = sub.add_parser("selftest", help="fast structural checks")
    p_self.add_argument("--seed", type=int, default=0)

    return parser


def _resolve_config(args) -> tuple[ExperimentConfig, str | None]:
    if args.config:
        config, out_dir = load_config(args.config)
        from dataclasses import replace

        updates = {}
        if args.scale is not None:
            raise ConfigurationError("--scale with --config: set scale in the [output] section")
        if args.threads != 1:
            updates["threads"] = args.threads
        if args.seed != 0:
            updates["seed"] = args.seed
        if updates:
            config = replace(config, **updates)
        return config, args.out or out_dir
    if args.preset:
        config = preset(args.preset, scale=args.scale, threads=args.threads, seed=args.seed)
        return config, args.out
    raise ConfigurationError("either --preset or --config is required")


def _cmd_run(args) -> int:
    config, out_dir = _resolve_config(args)
    tau = args.tau if args.tau is not None else config.taus[0]
    problem = config.build_problem()
    traj = run_trajectory(problem, tau, config.cutoff_profile)
    l2 = lp_norm(traj.final, 2)
    h1 = sobolev_norm(traj.final, 1)
    print(f"{config.name}: tau={tau:g} steps={traj.steps} |psi(T)|_L2={l2:.12e} |psi(T)|_H1={h1:.12e}")
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        snap = write_snapshot(path / "final.bin", traj.final, config.final_time)
        print(f"wrote {snap}")
    return EXIT_OK


def _cmd_converge(args) -> int:
    config, out_dir = _resolve_config(args)
    if args.tau:
        from dataclasses import replace

        taus = tuple(float(v) for v in args.tau.split(","))
        config = replace(config, taus=taus)
    report = run_convergence(config)
    for s in report.samples:
        print(f"tau={s.tau:.6e}  e_l2={s.e_l2:.6e}  e_h1={s.e_h1:.6e}")
    if report.fit_l2 is not None:
        print(f"fitted L2 order {report.fit_l2.fitted_order:.4f}, H1 order "
              f"{report.fit_h1.fitted_order:.4f}")
    for name, ok in report.verdicts.items():
        print(f"verdict {name}: {'PASS' if ok else 'FAIL'}")
    if out_dir:
        paths = export_report(report, out_dir)
        print(f"wrote {paths['errors']} and {paths['report']}")
    return EXIT_OK if report.passed else EXIT_BAND_FAILURE


def _cmd_selftest(args) -> int:
    report = run_selftest(seed=args.seed)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_BAND_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "converge":
            return _cmd_converge(args)
        return _cmd_selftest(args)
    except (ConfigurationError, UsageError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InstabilityError as exc:
        print(f"numerical instability: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE


if __name__ == "__main__":
    sys.exit(main())
