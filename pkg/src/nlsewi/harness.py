"""Experiment configuration, presets, convergence sweeps, and report emission.

A convergence experiment fixes one problem (grid, potential, nonlinearity,
initial datum, final time) and sweeps the time step over a strictly decreasing
list, measuring L^2 and H^1 errors at the final time against an exact or
fine-step reference. The presets reproduce the published experiment family:

========  ===========================================================
Delta1D   1D attractive delta comb, soliton datum, exact reference
Smooth1D  1D Gaussian well (bounded potential), fine-step reference
Power2D   2D power-law symbol (gamma = 1/2), linear, fine reference
Power3D   3D power-law symbols (gamma = 3/2 and 5/4), cubic focusing
========  ===========================================================

Each 3D preset defaults to a desk-scale grid (n = 64 per axis); the published
full-scale grids are available via ``scale=1`` or the ``*_full`` preset names.
"""

from __future__ import annotations

import configparser
import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .analysis import ErrorSample, OrderFit, fit_order, lp_norm, sobolev_norm
from .errors import ConfigurationError, InstabilityError
from .filters import SHARP, SMOOTH, CutoffProfile, cutoff_frequency
from .integrator import (
    ExactSoliton,
    FineStep,
    SchrodingerProblem,
    reference_solution,
    run,
    soliton_initial,
)
from .potentials import (
    PotentialKind,
    PotentialSpec,
    Rate,
    gaussian_well,
    predicted_order,
    regularity_loss,
    sigma_window,
)
from .spectral import Field, Space, SpectralGrid, make_grid

__all__ = [
    "AcceptanceBand",
    "ExperimentConfig",
    "ErrorReport",
    "preset",
    "preset_names",
    "default_sweep",
    "run_convergence",
    "export_report",
    "write_snapshot",
    "read_snapshot",
    "load_config",
]


@dataclass(frozen=True)
class AcceptanceBand:
    """Pass/fail bands for the fitted orders.

    ``l2_min``/``l2_max`` bracket the fitted L^2 order; when ``h1_gap_center``
    is set, the gap (L^2 order - H^1 order) must match it within
    ``h1_gap_tol``.
    """

    l2_min: float | None = None
    l2_max: float | None = None
    h1_gap_center: float | None = None
    h1_gap_tol: float = 0.15


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one convergence experiment."""

    name: str
    dim: int
    half_width: float
    n: int
    potential: PotentialSpec
    beta: float
    sigma: float
    initial: str  # "soliton" or "gaussian"
    final_time: float
    taus: tuple[float, ...]
    profile: str = "sharp"
    reference: ExactSoliton | FineStep = ExactSoliton()
    seed: int = 0
    threads: int = 1
    nominal_p: float | None = None
    band: AcceptanceBand | None = None
    n_full: int | None = None
    spacetime_pairs: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        if self.initial not in ("soliton", "gaussian"):
            raise ConfigurationError(f"unknown initial datum {self.initial!r}")
        if self.profile not in ("sharp", "smooth"):
            raise ConfigurationError(f"unknown filter profile {self.profile!r}")
        if self.threads < 1:
            raise ConfigurationError("threads must be >= 1")
        if not self.taus:
            raise ConfigurationError("tau list must not be empty")
        if any(t2 >= t1 for t1, t2 in zip(self.taus, self.taus[1:])):
            raise ConfigurationError("tau list must be strictly decreasing")
        for tau in self.taus:
            if tau <= 0 or abs(self.final_time / tau - round(self.final_time / tau)) >= 1e-9:
                raise ConfigurationError(f"tau={tau} does not divide final_time={self.final_time}")

    @property
    def cutoff_profile(self) -> CutoffProfile:
        return SHARP if self.profile == "sharp" else SMOOTH

    def build_grid(self) -> SpectralGrid:
        return make_grid(self.dim, self.half_width, self.n)

    def build_initial(self, grid: SpectralGrid) -> Field:
        if self.initial == "soliton":
            return soliton_initial(grid)
        meshes = grid.coordinate_meshes()
        r2 = sum(m**2 for m in meshes)
        return Field(grid, np.broadcast_to(np.exp(-r2 / 2.0), grid.shape), Space.PHYSICAL)

    def build_problem(self) -> SchrodingerProblem:
        grid = self.build_grid()
        return SchrodingerProblem(
            grid=grid,
            potential=self.potential.build(grid),
            beta=self.beta,
            initial=self.build_initial(grid),
            final_time=self.final_time,
            sigma=self.sigma,
        )


def default_sweep(
    final_time: float, nyquist: float, min_points: int = 5, max_points: int = 12
) -> tuple[float, ...]:
    """Dyadic sweep ``T/2, T/4, ...`` kept inside the grid-resolved filter regime.

    Steps are included while the filter's full transition band (which reaches
    twice the cutoff for the smooth profile) stays at or below the per-axis
    Nyquist frequency; if that admits fewer than ``min_points`` steps, the
    sweep is extended toward finer tau anyway (those samples drift into the
    identity-filter regime, which the report flags per sample).
    """
    taus = []
    k = 1
    while k <= max_points:
        tau = final_time * 2.0**-k
        if 2.0 * cutoff_frequency(tau) > nyquist and len(taus) >= min_points:
            break
        taus.append(tau)
        k += 1
    return tuple(taus)


_GAUSSIAN_WELL = gaussian_well()


def _base_presets() -> dict[str, dict]:
    return {
        "delta1d": dict(
            dim=1,
            half_width=16.0,
            n_full=2**14,  # h = 2^-9 on (-16, 16)
            potential=PotentialSpec(
                PotentialKind.DELTA_SERIES_1D, n_ref=2**16, aliasing="restrict"
            ),
            beta=-1.0,
            sigma=1.0,
            initial="soliton",
            final_time=1.0,
            reference=ExactSoliton(),
            nominal_p=1.0,
            band=AcceptanceBand(l2_min=0.40, l2_max=0.60, h1_gap_center=0.5, h1_gap_tol=0.15),
            taus=tuple(2.0**-k for k in range(4, 11)),
            spacetime_pairs=((math.inf, 2.0), (4.0, math.inf)),
            default_scale=1,
        ),
        "smooth1d": dict(
            dim=1,
            half_width=16.0,
            n_full=1024,
            potential=PotentialSpec(PotentialKind.SMOOTH_BOUNDED, sample_fn=_GAUSSIAN_WELL),
            beta=-1.0,
            sigma=1.0,
            initial="gaussian",
            final_time=1.0,
            reference=FineStep(2.0**-15),
            nominal_p=math.inf,
            band=AcceptanceBand(l2_min=0.9),
            taus=tuple(2.0**-k for k in range(4, 11)),
            default_scale=1,
        ),
        "power2d": dict(
            dim=2,
            half_width=8.0,
            n_full=2**12,  # h = 2^-8 on (-8, 8)^2
            potential=PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=0.5),
            beta=0.0,
            sigma=1.0,
            initial="gaussian",
            final_time=0.25,
            reference=FineStep(1e-5),
            nominal_p=4.0 / 3.0,
            band=AcceptanceBand(l2_min=0.5, l2_max=0.8),
            taus=None,  # rule-based, depends on the effective grid
            default_scale=1,
        ),
        "power3d_l2": dict(
            dim=3,
            half_width=8.0,
            n_full=2**9,  # h = 2^-5 on (-8, 8)^3
            potential=PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=1.5),
            beta=1.0,
            sigma=1.0,
            initial="gaussian",
            final_time=0.125,
            reference=FineStep(1e-4),
            nominal_p=2.0,
            band=AcceptanceBand(l2_min=0.85, l2_max=1.15),
            taus=None,
            default_scale=8,  # desk-scale n = 64 by default
        ),
        "power3d_l127": dict(
            dim=3,
            half_width=8.0,
            n_full=2**9,
            potential=PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=1.25),
            beta=1.0,
            sigma=1.0,
            initial="gaussian",
            final_time=0.125,
            reference=FineStep(1e-4),
            nominal_p=12.0 / 7.0,
            band=AcceptanceBand(l2_min=0.55),
            taus=None,
            default_scale=8,
        ),
    }


_ALIASES = {
    "power2d_scaled": ("power2d", 32),  # n = 128
    "power3d_l2_full": ("power3d_l2", 1),
    "power3d_l127_full": ("power3d_l127", 1),
}


def preset_names() -> list[str]:
    return sorted(list(_base_presets()) + list(_ALIASES))


def preset(name: str, scale: int | None = None, threads: int = 1, seed: int = 0) -> ExperimentConfig:
    """Resolve a named preset; ``scale`` divides the per-axis point count."""
    key = name.lower()
    if key in _ALIASES:
        base_key, base_scale = _ALIASES[key]
        return preset(base_key, scale if scale is not None else base_scale, threads, seed)
    table = _base_presets()
    if key not in table:
        raise ConfigurationError(f"unknown preset {name!r}; known: {', '.join(preset_names())}")
    spec = table[key]
    if scale is None:
        scale = spec["default_scale"]
    if scale < 1 or spec["n_full"] % scale:
        raise ConfigurationError(f"scale must divide n={spec['n_full']}, got {scale}")
    n = spec["n_full"] // scale
    taus = spec["taus"]
    if taus is None:
        nyq = math.pi * (n // 2) / spec["half_width"]
        taus = default_sweep(spec["final_time"], nyq)
    return ExperimentConfig(
        name=key,
        dim=spec["dim"],
        half_width=spec["half_width"],
        n=n,
        potential=spec["potential"],
        beta=spec["beta"],
        sigma=spec["sigma"],
        initial=spec["initial"],
        final_time=spec["final_time"],
        taus=tuple(taus),
        reference=spec["reference"],
        nominal_p=spec["nominal_p"],
        band=spec["band"],
        n_full=spec["n_full"],
        spacetime_pairs=spec.get("spacetime_pairs", ()),
        threads=threads,
        seed=seed,
    )


@dataclass
class ErrorReport:
    """Outcome of a convergence sweep: error table, fits, predictions, verdicts."""

    config: ExperimentConfig
    samples: list[ErrorSample]
    failures: list[tuple[float, str]]
    fit_l2: OrderFit | None
    fit_h1: OrderFit | None
    alpha: Rate | None
    predicted: Rate | None
    verdicts: dict[str, bool]
    notes: list[str]
    wall_seconds: float

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())


def _rate_str(rate: Rate | None, loss: bool = False) -> str:
    if rate is None:
        return "n/a"
    mark = ("+" if loss else "-") if rate.strict else ""
    return f"{rate.value:g}{mark}"


class _SpacetimeAccumulator:
    """Streams per-step error norms against the exact solution during a run."""

    def __init__(self, pairs, reference_base: Field, tau: float):
        self.pairs = pairs
        self.base = reference_base.values
        self.grid = reference_base.grid
        self.tau = tau
        self.sums = {pair: 0.0 for pair in pairs}
        self.sups = {pair: 0.0 for pair in pairs}

    def __call__(self, state):
        err = Field(
            self.grid, state.psi - np.exp(1j * state.time) * self.base, Space.PHYSICAL
        )
        for q, r in self.pairs:
            norm = lp_norm(err, r)
            if math.isinf(q):
                self.sups[(q, r)] = max(self.sups[(q, r)], norm)
            else:
                self.sums[(q, r)] += norm**q

    def results(self) -> dict:
        out = {}
        for q, r in self.pairs:
            if math.isinf(q):
                out[(q, r)] = self.sups[(q, r)]
            else:
                out[(q, r)] = (self.tau * self.sums[(q, r)]) ** (1.0 / q)
        return out


def _measure_one(
    config: ExperimentConfig,
    problem: SchrodingerProblem,
    tau: float,
    reference: Field,
) -> ErrorSample:
    profile = config.cutoff_profile
    exact = isinstance(config.reference, ExactSoliton)
    acc = None
    if config.spacetime_pairs and exact:
        acc = _SpacetimeAccumulator(config.spacetime_pairs, soliton_initial(problem.grid), tau)
    traj = run(problem, tau, profile, on_step=acc)
    diff = traj.final - reference
    identity = cutoff_frequency(tau) >= problem.grid.max_frequency
    return ErrorSample(
        tau=tau,
        e_l2=lp_norm(diff, 2),
        e_h1=sobolev_norm(diff, 1),
        extras=acc.results() if acc is not None else {},
        filter_identity=identity,
    )


def run_convergence(config: ExperimentConfig) -> ErrorReport:
    """Run the sweep, fit orders, and compare against the configured bands."""
    start = time.perf_counter()
    notes: list[str] = []
    problem = config.build_problem()

    if config.nominal_p is not None and config.beta != 0.0:
        lo, hi = sigma_window(config.nominal_p, config.dim)
        notes.append(
            f"nonlinearity window for p={config.nominal_p:g}, d={config.dim}: "
            f"sigma in ({lo:g}, {hi:g}); sigma={config.sigma:g}"
        )
        if not (lo < config.sigma < hi):
            warnings.warn(
                f"sigma={config.sigma} lies outside the admissible window ({lo:g}, {hi:g}) "
                f"for p={config.nominal_p:g}, d={config.dim}; error bounds are not guaranteed",
                stacklevel=2,
            )

    reference = reference_solution(
        problem, [config.final_time], config.reference, config.cutoff_profile
    )[0]

    def worker(tau: float):
        try:
            return _measure_one(config, problem, tau, reference)
        except InstabilityError as exc:
            return (tau, str(exc))

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            outcomes = list(pool.map(worker, config.taus))
    else:
        outcomes = [worker(tau) for tau in config.taus]

    samples = [o for o in outcomes if isinstance(o, ErrorSample)]
    failures = [o for o in outcomes if not isinstance(o, ErrorSample)]
    for tau, message in failures:
        notes.append(f"tau={tau:g} unstable and excluded from the fit: {message}")
    if not samples:
        raise InstabilityError(0, "every tau in the sweep was unstable")
    for s in samples:
        if s.filter_identity:
            notes.append(
                f"tau={s.tau:g}: cutoff {cutoff_frequency(s.tau):.3g} exceeds the grid's "
                "max frequency; the filter is the identity and spatial error saturates"
            )

    fit_l2 = fit_h1 = None
    if len(samples) >= 3:
        fit_l2 = fit_order(samples, "l2")
        fit_h1 = fit_order(samples, "h1")

    alpha = predicted = None
    if config.nominal_p is not None:
        alpha = regularity_loss(config.nominal_p, config.dim)
        predicted = predicted_order(config.nominal_p, config.dim)

    verdicts: dict[str, bool] = {}
    if config.band is not None and fit_l2 is not None:
        band = config.band
        if band.l2_min is not None or band.l2_max is not None:
            lo = -math.inf if band.l2_min is None else band.l2_min
            hi = math.inf if band.l2_max is None else band.l2_max
            verdicts["l2_order_in_band"] = lo <= fit_l2.fitted_order <= hi
        if band.h1_gap_center is not None and fit_h1 is not None:
            gap = fit_l2.fitted_order - fit_h1.fitted_order
            verdicts["h1_gap_in_band"] = abs(gap - band.h1_gap_center) <= band.h1_gap_tol

    return ErrorReport(
        config=config,
        samples=sorted(samples, key=lambda s: -s.tau),
        failures=failures,
        fit_l2=fit_l2,
        fit_h1=fit_h1,
        alpha=alpha,
        predicted=predicted,
        verdicts=verdicts,
        notes=notes,
        wall_seconds=time.perf_counter() - start,
    )


def _format_report_text(report: ErrorReport) -> str:
    cfg = report.config
    lines = [
        f"experiment: {cfg.name}",
        f"dim={cfg.dim} L={cfg.half_width:g} n={cfg.n} (full-scale n={cfg.n_full})",
        f"potential={cfg.potential.kind.value} beta={cfg.beta:g} sigma={cfg.sigma:g} "
        f"initial={cfg.initial} T={cfg.final_time:g}",
        f"profile={cfg.profile} reference={report.config.reference} "
        f"threads={cfg.threads} seed={cfg.seed}",
        "",
        "tau, e_l2, e_h1, filter_identity",
    ]
    for s in report.samples:
        lines.append(f"{s.tau:.12e}  {s.e_l2:.12e}  {s.e_h1:.12e}  {s.filter_identity}")
        for (q, r), value in sorted(s.extras.items()):
            lines.append(f"    spacetime l^{q:g} L^{r:g}: {value:.12e}")
    lines.append("")
    for label, fit in (("L2", report.fit_l2), ("H1", report.fit_h1)):
        if fit is None:
            lines.append(f"fitted {label} order: n/a")
        else:
            lines.append(
                f"fitted {label} order: {fit.fitted_order:.4f} "
                f"(intercept {fit.intercept:.4f}, residual {fit.residual:.4f}, "
                f"dropped {[f'{s.tau:g}' for s in fit.dropped]})"
            )
    lines.append(f"regularity loss alpha: {_rate_str(report.alpha, loss=True)}")
    lines.append(f"predicted L2 order: {_rate_str(report.predicted)}")
    for name, ok in report.verdicts.items():
        lines.append(f"verdict {name}: {'PASS' if ok else 'FAIL'}")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"wall seconds: {report.wall_seconds:.3f}")
    return "\n".join(lines) + "\n"


def export_report(report: ErrorReport, out_dir: str | Path) -> dict[str, Path]:
    """Write errors.csv and report.txt; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "errors.csv"
    rows = ["tau,e_l2,e_h1"]
    for s in report.samples:
        rows.append(f"{s.tau:.12e},{s.e_l2:.12e},{s.e_h1:.12e}")
    csv_path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    txt_path = out / "report.txt"
    txt_path.write_text(_format_report_text(report), encoding="utf-8")
    return {"errors": csv_path, "report": txt_path}


_HEADER_BYTES = 64


def write_snapshot(path: str | Path, f: Field, time_point: float = 0.0) -> Path:
    """Raw field snapshot: 64-byte text header then little-endian complex64 pairs."""
    path = Path(path)
    space = "physical" if f.space is Space.PHYSICAL else "fourier"
    header = (
        f"dim={f.grid.dim},n={f.grid.n},L={f.grid.half_width!r},"
        f"space={space},time={time_point!r}"
    )
    raw = header.encode("ascii")
    if len(raw) > _HEADER_BYTES:
        raise ConfigurationError(f"snapshot header too long ({len(raw)} bytes)")
    payload = np.ascontiguousarray(f.values, dtype="<c8").tobytes()
    path.write_bytes(raw.ljust(_HEADER_BYTES) + payload)
    return path


def read_snapshot(path: str | Path) -> tuple[Field, float]:
    """Inverse of :func:`write_snapshot`; returns the field and its time stamp."""
    blob = Path(path).read_bytes()
    header = blob[:_HEADER_BYTES].decode("ascii").strip()
    fields = dict(item.split("=", 1) for item in header.split(","))
    grid = make_grid(int(fields["dim"]), float(fields["L"]), int(fields["n"]))
    space = Space.PHYSICAL if fields["space"] == "physical" else Space.FOURIER
    values = np.frombuffer(blob[_HEADER_BYTES:], dtype="<c8", count=grid.point_count)
    return Field(grid, values.reshape(grid.shape), space), float(fields["time"])


_PROBLEM_KEYS = {
    "preset",
    "dim",
    "half_width",
    "n",
    "potential",
    "n_ref",
    "gamma",
    "potential_sign",
    "aliasing",
    "beta",
    "sigma",
    "initial",
    "final_time",
    "nominal_p",
}
_SWEEP_KEYS = {"taus", "profile", "reference", "tau_ref"}
_OUTPUT_KEYS = {"dir", "seed", "threads", "scale"}


def _parse_potential(kind: str, opts: dict) -> PotentialSpec:
    sign = float(opts.get("potential_sign", -1.0))
    if kind == "none":
        return PotentialSpec(PotentialKind.NONE)
    if kind == "delta":
        return PotentialSpec(
            PotentialKind.DELTA_SERIES_1D,
            n_ref=int(opts.get("n_ref", 2**16)),
            sign=sign,
            aliasing=opts.get("aliasing", "fold"),
        )
    if kind == "power":
        if "gamma" not in opts:
            raise ConfigurationError("potential=power requires gamma")
        return PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=float(opts["gamma"]), sign=sign)
    if kind == "gaussian_well":
        return PotentialSpec(PotentialKind.SMOOTH_BOUNDED, sample_fn=_GAUSSIAN_WELL, sign=sign)
    raise ConfigurationError(f"unknown potential kind {kind!r}")


def load_config(path: str | Path) -> tuple[ExperimentConfig, str | None]:
    """Parse the flat key-value experiment file; returns (config, output dir).

    Sections are ``[problem]``, ``[sweep]``, and ``[output]``; unknown sections
    or keys are rejected. A ``preset`` key seeds the configuration, and any
    other keys present override the preset's values.
    """
    parser = configparser.ConfigParser()
    parser.optionxform = str
    read = parser.read(path, encoding="utf-8")
    if not read:
        raise ConfigurationError(f"cannot read config file {path}")
    known = {"problem": _PROBLEM_KEYS, "sweep": _SWEEP_KEYS, "output": _OUTPUT_KEYS}
    for section in parser.sections():
        if section not in known:
            raise ConfigurationError(f"unknown config section [{section}]")
        for key in parser[section]:
            if key not in known[section]:
                raise ConfigurationError(f"unknown key {key!r} in section [{section}]")

    problem = dict(parser["problem"]) if parser.has_section("problem") else {}
    sweep = dict(parser["sweep"]) if parser.has_section("sweep") else {}
    output = dict(parser["output"]) if parser.has_section("output") else {}

    threads = int(output.get("threads", 1))
    seed = int(output.get("seed", 0))
    scale = int(output["scale"]) if "scale" in output else None

    if "preset" in problem:
        config = preset(problem["preset"], scale=scale, threads=threads, seed=seed)
    else:
        required = {"dim", "half_width", "n", "potential", "beta", "final_time"}
        missing = required - set(problem)
        if missing:
            raise ConfigurationError(f"config lacks required problem keys: {sorted(missing)}")
        n = int(problem["n"])
        if scale is not None:
            if scale < 1 or n % scale:
                raise ConfigurationError(f"scale must divide n={n}, got {scale}")
            n //= scale
        taus_text = sweep.get("taus")
        if not taus_text:
            raise ConfigurationError("custom configs must list sweep taus explicitly")
        reference: ExactSoliton | FineStep
        if sweep.get("reference", "exact") == "fine":
            reference = FineStep(float(sweep.get("tau_ref", 1e-5)))
        else:
            reference = ExactSoliton()
        config = ExperimentConfig(
            name=Path(path).stem,
            dim=int(problem["dim"]),
            half_width=float(problem["half_width"]),
            n=n,
            potential=_parse_potential(problem["potential"], problem),
            beta=float(problem["beta"]),
            sigma=float(problem.get("sigma", 1.0)),
            initial=problem.get("initial", "gaussian"),
            final_time=float(problem["final_time"]),
            taus=tuple(float(v) for v in taus_text.split(",")),
            profile=sweep.get("profile", "sharp"),
            reference=reference,
            threads=threads,
            seed=seed,
            nominal_p=float(problem["nominal_p"]) if "nominal_p" in problem else None,
            n_full=int(problem["n"]),
        )
        return config, output.get("dir")

    # preset seeded: apply overrides
    overrides = {}
    if "beta" in problem:
        overrides["beta"] = float(problem["beta"])
    if "sigma" in problem:
        overrides["sigma"] = float(problem["sigma"])
    if "initial" in problem:
        overrides["initial"] = problem["initial"]
    if "final_time" in problem:
        overrides["final_time"] = float(problem["final_time"])
    if "nominal_p" in problem:
        overrides["nominal_p"] = float(problem["nominal_p"])
    if "potential" in problem:
        overrides["potential"] = _parse_potential(problem["potential"], problem)
    if "taus" in sweep:
        overrides["taus"] = tuple(float(v) for v in sweep["taus"].split(","))
    if "profile" in sweep:
        overrides["profile"] = sweep["profile"]
    if "reference" in sweep:
        if sweep["reference"] == "fine":
            overrides["reference"] = FineStep(float(sweep.get("tau_ref", 1e-5)))
        else:
            overrides["reference"] = ExactSoliton()
    elif "tau_ref" in sweep:
        overrides["reference"] = FineStep(float(sweep["tau_ref"]))
    if overrides:
        config = replace(config, **overrides)
    return config, output.get("dir")
