"""Command-line front end: scenario configs, batch suites, CSV emission.

A scenario is one solver run described by a flat YAML document (schema
below); suites are fixed families of scenarios matching the built-in
verification experiments. Every run writes per-time density CSVs, an
errors CSV when a closed-form reference applies, and a JSON manifest
that embeds the full effective config, so a finished run directory is
self-describing and can be re-executed byte-for-byte.

Config schema (schema_version 1, YAML mapping, unknown keys rejected)::

    schema_version: 1
    name: cauchy-demo        # file-name stem for outputs
    alpha: 1.0               # stability index, 0 < alpha < 2
    eps: 1.0                 # jump intensity, > 0
    d: 0.0                   # Gaussian diffusion coefficient, >= 0
    drift: zero              # zero | ou | double-well
    condition: natural       # natural | absorbing
    L: 50.0                  # natural: half width (>= 1)
    a: -1.0                  # absorbing: interval ends (symmetric)
    b: 1.0
    h: 0.001                 # grid spacing, must divide the half width
    initial: cauchy          # cauchy | gaussian-paper | gaussian | uniform
    t0: 0.01                 # cauchy seed time
    variance: 20.0           # gaussian variance
    center: 0.0              # gaussian / gaussian-paper center
    t_end: 0.2
    t_outputs: [0.05, 0.2]   # snapshot times (t_end included or not, your call)
    dt: null                 # optional fixed step; default is the composite bound
    safety: 0.5              # fraction of the step bound to use
    integrator: rk3          # rk3 | euler
    weno_delta: 1.0e-6
    mc:                      # optional particle cross-check
      n_paths: 100000
      dt: 0.01
      seed: 12345
      x0: 0.0
      grid_h: 0.25           # comparison histogram spacing
      grid_half: 10.0        # comparison window half width

Exit codes: 0 success, 1 configuration error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import yaml

from . import __version__
from .core import (
    Absorbing,
    AuxCondition,
    CauchySeed,
    DensityField,
    DriftField,
    GaussianNormalized,
    GaussianPaper,
    Grid,
    InitialProfile,
    LevyParams,
    Natural,
    Uniform,
    build_grid,
    sample_initial,
)
from .montecarlo import empirical_density, ensemble_to_csv, simulate_terminal
from .operators import corrected_diffusion, prepare
from .specfun import mp_threshold
from .stepper import StepControl, evolve, select_dt_composite
from .verify import (
    cauchy_exact,
    error_report,
    mass_sweep,
    refinement_table,
    richardson_refinement_table,
    tail_slope,
)

__all__ = [
    "ConfigError",
    "McSpec",
    "Scenario",
    "parse_scenario",
    "run",
    "main",
    "write_density_csv",
    "read_density_csv",
]

SCHEMA_VERSION = 1


class ConfigError(ValueError):
    """Scenario document failed validation; message names the field."""


def _fmt(x: float) -> str:
    # 17 significant digits round-trip float64 exactly
    return format(float(x), ".17g")


def _fmt_time(t: float) -> str:
    return format(float(t), "g")


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(f".{path.name}.tmp{os.getpid()}")
    tmp.write_text(text)
    os.replace(tmp, path)


def write_density_csv(path: str | Path, field: DensityField) -> None:
    """Emit the density schema: header ``x,p``, 17-significant-digit values."""
    lines = ["x,p"]
    x = field.grid.nodes
    v = field.values
    lines.extend(f"{_fmt(x[i])},{_fmt(v[i])}" for i in range(x.size))
    _atomic_write(Path(path), "\n".join(lines) + "\n")


def read_density_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """Parse a density CSV back into (x, p) arrays."""
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["x", "p"]:
            raise ValueError(f"unexpected density header {header!r} in {path}")
        rows = [(float(a), float(b)) for a, b in reader]
    x = np.array([r[0] for r in rows])
    p = np.array([r[1] for r in rows])
    return x, p


def _write_table_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[float]]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join("" if isinstance(v, float) and math.isnan(v) else _fmt(v) for v in row))
    _atomic_write(path, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Scenario documents


@dataclass(frozen=True)
class McSpec:
    n_paths: int
    dt: float
    seed: int
    x0: float = 0.0
    grid_h: float = 0.25
    grid_half: float = 10.0


@dataclass(frozen=True)
class Scenario:
    """Validated description of one solver run."""

    name: str
    alpha: float
    eps: float
    d: float
    drift: str
    condition: AuxCondition
    h: float
    initial: InitialProfile
    t_end: float
    t_outputs: tuple[float, ...]
    dt: float | None
    safety: float
    integrator: str
    weno_delta: float
    mc: McSpec | None

    def config_dict(self) -> dict:
        """Canonical mapping with every default made explicit; parsing this
        mapping again yields an identical scenario."""
        doc: dict = {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "alpha": self.alpha,
            "eps": self.eps,
            "d": self.d,
            "drift": self.drift,
        }
        if isinstance(self.condition, Natural):
            doc["condition"] = "natural"
            doc["L"] = self.condition.L
        else:
            doc["condition"] = "absorbing"
            doc["a"] = self.condition.a
            doc["b"] = self.condition.b
        doc["h"] = self.h
        if isinstance(self.initial, CauchySeed):
            doc["initial"] = "cauchy"
            doc["t0"] = self.initial.t0
        elif isinstance(self.initial, GaussianPaper):
            doc["initial"] = "gaussian-paper"
            doc["center"] = self.initial.center
        elif isinstance(self.initial, GaussianNormalized):
            doc["initial"] = "gaussian"
            doc["variance"] = self.initial.variance
            doc["center"] = self.initial.center
        else:
            doc["initial"] = "uniform"
        doc.update(
            {
                "t_end": self.t_end,
                "t_outputs": list(self.t_outputs),
                "dt": self.dt,
                "safety": self.safety,
                "integrator": self.integrator,
                "weno_delta": self.weno_delta,
            }
        )
        if self.mc is not None:
            doc["mc"] = {
                "n_paths": self.mc.n_paths,
                "dt": self.mc.dt,
                "seed": self.mc.seed,
                "x0": self.mc.x0,
                "grid_h": self.mc.grid_h,
                "grid_half": self.mc.grid_half,
            }
        return doc


def _expect(mapping: dict, key: str, kinds: tuple[type, ...], path: str, default=None, required=False):
    if key not in mapping or mapping[key] is None:
        if required:
            raise ConfigError(f"{path}{key}: required field is missing")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, kinds):
        names = "/".join(k.__name__ for k in kinds)
        raise ConfigError(f"{path}{key}: expected {names}, got {value!r}")
    return value


def _scenario_from_mapping(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ConfigError("top level: expected a mapping of scenario fields")
    known = {
        "schema_version", "name", "alpha", "eps", "d", "drift", "condition",
        "L", "a", "b", "h", "initial", "t0", "variance", "center", "t_end",
        "t_outputs", "dt", "safety", "integrator", "weno_delta", "mc",
    }
    for key in doc:
        if key not in known:
            raise ConfigError(f"{key}: unknown field")
    version = _expect(doc, "schema_version", (int,), "", required=True)
    if version != SCHEMA_VERSION:
        raise ConfigError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")

    name = _expect(doc, "name", (str,), "", required=True)
    if not name or any(c in name for c in "/\\ \t"):
        raise ConfigError(f"name: must be a nonempty token without spaces or slashes, got {name!r}")

    alpha = float(_expect(doc, "alpha", (int, float), "", required=True))
    if not 0.0 < alpha < 2.0:
        raise ConfigError(f"alpha: stability index must lie strictly in (0, 2), got {alpha!r}")
    eps = float(_expect(doc, "eps", (int, float), "", default=1.0))
    if not eps > 0.0:
        raise ConfigError(f"eps: jump intensity must be positive, got {eps!r}")
    d = float(_expect(doc, "d", (int, float), "", default=0.0))
    if d < 0.0:
        raise ConfigError(f"d: diffusion coefficient must be >= 0, got {d!r}")

    drift = _expect(doc, "drift", (str,), "", default="zero")
    if drift not in ("zero", "ou", "double-well"):
        raise ConfigError(f"drift: expected zero/ou/double-well, got {drift!r}")

    cond_kind = _expect(doc, "condition", (str,), "", required=True)
    condition: AuxCondition
    if cond_kind == "natural":
        L = float(_expect(doc, "L", (int, float), "", required=True))
        try:
            condition = Natural(L)
        except ValueError as exc:
            raise ConfigError(f"L: {exc}") from exc
    elif cond_kind == "absorbing":
        a = float(_expect(doc, "a", (int, float), "", default=-1.0))
        b = float(_expect(doc, "b", (int, float), "", default=1.0))
        try:
            condition = Absorbing(a, b)
        except ValueError as exc:
            raise ConfigError(f"a/b: {exc}") from exc
    else:
        raise ConfigError(f"condition: expected natural or absorbing, got {cond_kind!r}")

    h = float(_expect(doc, "h", (int, float), "", required=True))
    try:
        build_grid(condition, h)
    except ValueError as exc:
        raise ConfigError(f"h: {exc}") from exc

    init_kind = _expect(doc, "initial", (str,), "", required=True)
    initial: InitialProfile
    try:
        if init_kind == "cauchy":
            initial = CauchySeed(float(_expect(doc, "t0", (int, float), "", default=0.01)))
        elif init_kind == "gaussian-paper":
            initial = GaussianPaper(center=float(_expect(doc, "center", (int, float), "", default=0.0)))
        elif init_kind == "gaussian":
            initial = GaussianNormalized(
                variance=float(_expect(doc, "variance", (int, float), "", required=True)),
                center=float(_expect(doc, "center", (int, float), "", default=0.0)),
            )
        elif init_kind == "uniform":
            initial = Uniform()
        else:
            raise ConfigError(
                f"initial: expected cauchy/gaussian-paper/gaussian/uniform, got {init_kind!r}"
            )
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"initial: {exc}") from exc

    t_start = initial.t0 if isinstance(initial, CauchySeed) else 0.0
    t_end = float(_expect(doc, "t_end", (int, float), "", required=True))
    if not t_end >= t_start:
        raise ConfigError(f"t_end: must be >= the seed time {t_start!r}, got {t_end!r}")

    raw_outputs = doc.get("t_outputs")
    if raw_outputs is None:
        outputs = (t_end,)
    else:
        if not isinstance(raw_outputs, (list, tuple)) or not raw_outputs:
            raise ConfigError(f"t_outputs: expected a nonempty list of times, got {raw_outputs!r}")
        outputs = []
        for i, t in enumerate(raw_outputs):
            if isinstance(t, bool) or not isinstance(t, (int, float)):
                raise ConfigError(f"t_outputs[{i}]: expected a number, got {t!r}")
            t = float(t)
            if t < t_start or t > t_end:
                raise ConfigError(
                    f"t_outputs[{i}]: time {t!r} outside [{t_start!r}, {t_end!r}]"
                )
            outputs.append(t)
        outputs = tuple(sorted(set(outputs)))

    dt = doc.get("dt")
    if dt is not None:
        dt = float(_expect(doc, "dt", (int, float), ""))
        if not dt > 0.0:
            raise ConfigError(f"dt: must be positive, got {dt!r}")

    safety = float(_expect(doc, "safety", (int, float), "", default=0.5))
    if not 0.0 < safety <= 1.0:
        raise ConfigError(f"safety: must lie in (0, 1], got {safety!r}")

    integrator = _expect(doc, "integrator", (str,), "", default="rk3")
    if integrator not in ("rk3", "euler"):
        raise ConfigError(f"integrator: expected rk3 or euler, got {integrator!r}")

    weno_delta = float(_expect(doc, "weno_delta", (int, float), "", default=1e-6))
    if not weno_delta > 0.0:
        raise ConfigError(f"weno_delta: must be positive, got {weno_delta!r}")

    mc_doc = doc.get("mc")
    mc = None
    if mc_doc is not None:
        if not isinstance(mc_doc, dict):
            raise ConfigError(f"mc: expected a mapping, got {mc_doc!r}")
        for key in mc_doc:
            if key not in {"n_paths", "dt", "seed", "x0", "grid_h", "grid_half"}:
                raise ConfigError(f"mc.{key}: unknown field")
        n_paths = _expect(mc_doc, "n_paths", (int,), "mc.", required=True)
        if n_paths < 1:
            raise ConfigError(f"mc.n_paths: must be >= 1, got {n_paths!r}")
        mc_dt = float(_expect(mc_doc, "dt", (int, float), "mc.", required=True))
        if not mc_dt > 0.0:
            raise ConfigError(f"mc.dt: must be positive, got {mc_dt!r}")
        mc = McSpec(
            n_paths=n_paths,
            dt=mc_dt,
            seed=_expect(mc_doc, "seed", (int,), "mc.", default=0),
            x0=float(_expect(mc_doc, "x0", (int, float), "mc.", default=0.0)),
            grid_h=float(_expect(mc_doc, "grid_h", (int, float), "mc.", default=0.25)),
            grid_half=float(_expect(mc_doc, "grid_half", (int, float), "mc.", default=10.0)),
        )

    return Scenario(
        name=name,
        alpha=alpha,
        eps=eps,
        d=d,
        drift=drift,
        condition=condition,
        h=h,
        initial=initial,
        t_end=t_end,
        t_outputs=outputs,
        dt=dt,
        safety=safety,
        integrator=integrator,
        weno_delta=weno_delta,
        mc=mc,
    )


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario document (or a run manifest, whose embedded config
    is then used) into a validated Scenario."""
    try:
        # JSON first: YAML 1.1 reads a bare exponent like 1e-06 as a string
        doc = json.loads(text)
    except json.JSONDecodeError:
        try:
            doc = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ConfigError(f"document is not valid YAML/JSON: {exc}") from exc
    if isinstance(doc, dict) and "config" in doc and "generator" in doc:
        doc = doc["config"]
    return _scenario_from_mapping(doc)


# ---------------------------------------------------------------------------
# Running scenarios


def _exact_reference_applies(s: Scenario) -> bool:
    return (
        isinstance(s.condition, Natural)
        and isinstance(s.initial, CauchySeed)
        and s.drift == "zero"
        and s.alpha == 1.0
        and s.eps == 1.0
        and s.d == 0.0
    )


def run(scenario: Scenario, out_dir: str | Path) -> dict:
    """Execute one scenario into a directory and return its manifest."""
    started = time.perf_counter()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    params = LevyParams.create(scenario.alpha, scenario.eps, scenario.d)
    grid = build_grid(scenario.condition, scenario.h)
    drift = DriftField.from_kind(scenario.drift, grid)
    ws = prepare(params, grid, drift, weno_delta=scenario.weno_delta)
    P0 = sample_initial(scenario.initial, grid)
    dt = scenario.dt
    if dt is None:
        dt = select_dt_composite(params, grid, drift, scenario.safety)

    outputs: list[str] = []
    error_rows: list[tuple[float, float, float]] = []
    exact_applies = _exact_reference_applies(scenario)

    def snapshot(field: DensityField) -> None:
        fname = f"{scenario.name}_t{_fmt_time(field.time)}.csv"
        write_density_csv(out / fname, field)
        outputs.append(fname)
        if exact_applies and field.time > 0.0:
            rep = error_report(field, cauchy_exact)
            error_rows.append((field.time, rep.max_abs, rep.rel_l2))

    later = [t for t in scenario.t_outputs if t > P0.time]
    if any(abs(t - P0.time) < 1e-15 for t in scenario.t_outputs):
        snapshot(P0)
    final = evolve(
        P0,
        ws,
        StepControl(dt=dt, integrator=scenario.integrator),
        scenario.t_end,
        observe_times=later,
        observer=snapshot,
    )

    if error_rows:
        fname = f"{scenario.name}_errors.csv"
        _write_table_csv(out / fname, ["t", "max_abs", "rel_l2"], error_rows)
        outputs.append(fname)

    if scenario.mc is not None:
        mc = scenario.mc
        ens = simulate_terminal(
            alpha=scenario.alpha,
            eps=scenario.eps,
            d=scenario.d,
            drift_fn=drift.evaluate,
            x0=mc.x0,
            t_end=scenario.t_end,
            n_paths=mc.n_paths,
            dt=mc.dt,
            seed=mc.seed,
        )
        fname = f"{scenario.name}_mc_samples.csv"
        ensemble_to_csv(ens, out / fname)
        outputs.append(fname)
        cmp_grid = build_grid(Natural(mc.grid_half), mc.grid_h)
        emp = empirical_density(ens, cmp_grid)
        pde = np.interp(cmp_grid.nodes, grid.nodes, final.values)
        fname = f"{scenario.name}_mc_compare.csv"
        _write_table_csv(
            out / fname,
            ["x", "p_pde", "p_mc"],
            list(zip(cmp_grid.nodes.tolist(), pde.tolist(), emp.values.tolist())),
        )
        outputs.append(fname)

    manifest = {
        "schema_version": SCHEMA_VERSION,
        "generator": "levyfp",
        "version": __version__,
        "name": scenario.name,
        "config": scenario.config_dict(),
        "derived": {
            "J": grid.J,
            "c_alpha": params.c_alpha,
            "zeta_am1": params.zeta_am1,
            "c_h": corrected_diffusion(params, grid.h),
            "lf_speed": drift.lf_speed,
            "mp_threshold": mp_threshold(params.alpha, params.eps),
            "dt": dt,
        },
        "outputs": outputs,
        "wall_time_s": time.perf_counter() - started,
        "status": "ok",
    }
    _atomic_write(out / f"{scenario.name}_manifest.json", json.dumps(manifest, indent=2) + "\n")
    return manifest


def _run_many(scenarios: Sequence[Scenario], out_dir: Path, threads: int) -> None:
    if threads <= 1 or len(scenarios) <= 1:
        for s in scenarios:
            run(s, out_dir)
        return
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(run, s, out_dir) for s in scenarios]
        for f in futures:
            f.result()


# ---------------------------------------------------------------------------
# Built-in suites


def _scenario(**kwargs) -> Scenario:
    base = {"schema_version": SCHEMA_VERSION}
    base.update(kwargs)
    return _scenario_from_mapping(base)


def _cmd_run(args) -> None:
    text = Path(args.config).read_text()
    scenario = parse_scenario(text)
    _run_many([scenario], Path(args.out), args.threads)


def _cmd_cauchy_verify(args) -> None:
    h = 0.005 if args.fast else 0.001
    t_end = 0.1 if args.fast else 0.2
    outputs = [0.05, 0.1] if args.fast else [0.05, 0.1, 0.2]
    scenario = _scenario(
        name="cauchy",
        alpha=1.0,
        eps=1.0,
        condition="natural",
        L=50.0,
        h=h,
        initial="cauchy",
        t0=0.01,
        t_end=t_end,
        t_outputs=outputs,
        dt=0.5 * h,
    )
    manifest = run(scenario, Path(args.out))
    errors = [name for name in manifest["outputs"] if name.endswith("_errors.csv")]
    print(f"cauchy-verify: wrote {len(manifest['outputs'])} files ({errors[0]})")


def _cmd_table1(args) -> None:
    h_list = [0.1 / 2**m for m in range(args.levels)]
    rows = refinement_table(h_list)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_table_csv(
        out / "table1.csv",
        ["h", "error", "order"],
        [(r["h"], r["error"], r["order"]) for r in rows],
    )
    for r in rows:
        print(f"h={r['h']:<12g} error={r['error']:<12.6g} order={r['order']:.3g}")


def _cmd_table2(args) -> None:
    h_list = [0.1 / 2**m for m in range(args.levels)]
    rows = richardson_refinement_table(h_list)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_table_csv(
        out / "table2.csv",
        ["h", "error", "order"],
        [(r["h"], r["error"], r["order"]) for r in rows],
    )
    for r in rows:
        print(f"h={r['h']:<12g} error={r['error']:<12.6g} order={r['order']:.3g}")


def _cmd_masscheck(args) -> None:
    rows = mass_sweep([5.0, 10.0, 20.0, 40.0, 80.0], h=args.h)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_table_csv(
        out / "masscheck.csv",
        ["L", "mass", "defect"],
        [(r["L"], r["mass"], 1.0 - r["mass"]) for r in rows],
    )
    for r in rows:
        print(f"L={r['L']:<6g} mass={r['mass']:.9f}")


def _cmd_tails(args) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    scenarios = [
        _scenario(
            name=f"tails_alpha{_fmt_time(alpha)}",
            alpha=alpha,
            eps=1.0,
            condition="natural",
            L=110.0,
            h=0.01,
            initial="cauchy",
            t_end=1.0,
            dt=0.5 * 0.01**alpha,
        )
        for alpha in (0.5, 1.0, 1.5)
    ]
    _run_many(scenarios, out, args.threads)
    rows = []
    for s in scenarios:
        x, p = read_density_csv(out / f"{s.name}_t1.csv")
        grid = build_grid(Natural(110.0), 0.01)
        slope = tail_slope(DensityField(p, grid, 1.0), 20.0, 80.0)
        rows.append((s.alpha, slope, -(1.0 + s.alpha)))
        print(f"alpha={s.alpha:<4g} tail slope={slope:.4f} (reference {-(1 + s.alpha):g})")
    _write_table_csv(out / "tails.csv", ["alpha", "slope", "reference"], rows)


def _cmd_absorbing_suite(args) -> None:
    scenarios = []
    for init in ("gaussian-paper", "uniform"):
        scenarios.append(
            _scenario(
                name=f"absorbing_{init}",
                alpha=1.0,
                eps=1.0,
                condition="absorbing",
                h=0.005,
                initial=init,
                t_end=2.5,
                t_outputs=[0.0, 0.05, 0.2, 0.5, 2.5],
            )
        )
    for alpha in (0.1, 0.5, 1.0, 1.5, 1.9):
        scenarios.append(
            _scenario(
                name=f"absorbing_alpha{_fmt_time(alpha)}",
                alpha=alpha,
                eps=1.0,
                condition="absorbing",
                h=0.005,
                initial="gaussian-paper",
                t_end=0.25,
                t_outputs=[0.25],
            )
        )
    _run_many(scenarios, Path(args.out), args.threads)
    print(f"absorbing-suite: {len(scenarios)} scenarios written to {args.out}")


def _cmd_ou_suite(args) -> None:
    scenarios = []
    for alpha in (0.5, 1.5):
        for drift in ("zero", "ou"):
            scenarios.append(
                _scenario(
                    name=f"ou_alpha{_fmt_time(alpha)}_{drift}",
                    alpha=alpha,
                    eps=1.0,
                    drift=drift,
                    condition="absorbing",
                    h=0.01,
                    initial="uniform",
                    t_end=1.0,
                    t_outputs=[0.0, 0.25, 1.0],
                )
            )
    for d in (0.0, 0.1, 0.5, 1.0):
        scenarios.append(
            _scenario(
                name=f"ou_d{_fmt_time(d)}",
                alpha=1.0,
                eps=1.0,
                d=d,
                drift="ou",
                condition="absorbing",
                h=0.01,
                initial="uniform",
                t_end=1.0,
                t_outputs=[1.0],
            )
        )
    for half in (1.0, 2.0, 4.0):
        scenarios.append(
            _scenario(
                name=f"ou_domain{_fmt_time(half)}",
                alpha=1.0,
                eps=1.0,
                drift="ou",
                condition="absorbing",
                a=-half,
                b=half,
                h=0.01,
                initial="uniform",
                t_end=1.0,
                t_outputs=[1.0],
            )
        )
    _run_many(scenarios, Path(args.out), args.threads)
    print(f"ou-suite: {len(scenarios)} scenarios written to {args.out}")


def _cmd_doublewell_suite(args) -> None:
    scenarios = [
        _scenario(
            name=f"doublewell_alpha{_fmt_time(alpha)}",
            alpha=alpha,
            eps=1.0,
            d=0.1,
            drift="double-well",
            condition="natural",
            L=4.0,
            h=0.02,
            initial="gaussian",
            variance=0.2,
            center=-1.0,
            t_end=5.0,
            t_outputs=[0.0, 1.0, 2.5, 5.0],
        )
        for alpha in (0.5, 1.5)
    ]
    _run_many(scenarios, Path(args.out), args.threads)
    print(f"doublewell-suite: {len(scenarios)} scenarios written to {args.out}")


def _cmd_mc_compare(args) -> None:
    scenario = _scenario(
        name="mc",
        alpha=1.0,
        eps=1.0,
        condition="natural",
        L=50.0,
        h=0.005,
        initial="cauchy",
        t_end=1.0,
        t_outputs=[1.0],
        dt=0.0025,
        mc={
            "n_paths": args.paths,
            "dt": 0.05,
            "seed": args.seed,
            "x0": 0.0,
            "grid_h": 0.25,
            "grid_half": 10.0,
        },
    )
    run(scenario, Path(args.out))
    print(f"mc-compare: ensemble and comparison written to {args.out}")


def _cmd_threshold(args) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for i in range(1, 40):
        alpha = i * 0.05
        rows.append((alpha, mp_threshold(alpha, 1.0)))
    _write_table_csv(out / "threshold_vs_alpha.csv", ["alpha", "threshold"], rows)
    print(f"threshold: {len(rows)} rows written to {out / 'threshold_vs_alpha.csv'}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="levyfp",
        description="Density solver for jump diffusions driven by symmetric stable noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed_default=None):
        p.add_argument("--out", default="runs", help="output directory")
        p.add_argument("--threads", type=int, default=1, help="parallel scenarios")
        if seed_default is not None:
            p.add_argument("--seed", type=int, default=seed_default, help="ensemble seed")

    p = sub.add_parser("run", help="execute one scenario config (or a manifest)")
    p.add_argument("--config", required=True, help="scenario YAML/JSON path")
    common(p)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("cauchy-verify", help="closed-form comparison run")
    p.add_argument("--fast", action="store_true", help="coarse smoke variant")
    common(p)
    p.set_defaults(func=_cmd_cauchy_verify)

    p = sub.add_parser("table1", help="pointwise refinement table, fixed domain")
    p.add_argument("--levels", type=int, default=7, help="number of spacings 0.1/2^m")
    common(p)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("table2", help="refinement table with domain extrapolation")
    p.add_argument("--levels", type=int, default=5, help="number of spacings 0.1/2^m")
    common(p)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("masscheck", help="mass retention across domain sizes")
    p.add_argument("--h", type=float, default=0.001, help="grid spacing")
    common(p)
    p.set_defaults(func=_cmd_masscheck)

    p = sub.add_parser("tails", help="tail exponent runs")
    common(p)
    p.set_defaults(func=_cmd_tails)

    p = sub.add_parser("absorbing-suite", help="absorbing-interval density families")
    common(p)
    p.set_defaults(func=_cmd_absorbing_suite)

    p = sub.add_parser("ou-suite", help="linear-drift absorbing families")
    common(p)
    p.set_defaults(func=_cmd_ou_suite)

    p = sub.add_parser("doublewell-suite", help="bistable-drift natural families")
    common(p)
    p.set_defaults(func=_cmd_doublewell_suite)

    p = sub.add_parser("mc-compare", help="particle ensemble against the solved density")
    p.add_argument("--paths", type=int, default=400000, help="ensemble size")
    common(p, seed_default=20260814)
    p.set_defaults(func=_cmd_mc_compare)

    p = sub.add_parser("threshold", help="monotone step bound as a function of alpha")
    common(p)
    p.set_defaults(func=_cmd_threshold)

    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports and exits
        print(f"runtime failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
