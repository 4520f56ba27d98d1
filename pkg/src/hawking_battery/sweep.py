"""Parameter sweeps and figure data written as CSV."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .analytic import Noise, analytic_capacity, analytic_eigenvalues
from .battery import apply_noise, pipeline_reduced_states
from .linalg import hermitian_eigenvalues
from .relativistic import DEFAULT_ETA_B, DEFAULT_P, Region

AXIS_NAMES = ("p", "eta_a", "k")
AXIS_LIMITS = {"p": (0.0, 1.0), "eta_a": (0.0, math.pi / 2), "k": (0.0, 1.0)}
FIGURE_IDS = ("fig1", "fig2", "fig4", "fig5", "fig6")
FIGURE_GRID = 101


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"unknown axis {self.name!r}; choose from {AXIS_NAMES}")
        if self.count < 2:
            raise ValueError("axis count must be at least 2")
        lo, hi = AXIS_LIMITS[self.name]
        for v in (self.start, self.stop):
            if not lo - 1e-12 <= v <= hi + 1e-12:
                raise ValueError(f"{self.name} value {v} outside [{lo}, {hi}]")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    axes: tuple[Axis, ...]
    p: float = DEFAULT_P
    eta_a: float = 0.0
    eta_b: float = DEFAULT_ETA_B
    k: float = 0.0
    regions: tuple[Region, ...] = tuple(Region)
    noise: Noise = Noise.NONE

    def __post_init__(self):
        if not 1 <= len(self.axes) <= 2:
            raise ValueError("a sweep takes one or two axes")
        if len({a.name for a in self.axes}) != len(self.axes):
            raise ValueError("sweep axes must be distinct")
        object.__setattr__(self, "regions", tuple(Region(r) for r in self.regions))
        object.__setattr__(self, "noise", Noise(self.noise))


def fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _grid(spec: SweepSpec) -> dict[str, np.ndarray]:
    """Full parameter arrays, axis 0 slowest."""
    values = [a.values() for a in spec.axes]
    mesh = np.meshgrid(*values, indexing="ij")
    params = {name: np.full(mesh[0].shape, getattr(spec, name), dtype=float) for name in AXIS_NAMES}
    for axis, m in zip(spec.axes, mesh):
        params[axis.name] = m
    return params


def sweep_table(spec: SweepSpec) -> tuple[list[str], list[list[float]]]:
    params = _grid(spec)
    header = [a.name for a in spec.axes]
    columns = [params[a.name].ravel() for a in spec.axes]
    for region in spec.regions:
        red = pipeline_reduced_states(region, params["p"], params["eta_a"], spec.eta_b)
        states = apply_noise(red, spec.noise, params["k"])
        spectra = hermitian_eigenvalues(states)
        pipe = 2 * (spectra[..., 3] + spectra[..., 2] - spectra[..., 1] - spectra[..., 0])
        ana = analytic_capacity(region, spec.noise, params["p"], params["eta_a"], spec.eta_b, params["k"])
        header += [f"{region.value}_capacity_pipeline", f"{region.value}_capacity_analytic",
                   f"{region.value}_residual"]
        columns += [pipe.ravel(), np.broadcast_to(ana, pipe.shape).ravel(), np.abs(pipe - ana).ravel()]
    rows = np.column_stack(columns).tolist()
    return header, rows


def write_csv(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[float]],
              comment: str | None = None) -> None:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(",".join(header))
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def run_sweep(spec: SweepSpec, out: Path | str) -> int:
    header, rows = sweep_table(spec)
    write_csv(out, header, rows)
    return len(rows)


# --- figure data ---------------------------------------------------------------------

_FIG_NOISE = {"fig4": Noise.PF, "fig5": Noise.BF, "fig6": Noise.DEP}
_FIG_REGIONS = (Region.A1B1, Region.A2B1, Region.A2B2)


def _meta(extra: str, eta_b: float) -> str:
    return (f"{extra}; eta_a = eta over [0, pi/2] (values past pi/4 extrapolated beyond the "
            f"physical Hawking range); eta_b = {fmt(eta_b)}")


def figure_files(fig: str, out_dir: Path | str, n: int = FIGURE_GRID,
                 eta_b: float = DEFAULT_ETA_B) -> list[Path]:
    """Write the CSV surfaces behind one figure and return their paths."""
    if fig not in FIGURE_IDS:
        raise ValueError(f"unknown figure {fig!r}; choose from {FIGURE_IDS}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    eta = np.linspace(0.0, math.pi / 2, n)
    written = []

    if fig == "fig1":
        p = np.linspace(0.0, 1.0, n)
        P, E = np.meshgrid(p, eta, indexing="ij")
        for region in Region:
            red = pipeline_reduced_states(region, P, E, eta_b)
            spectra = hermitian_eigenvalues(red)
            labeled = analytic_eigenvalues(region, Noise.NONE, P, E, eta_b).labeled
            header = ["p", "eta"] + [f"lambda{i}_sorted" for i in range(4)] + [f"lambda{i}_labeled" for i in range(4)]
            rows = np.column_stack([P.ravel(), E.ravel(), spectra.reshape(-1, 4), labeled.reshape(-1, 4)])
            path = out_dir / f"fig1_eigenvalues_{region.value}.csv"
            write_csv(path, header, rows.tolist(), _meta(f"eigenvalues of rho_{region.value}, noiseless", eta_b))
            written.append(path)
        return written

    if fig == "fig2":
        axis = Axis("p", 0.0, 1.0, n)
        noise, k_fixed = Noise.NONE, 0.0
    else:
        axis = Axis("k", 0.0, 1.0, n)
        noise, k_fixed = _FIG_NOISE[fig], 0.0
    spec = SweepSpec(axes=(axis, Axis("eta_a", 0.0, math.pi / 2, n)), p=DEFAULT_P, eta_b=eta_b,
                     k=k_fixed, regions=_FIG_REGIONS, noise=noise)
    header, rows = sweep_table(spec)
    header = [h if h != "eta_a" else "eta" for h in header]
    path = out_dir / f"{fig}_capacity_{noise.value}.csv"
    what = "capacity, noiseless" if noise is Noise.NONE else f"capacity under {noise.value}, p = {fmt(DEFAULT_P)}"
    write_csv(path, header, rows, _meta(what, eta_b))
    written.append(path)
    return written
