"""Convergence-study harness: sweeps of the best-approximation error over
(k, alpha, p), exponential-rate fits, the error-dip locator, and
deterministic CSV emission.

Rows are pure functions of their parameters, so the harness may fan them
out to worker processes; results are always merged back in canonical
(k, alpha, p) order and the output is bit-identical regardless of the
parallelism degree.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from shadowhp.amplitudes import ShadowConfig
from shadowhp.errors import DomainError
from shadowhp.hpspace import best_approx_error

CSV_HEADER = "k,alpha,p,n_layers,dof,error_l2,relative_error,status"

__all__ = [
    "CSV_HEADER",
    "DipScanResult",
    "ExperimentGrid",
    "GridRow",
    "RateFit",
    "dip_scan",
    "fit_rate",
    "format_csv",
    "layers_for_degree",
    "run_grid",
    "write_csv",
]


@dataclass(frozen=True)
class ExperimentGrid:
    """Parameter grid of the convergence study. Angles are radians; by the
    symmetry of the setup only alpha in (pi/2, pi] is admitted.
    """

    k_values: tuple[float, ...]
    alpha_values: tuple[float, ...]
    p_values: tuple[int, ...]
    l_nc: float = 1.5
    l_nc_prime: float = 1.0
    sigma: float = 0.15
    c: float = 1.0

    def __post_init__(self) -> None:
        if not (self.k_values and self.alpha_values and self.p_values):
            raise DomainError("k_values, alpha_values and p_values must be nonempty")
        if any(k <= 0.0 for k in self.k_values):
            raise DomainError("wavenumbers must be positive")
        if any(not 0.5 * math.pi < a <= math.pi for a in self.alpha_values):
            raise DomainError("alpha values must lie in (pi/2, pi]")
        if any(not (isinstance(p, int) and p >= 0) for p in self.p_values):
            raise DomainError("degrees must be nonnegative integers")
        if not (self.l_nc > 0.0 and self.l_nc_prime > 0.0):
            raise DomainError("side lengths must be positive")
        if not 0.0 < self.sigma < 1.0:
            raise DomainError("grading must lie in (0, 1)")
        if not self.c > 0.0:
            raise DomainError("layer constant c must be positive")


@dataclass(frozen=True)
class GridRow:
    k: float
    alpha: float
    p: int
    n_layers: int
    dof: int
    error_l2: float
    relative_error: float
    status: str


@dataclass(frozen=True)
class RateFit:
    """Least-squares fit of log(error) = log(C) - tau * p."""

    tau: float
    intercept: float
    r_squared: float


@dataclass(frozen=True)
class DipScanResult:
    points: tuple[tuple[float, float], ...]
    alpha_min: float
    expected_alpha: float
    within_pi_32: bool


def layers_for_degree(p: int, c: float) -> int:
    """Mesh depth n = max(1, ceil(c p)) used throughout the sweeps."""
    return max(1, math.ceil(c * p))


def _row_task(args: tuple) -> GridRow:
    k, alpha, p, l_nc, l_nc_prime, sigma, c, quad_order = args
    n = layers_for_degree(p, c)
    try:
        cfg = ShadowConfig(k=k, alpha=alpha, l_nc=l_nc, l_nc_prime=l_nc_prime)
        res = best_approx_error(cfg, n, sigma, p, quad_order)
    except Exception as exc:
        reason = f"{type(exc).__name__}: {exc}".replace(",", ";").replace("\n", " ")
        return GridRow(k, alpha, p, n, 0, math.nan, math.nan, f"failed: {reason}")
    return GridRow(k, alpha, p, n, res.dof, res.error_l2, res.relative_error, "ok")


def run_grid(
    grid: ExperimentGrid,
    quad_order: int | None = None,
    parallelism: int = 1,
) -> list[GridRow]:
    """One row per (k, alpha, p), in canonical sorted order. A failing row
    records its reason in the status column; the sweep continues.
    """
    if parallelism < 1:
        raise DomainError(f"parallelism must be >= 1, got {parallelism}")
    tasks = [
        (k, alpha, p, grid.l_nc, grid.l_nc_prime, grid.sigma, grid.c, quad_order)
        for k in sorted(grid.k_values)
        for alpha in sorted(grid.alpha_values)
        for p in sorted(grid.p_values)
    ]
    if parallelism == 1:
        return [_row_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_row_task, tasks))


def fit_rate(pairs: list[tuple[float, float]]) -> RateFit:
    """Fit log(error) = intercept - tau * p over (p, error) pairs.

    Pairs with error <= 1e-14 are dropped (converged-to-roundoff tail);
    at least 4 must survive.
    """
    kept = [(float(p), float(e)) for p, e in pairs if e > 1e-14]
    if len(kept) < 4:
        raise DomainError(
            f"rate fit needs >= 4 points above roundoff, got {len(kept)}"
        )
    ps = np.array([p for p, _ in kept])
    logs = np.log(np.array([e for _, e in kept]))
    slope, intercept = np.polyfit(ps, logs, 1)
    fitted = slope * ps + intercept
    ss_res = float(np.sum((logs - fitted) ** 2))
    ss_tot = float(np.sum((logs - logs.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else max(0.0, 1.0 - ss_res / ss_tot)
    return RateFit(tau=float(-slope), intercept=float(intercept), r_squared=r_squared)


def dip_scan(
    grid: ExperimentGrid,
    p: int = 8,
    quad_order: int | None = None,
    parallelism: int = 1,
) -> DipScanResult:
    """Sweep the relative error over the grid's alpha values at fixed degree
    (k is the grid's first wavenumber; the reference setup runs at k = 16)
    and locate the error dip: the first strict interior local minimum over
    ascending alpha, falling back to the global minimum when the sampled
    landscape has no interior one. Reports whether the dip lies within
    pi/32 of the predicted pi/2 + arctan(4/9).
    """
    if p < 6:
        raise DomainError(f"the dip is resolved only for p >= 6, got {p}")
    if len(grid.alpha_values) < 3:
        raise DomainError("dip_scan needs at least 3 alpha values")
    scan = ExperimentGrid(
        k_values=(sorted(grid.k_values)[0],),
        alpha_values=tuple(sorted(grid.alpha_values)),
        p_values=(p,),
        l_nc=grid.l_nc,
        l_nc_prime=grid.l_nc_prime,
        sigma=grid.sigma,
        c=grid.c,
    )
    rows = run_grid(scan, quad_order, parallelism)
    points = tuple((row.alpha, row.relative_error) for row in rows)
    errs = [e for _, e in points]
    alpha_min = None
    for i in range(1, len(points) - 1):
        if errs[i] < errs[i - 1] and errs[i] < errs[i + 1]:
            alpha_min = points[i][0]
            break
    if alpha_min is None:
        alpha_min = points[int(np.argmin(errs))][0]
    expected = 0.5 * math.pi + math.atan(4.0 / 9.0)
    return DipScanResult(
        points=points,
        alpha_min=alpha_min,
        expected_alpha=expected,
        within_pi_32=abs(alpha_min - expected) <= math.pi / 32.0,
    )


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def format_csv(rows: list[GridRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{_fmt(r.k)},{_fmt(r.alpha)},{r.p},{r.n_layers},{r.dof},"
            f"{_fmt(r.error_l2)},{_fmt(r.relative_error)},{r.status}"
        )
    return "\n".join(lines) + "\n"


def write_csv(rows: list[GridRow], path: str) -> None:
    """Emit the canonical CSV; bit-identical across reruns of the same grid."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_csv(rows))
