"""Multi-objective fuzzy CCR: joint satisfaction level h and efficiency.

The model asks for the largest common membership level h such that the
evaluated DMU, with every value pinned inside its triangular support at
level h, still reaches the fraction h of its ideal score z*.  z* is the
plain CCR optimum on the most favorable support endpoints (evaluated DMU
at low inputs / high outputs, peers at the opposite extremes).

Because the crisp score at level h is non-increasing in h, the target
function g(h) = eff(h) / z* - h is strictly decreasing and the optimal
h* is its root (or 1 when g(1) >= 0), found by bisection.

Two ways of combining h with an alpha level are supported:

* "rescale" (default): beta = alpha + (1 - alpha) * h.  Memberships are
  re-normalized over the alpha-cut box, so the data keeps moving for
  every h in [0, 1].
* "floor": beta = max(alpha, h).  The alpha-cut box simply clips the
  membership constraints, so scores plateau once h <= alpha.

Both coincide at alpha = 0 (beta = h) and alpha = 1 (crisp modal data).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from .ccr import CrispDataset, SelfPolicy, ccr_efficiency
from .dataio import FuzzyDataset
from .errors import AlphaOutOfRange, DataError, DegenerateZStar, RangeError

__all__ = [
    "ALPHA_MODES",
    "DEFAULT_ALPHA_MODE",
    "MoConfig",
    "MoResult",
    "beta_level",
    "reduced_data",
    "z_star",
    "eff_at",
    "solve_mo",
    "evaluate_all",
]

ALPHA_MODES = ("floor", "rescale")
DEFAULT_ALPHA_MODE = "rescale"


def beta_level(h: float, alpha: float, mode: str = DEFAULT_ALPHA_MODE) -> float:
    """Effective membership level at satisfaction h under an alpha level."""
    if not (isinstance(h, (int, float)) and math.isfinite(h)) or not 0.0 <= h <= 1.0:
        raise RangeError(f"h must lie in [0, 1], got {h!r}")
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha)) or not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")
    if mode == "rescale":
        return alpha + (1.0 - alpha) * h
    if mode == "floor":
        return h if h > alpha else alpha
    raise RangeError(f"unknown alpha mode {mode!r}; use one of {ALPHA_MODES}")


@dataclass(frozen=True)
class MoConfig:
    """Knobs for solve_mo / evaluate_all."""

    alpha: float = 0.0
    policy: SelfPolicy = SelfPolicy.EXCLUDE_SELF
    h_tol: float = 1e-6
    lp_tol: float = 1e-9
    alpha_mode: str = DEFAULT_ALPHA_MODE
    max_bisect: int = 60

    def __post_init__(self):
        if self.alpha_mode not in ALPHA_MODES:
            raise RangeError(
                f"unknown alpha mode {self.alpha_mode!r}; use one of {ALPHA_MODES}"
            )
        if not 0.0 <= self.alpha <= 1.0:
            raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.h_tol <= 0.0 or self.lp_tol <= 0.0:
            raise RangeError("tolerances must be positive")
        if self.max_bisect < 1:
            raise RangeError("max_bisect must be at least 1")


@dataclass(frozen=True)
class MoResult:
    dmu: str
    h_star: float
    efficiency: float
    z_star: float
    u: Tuple[float, ...]
    v: Tuple[float, ...]
    reduced: CrispDataset
    iterations: int
    alpha: float
    policy: SelfPolicy
    rank: Optional[int] = None


def reduced_data(
    data: FuzzyDataset,
    p: int,
    h: float,
    alpha: float = 0.0,
    mode: str = DEFAULT_ALPHA_MODE,
) -> CrispDataset:
    """Crisp data at satisfaction level h (and alpha level) for DMU p.

    The evaluated DMU moves from its favorable support endpoints toward
    the modal values as the effective level rises; peers move in from
    the unfavorable endpoints.  At level 1 everything is modal.
    """
    p = int(p)
    if not 0 <= p < data.n_dmus:
        raise DataError(f"DMU index {p} out of range for {data.n_dmus} DMUs")
    beta = beta_level(h, alpha, mode)
    keep = 1.0 - beta  # convex weights: exact modal collapse at beta = 1
    n, m, s = data.n_dmus, data.n_inputs, data.n_outputs
    inputs = np.empty((m, n), dtype=np.float64)
    outputs = np.empty((s, n), dtype=np.float64)
    for j, dmu in enumerate(data.dmus):
        for i, tri in enumerate(dmu.inputs):
            if j == p:
                inputs[i, j] = keep * tri.lower + beta * tri.modal
            else:
                inputs[i, j] = keep * tri.upper + beta * tri.modal
        for r, tri in enumerate(dmu.outputs):
            if j == p:
                outputs[r, j] = keep * tri.upper + beta * tri.modal
            else:
                outputs[r, j] = keep * tri.lower + beta * tri.modal
    return CrispDataset(data.dmu_names, inputs, outputs)


def z_star(
    data: FuzzyDataset,
    p: int,
    policy: SelfPolicy = SelfPolicy.EXCLUDE_SELF,
    tol: float = 1e-9,
) -> float:
    """Ideal score of DMU p: CCR optimum on the favorable support extremes."""
    value = ccr_efficiency(reduced_data(data, p, 0.0), int(p), policy=policy, tol=tol).efficiency
    if value <= tol:
        raise DegenerateZStar(
            f"ideal score for DMU {data.dmus[int(p)].name!r} is {value}; "
            "the ratio target is undefined"
        )
    return value


def eff_at(data: FuzzyDataset, p: int, h: float, cfg: MoConfig = MoConfig()) -> float:
    """Crisp CCR score of DMU p on reduced_data at satisfaction level h."""
    reduced = reduced_data(data, p, h, cfg.alpha, cfg.alpha_mode)
    return ccr_efficiency(reduced, int(p), policy=cfg.policy, tol=cfg.lp_tol).efficiency


def solve_mo(data: FuzzyDataset, p: int, cfg: MoConfig = MoConfig()) -> MoResult:
    """Maximal satisfaction level h* and the efficiency attained there.

    Bisects g(h) = eff(h)/z* - h on [0, 1]; g(0) > 0 always, so h* = 1
    exactly when g(1) >= 0.  The returned h_star is the last evaluated
    midpoint, so |efficiency / z_star - h_star| stays within a few h_tol.
    """
    p = int(p)
    z = z_star(data, p, cfg.policy, cfg.lp_tol)
    name = data.dmus[p].name

    def crisp_at(h):
        reduced = reduced_data(data, p, h, cfg.alpha, cfg.alpha_mode)
        return reduced, ccr_efficiency(reduced, p, policy=cfg.policy, tol=cfg.lp_tol)

    reduced, top = crisp_at(1.0)
    if top.efficiency / z - 1.0 >= 0.0:
        return MoResult(
            dmu=name,
            h_star=1.0,
            efficiency=top.efficiency,
            z_star=z,
            u=top.u,
            v=top.v,
            reduced=reduced,
            iterations=0,
            alpha=cfg.alpha,
            policy=cfg.policy,
        )

    lo, hi = 0.0, 1.0
    mid, res, g = 0.0, None, 0.0
    iterations = 0
    for _ in range(cfg.max_bisect):
        mid = 0.5 * (lo + hi)
        reduced, res = crisp_at(mid)
        g = res.efficiency / z - mid
        iterations += 1
        if g >= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= cfg.h_tol and abs(g) <= 5.0 * cfg.h_tol:
            break
    return MoResult(
        dmu=name,
        h_star=mid,
        efficiency=res.efficiency,
        z_star=z,
        u=res.u,
        v=res.v,
        reduced=reduced,
        iterations=iterations,
        alpha=cfg.alpha,
        policy=cfg.policy,
    )


def evaluate_all(data: FuzzyDataset, cfg: MoConfig = MoConfig()) -> Tuple[MoResult, ...]:
    """solve_mo for every DMU, returned in rank order (rank 1 first).

    Ranking sorts by efficiency, then h*, then dataset order; ranks are
    1-based positions in that ordering.
    """
    if data.n_dmus < 2:
        raise DataError("ranking needs at least two DMUs")
    results = [solve_mo(data, p, cfg) for p in range(data.n_dmus)]
    order = sorted(
        range(len(results)),
        key=lambda j: (-results[j].efficiency, -results[j].h_star, j),
    )
    return tuple(
        replace(results[j], rank=pos + 1) for pos, j in enumerate(order)
    )
