"""Crisp CCR efficiency via the multiplier form.

For DMU p: maximize u @ y_p subject to v @ x_p = 1 and
u @ y_j - v @ x_j <= 0 over the peer set, u, v >= 0.  With ExcludeSelf
the constraint for p itself is dropped (super-efficiency), so scores
may exceed 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DataError, SolverFailure
from .linprog import LpProblem, LpStatus, solve

__all__ = ["SelfPolicy", "CrispDataset", "CcrResult", "ccr_efficiency", "ccr_scores"]


class SelfPolicy(enum.Enum):
    """Whether DMU p's own ratio constraint stays in its evaluation."""

    INCLUDE_SELF = "include-self"
    EXCLUDE_SELF = "exclude-self"


@dataclass(frozen=True)
class CrispDataset:
    """Positive crisp data: inputs (m x n) and outputs (s x n) over n DMUs."""

    names: Tuple[str, ...]
    inputs: np.ndarray
    outputs: np.ndarray

    def __post_init__(self):
        names = tuple(str(x) for x in self.names)
        inputs = np.asarray(self.inputs, dtype=np.float64)
        outputs = np.asarray(self.outputs, dtype=np.float64)
        n = len(names)
        if n == 0:
            raise DataError("dataset has no DMUs")
        if len(set(names)) != n:
            raise DataError("DMU names must be unique")
        for label, mat in (("inputs", inputs), ("outputs", outputs)):
            if mat.ndim != 2 or mat.shape[1] != n:
                raise DataError(
                    f"{label} must be a 2-D matrix with one column per DMU, "
                    f"got shape {mat.shape} for {n} DMUs"
                )
            if mat.shape[0] == 0:
                raise DataError(f"{label} must have at least one row")
            if not np.all(np.isfinite(mat)):
                raise DataError(f"{label} contain non-finite values")
            if np.any(mat <= 0.0):
                bad = np.argwhere(mat <= 0.0)[0]
                raise DataError(
                    f"{label} must be strictly positive; "
                    f"{label}[{bad[0]}] of DMU {names[bad[1]]!r} is {mat[tuple(bad)]}"
                )
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)

    @property
    def n_dmus(self) -> int:
        return len(self.names)

    @property
    def n_inputs(self) -> int:
        return self.inputs.shape[0]

    @property
    def n_outputs(self) -> int:
        return self.outputs.shape[0]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DataError(f"unknown DMU {name!r}") from None


@dataclass(frozen=True)
class CcrResult:
    dmu: str
    efficiency: float
    u: Tuple[float, ...]
    v: Tuple[float, ...]
    policy: SelfPolicy


def _check_index(data: CrispDataset, p: int) -> int:
    p = int(p)
    if not 0 <= p < data.n_dmus:
        raise DataError(f"DMU index {p} out of range for {data.n_dmus} DMUs")
    return p


def ccr_efficiency(
    data: CrispDataset,
    p: int,
    policy: SelfPolicy = SelfPolicy.INCLUDE_SELF,
    tol: float = 1e-9,
) -> CcrResult:
    """CCR multiplier efficiency of DMU p under the given self policy.

    Raises SolverFailure when the multiplier LP is infeasible or
    unbounded (e.g. ExcludeSelf with no peer left).
    """
    p = _check_index(data, p)
    s = data.n_outputs
    m = data.n_inputs
    y_p = data.outputs[:, p]
    x_p = data.inputs[:, p]

    objective = tuple(y_p) + (0.0,) * m
    rows = [((0.0,) * s + tuple(x_p), "=", 1.0)]
    for j in range(data.n_dmus):
        if policy is SelfPolicy.EXCLUDE_SELF and j == p:
            continue
        rows.append(
            (tuple(data.outputs[:, j]) + tuple(-data.inputs[:, j]), "<=", 0.0)
        )

    outcome = solve(LpProblem(objective, tuple(rows)), tol=tol)
    if outcome.status is not LpStatus.OPTIMAL:
        raise SolverFailure(
            f"CCR multiplier model for DMU {data.names[p]!r} is "
            f"{outcome.status.value}",
            status=outcome.status,
        )
    sol = outcome.solution
    return CcrResult(
        dmu=data.names[p],
        efficiency=float(outcome.value),
        u=sol[:s],
        v=sol[s:],
        policy=policy,
    )


def ccr_scores(
    data: CrispDataset,
    policy: SelfPolicy = SelfPolicy.INCLUDE_SELF,
    tol: float = 1e-9,
) -> Tuple[CcrResult, ...]:
    """ccr_efficiency for every DMU, in dataset order."""
    return tuple(
        ccr_efficiency(data, p, policy=policy, tol=tol) for p in range(data.n_dmus)
    )
