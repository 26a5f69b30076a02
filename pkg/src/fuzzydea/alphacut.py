"""Alpha-cut fuzzy CCR scores via extreme-value reduction.

At level alpha each triangular value collapses to its alpha-cut interval
and the evaluated DMU takes the favorable endpoints (low inputs, high
outputs) while every peer takes the unfavorable ones.  The resulting
crisp CCR optimum is the optimistic score; the pessimistic variant swaps
the roles.  Normalization fixes the evaluated DMU's weighted input at 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .ccr import CcrResult, CrispDataset, SelfPolicy, ccr_efficiency
from .dataio import FuzzyDataset
from .errors import DataError

__all__ = [
    "AlphaScore",
    "alphacut_reduce",
    "pessimistic_reduce",
    "modal_reduce",
    "alphacut_scores",
    "pessimistic_scores",
]


@dataclass(frozen=True)
class AlphaScore:
    dmu: str
    alpha: float
    score: float
    policy: SelfPolicy


def _reduce(data: FuzzyDataset, p: int, alpha: float, favor_p: bool) -> CrispDataset:
    n, m, s = data.n_dmus, data.n_inputs, data.n_outputs
    inputs = np.empty((m, n), dtype=np.float64)
    outputs = np.empty((s, n), dtype=np.float64)
    for j, dmu in enumerate(data.dmus):
        favored = (j == p) == favor_p
        for i, tri in enumerate(dmu.inputs):
            cut = tri.alpha_interval(alpha)
            inputs[i, j] = cut.lo if favored else cut.hi
        for r, tri in enumerate(dmu.outputs):
            cut = tri.alpha_interval(alpha)
            outputs[r, j] = cut.hi if favored else cut.lo
    return CrispDataset(data.dmu_names, inputs, outputs)


def _check_index(data: FuzzyDataset, p: int) -> int:
    p = int(p)
    if not 0 <= p < data.n_dmus:
        raise DataError(f"DMU index {p} out of range for {data.n_dmus} DMUs")
    return p


def alphacut_reduce(data: FuzzyDataset, p: int, alpha: float) -> CrispDataset:
    """Optimistic crisp reduction at level alpha for evaluated DMU p."""
    return _reduce(data, _check_index(data, p), alpha, favor_p=True)


def pessimistic_reduce(data: FuzzyDataset, p: int, alpha: float) -> CrispDataset:
    """Role-swapped reduction: p at its worst endpoints, peers at their best."""
    return _reduce(data, _check_index(data, p), alpha, favor_p=False)


def modal_reduce(data: FuzzyDataset) -> CrispDataset:
    """Crisp dataset of modal values (the alpha = 1 cut, any viewpoint)."""
    return _reduce(data, 0, 1.0, favor_p=True)


def alphacut_scores(
    data: FuzzyDataset,
    alpha: float,
    policy: SelfPolicy = SelfPolicy.EXCLUDE_SELF,
    tol: float = 1e-9,
) -> Tuple[AlphaScore, ...]:
    """Optimistic alpha-cut score of every DMU at one alpha level."""
    out = []
    for p in range(data.n_dmus):
        res = ccr_efficiency(alphacut_reduce(data, p, alpha), p, policy=policy, tol=tol)
        out.append(AlphaScore(res.dmu, alpha, res.efficiency, policy))
    return tuple(out)


def pessimistic_scores(
    data: FuzzyDataset,
    alpha: float,
    policy: SelfPolicy = SelfPolicy.EXCLUDE_SELF,
    tol: float = 1e-9,
) -> Tuple[AlphaScore, ...]:
    """Pessimistic counterpart of alphacut_scores."""
    out = []
    for p in range(data.n_dmus):
        res = ccr_efficiency(
            pessimistic_reduce(data, p, alpha), p, policy=policy, tol=tol
        )
        out.append(AlphaScore(res.dmu, alpha, res.efficiency, policy))
    return tuple(out)
