"""Noise thresholds above which the mixed Hardy states admit no local model.

Each ``*_bound`` function works on raw weights and dimensions; the
spec-taking wrappers validate a :class:`SchmidtSpec` first. A threshold
``t`` means: for ``p > t`` the corresponding criterion proves nonlocality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvalidInput, InvalidSpec
from .hardy import DEGENERACY_GUARD, WEIGHT_NORM_ATOL, SchmidtSpec
from .probabilities import hardy_probability, hardy_probability_2x2
from .qstate import DensityOperator, as_matrix, tensor

ORDERING_MARGIN = 1e-12

PAULIS = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _check_pair(p1: float, p2: float, normalized: bool) -> None:
    if not (p1 > 0 and p2 > 0):
        raise InvalidSpec("weights must be strictly positive", f"p1={p1}, p2={p2}")
    if abs(p1 - p2) < DEGENERACY_GUARD:
        raise InvalidSpec("p1 = p2", f"|p1-p2|={abs(p1 - p2):.3e}")
    if normalized and abs(p1 * p1 + p2 * p2 - 1.0) > WEIGHT_NORM_ATOL:
        raise InvalidSpec("p1^2 + p2^2 != 1", f"deviation {abs(p1 * p1 + p2 * p2 - 1.0):.3e}")
    if not normalized and p1 * p1 + p2 * p2 > 1.0 + WEIGHT_NORM_ATOL:
        raise InvalidSpec("p1^2 + p2^2 > 1", f"{p1 * p1 + p2 * p2:.15g}")


def white_2x2_bound(p1: float, p2: float) -> float:
    return 1.0 / (1.0 + 2.0 * hardy_probability_2x2(p1, p2))


def colored_bound(p1: float, p2: float) -> float:
    return 1.0 / (2.0 * (1.0 - 2.0 * (p1 * p2) ** 2))


def chsh_white_bound(p1: float, p2: float) -> float:
    return 1.0 / math.sqrt(1.0 + 4.0 * (p1 * p2) ** 2)


def white_highdim_bound(p1: float, p2: float, d1d2: int) -> float:
    return 1.0 / (1.0 + d1d2 * hardy_probability(p1, p2) / 4.0)


def white_highdim_one_minus_p(p1: float, p2: float, d1d2: int) -> float:
    """``1 - white_highdim_bound`` without the cancellation near ``p1 = p2``."""
    x = d1d2 * hardy_probability(p1, p2) / 4.0
    return x / (1.0 + x)


def tracedist_eta_bound(p1: float, p2: float) -> float:
    """Largest trace distance from the pure Hardy state still certified nonlocal."""
    return hardy_probability(p1, p2) / 6.0


def tracedist_one_minus_p(p1: float, p2: float, d1d2: int) -> float:
    """``eta_bound`` converted to ``1 - p`` via ``eta = (1 - p)(d - 1)/d`` for white noise."""
    return d1d2 / (6.0 * (d1d2 - 1)) * hardy_probability(p1, p2)


def threshold_white_2x2(p1: float, p2: float) -> float:
    _check_pair(p1, p2, normalized=True)
    return white_2x2_bound(p1, p2)


def threshold_colored(p1: float, p2: float) -> float:
    _check_pair(p1, p2, normalized=True)
    return colored_bound(p1, p2)


def threshold_chsh_white(p1: float, p2: float) -> float:
    _check_pair(p1, p2, normalized=True)
    return chsh_white_bound(p1, p2)


def threshold_white_highdim(spec: SchmidtSpec) -> float:
    return white_highdim_bound(spec.p1, spec.p2, spec.d1 * spec.d2)


@dataclass(frozen=True)
class TraceDistanceCriterion:
    eta_bound: float
    p_equivalent: float


def tracedist_criterion(spec: SchmidtSpec) -> TraceDistanceCriterion:
    d = spec.d1 * spec.d2
    return TraceDistanceCriterion(
        eta_bound=tracedist_eta_bound(spec.p1, spec.p2),
        p_equivalent=1.0 - tracedist_one_minus_p(spec.p1, spec.p2, d),
    )


def correlation_matrix(rho) -> np.ndarray:
    """``T[i, j] = Tr[rho sigma_i (x) sigma_j]`` for a two-qubit state."""
    m = rho.matrix if isinstance(rho, DensityOperator) else as_matrix(rho)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"correlation matrix needs a two-qubit state, got shape {m.shape}")
    return np.array([[np.trace(m @ tensor(si, sj)).real for sj in PAULIS] for si in PAULIS])


def horodecki_M(rho) -> float:
    """Sum of the two largest eigenvalues of ``T^T T``; some CHSH inequality is violated iff > 1."""
    T = correlation_matrix(rho)
    eigs = np.linalg.eigvalsh(T.T @ T)
    return float(eigs[-1] + eigs[-2])


@dataclass(frozen=True)
class ThresholdReport:
    spec: SchmidtSpec
    t_white: float | None
    t_colored: float | None
    t_highdim: float
    t_chsh: float | None
    t_tracedist: float
    eta_bound: float
    orderings: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "white": self.t_white,
            "colored": self.t_colored,
            "highdim": self.t_highdim,
            "chsh": self.t_chsh,
            "tracedist": self.t_tracedist,
        }


def report(spec: SchmidtSpec) -> ThresholdReport:
    """All thresholds that apply to ``spec`` plus the pairwise orderings that hold strictly."""
    two_qubit = spec.is_two_qubit
    t_white = white_2x2_bound(spec.p1, spec.p2) if two_qubit else None
    t_colored = colored_bound(spec.p1, spec.p2) if two_qubit else None
    t_chsh = chsh_white_bound(spec.p1, spec.p2) if two_qubit else None
    t_high = threshold_white_highdim(spec)
    td = tracedist_criterion(spec)

    orderings = []
    if two_qubit:
        if t_white - t_colored > ORDERING_MARGIN:
            orderings.append("colored < white")
        if t_white - t_chsh > ORDERING_MARGIN:
            orderings.append("chsh < white")
    if td.p_equivalent - t_high > ORDERING_MARGIN:
        orderings.append("highdim < tracedist")
    return ThresholdReport(spec, t_white, t_colored, t_high, t_chsh, td.p_equivalent,
                           td.eta_bound, tuple(orderings))


def find_root(f, lo: float, hi: float, xtol: float = 1e-13) -> float:
    """Bisection for a sign change of ``f`` on ``[lo, hi]``."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise InvalidInput(f"no sign change on [{lo}, {hi}]")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
