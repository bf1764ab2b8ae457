"""Joint outcome probabilities: Born rule and the closed forms for the Hardy events.

The Born-rule path (:func:`born_joint`) is the reference; every closed form in
this module is regression-checked against it in the test suite.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import ConsistencyError, InvalidInput, InvalidSpec
from .hardy import SETTINGS, Observable, SchmidtSpec, joint_projector, observable, outcome_set
from .noise import NoiseKind, NoisyHardyState

PROB_ATOL = 1e-10


class OutcomePair(NamedTuple):
    setting_a: str
    outcome_a: int
    setting_b: str
    outcome_b: int

    def __str__(self) -> str:
        def fmt(o):
            return "0" if o == 0 else f"{o:+d}"

        return f"P({self.setting_a}1={fmt(self.outcome_a)}, {self.setting_b}2={fmt(self.outcome_b)})"


# The events entering the Hardy argument.
XX = OutcomePair("X", +1, "X", +1)
YX = OutcomePair("Y", +1, "X", -1)
XY = OutcomePair("X", -1, "Y", +1)
YY = OutcomePair("Y", +1, "Y", +1)
Y0 = OutcomePair("Y", +1, "X", 0)
ZY = OutcomePair("X", 0, "Y", +1)


class Variant(enum.Enum):
    WHITE_2X2 = "white-2x2"
    COLORED_2X2 = "colored-2x2"
    WHITE_HIGHDIM = "white-highdim"


@dataclass(frozen=True)
class HardyQuartet:
    """Probabilities of the Hardy events for one noise family.

    White families use ``eps`` and ``a`` (``P(Y1=+1, Y2=+1) = a + eps``); the
    colored family uses ``eps1, eps2, eps3`` with ``eps3`` the whole
    ``P(Y1=+1, Y2=+1)``. The high-dimensional family also carries the two
    zero-outcome probabilities, which vanish for a party of dimension 2.
    """

    variant: Variant
    eps: float | None = None
    a: float | None = None
    eps1: float | None = None
    eps2: float | None = None
    eps3: float | None = None
    zero_y1_x2: float = 0.0
    zero_x1_y2: float = 0.0
    dims: tuple[int, int] = (2, 2)

    def __post_init__(self):
        values = [v for v in self.constraints().values()]
        if self.a is not None:
            values.append(self.a)
        for v in values:
            if not (-PROB_ATOL <= v <= 1 + PROB_ATOL):
                raise InvalidInput(f"quartet entry {v} outside [0, 1]")

    @classmethod
    def white(cls, eps: float, a: float) -> HardyQuartet:
        return cls(Variant.WHITE_2X2, eps=eps, a=a)

    @classmethod
    def colored(cls, eps1: float, eps2: float, eps3: float) -> HardyQuartet:
        return cls(Variant.COLORED_2X2, eps1=eps1, eps2=eps2, eps3=eps3)

    @classmethod
    def highdim(cls, eps: float, a: float, dims: tuple[int, int],
                zero_y1_x2: float | None = None, zero_x1_y2: float | None = None) -> HardyQuartet:
        d1, d2 = dims
        if zero_y1_x2 is None:
            zero_y1_x2 = (d2 - 2) * eps
        if zero_x1_y2 is None:
            zero_x1_y2 = (d1 - 2) * eps
        return cls(Variant.WHITE_HIGHDIM, eps=eps, a=a, zero_y1_x2=zero_y1_x2,
                   zero_x1_y2=zero_x1_y2, dims=(d1, d2))

    def constraints(self) -> dict[OutcomePair, float]:
        """Event -> probability for every constrained Hardy event."""
        if self.variant is Variant.COLORED_2X2:
            return {XX: self.eps1, YX: self.eps2, XY: self.eps2, YY: self.eps3}
        out = {XX: self.eps, YX: self.eps, XY: self.eps, YY: self.a + self.eps}
        if self.variant is Variant.WHITE_HIGHDIM:
            d1, d2 = self.dims
            if d2 > 2:
                out[Y0] = self.zero_y1_x2
            if d1 > 2:
                out[ZY] = self.zero_x1_y2
        return out


def hardy_probability(p1: float, p2: float) -> float:
    """Pure-state ``P(Y1=+1, Y2=+1)``; valid for unnormalized ``(p1, p2)`` too."""
    return (p1 * p2) ** 2 * (p1 - p2) ** 2 / (p1 * p1 + p2 * p2 - p1 * p2) ** 2


def hardy_probability_2x2(p1: float, p2: float) -> float:
    """Same quantity written with ``1 - p1 p2`` in the denominator (``p1^2 + p2^2 = 1``)."""
    return (p1 * p2) ** 2 * (p1 - p2) ** 2 / (1 - p1 * p2) ** 2


@lru_cache(maxsize=256)
def _observables(spec: SchmidtSpec) -> dict[tuple[int, str], Observable]:
    return {(party, kind): observable(party, kind, spec) for party in (1, 2) for kind in SETTINGS}


def pair_valid(pair: OutcomePair, dims: tuple[int, int]) -> bool:
    d1, d2 = dims
    return (pair.setting_a in SETTINGS and pair.setting_b in SETTINGS
            and pair.outcome_a in outcome_set(d1) and pair.outcome_b in outcome_set(d2))


def born_joint(state: NoisyHardyState, pair: OutcomePair) -> float:
    """``Tr[rho (P_A (x) P_B)]`` for the requested settings and outcomes."""
    pair = OutcomePair(*pair)
    if not pair_valid(pair, state.dims):
        raise InvalidInput(f"{pair} is not a valid outcome pair for dims {state.dims}")
    obs = _observables(state.spec)
    proj = joint_projector(obs[1, pair.setting_a], pair.outcome_a, obs[2, pair.setting_b], pair.outcome_b)
    raw = complex(np.trace(state.matrix @ proj))
    if abs(raw.imag) > PROB_ATOL or not (-PROB_ATOL <= raw.real <= 1 + PROB_ATOL):
        raise ConsistencyError(f"Born probability {raw} for {pair} is not in [0, 1]")
    return min(max(raw.real, 0.0), 1.0)


def all_pairs(dims: tuple[int, int]) -> list[OutcomePair]:
    d1, d2 = dims
    return [OutcomePair(sa, oa, sb, ob)
            for sa, sb in itertools.product(SETTINGS, SETTINGS)
            for oa, ob in itertools.product(outcome_set(d1), outcome_set(d2))]


def behavior_table(state: NoisyHardyState) -> dict[OutcomePair, float]:
    """Full behavior: every setting pair and outcome pair."""
    return {pair: born_joint(state, pair) for pair in all_pairs(state.dims)}


def _require_two_qubit(spec: SchmidtSpec) -> None:
    if not spec.is_two_qubit:
        raise InvalidSpec("requires d1 = d2 = 2", f"got {spec.d1}x{spec.d2}")


def quartet_white_2x2(spec: SchmidtSpec, p: float) -> HardyQuartet:
    _require_two_qubit(spec)
    eps = (1 - p) / 4
    a = p * hardy_probability_2x2(spec.p1, spec.p2)
    return HardyQuartet.white(eps, a)


def quartet_colored_2x2(spec: SchmidtSpec, p: float) -> HardyQuartet:
    _require_two_qubit(spec)
    p1, p2 = spec.p1, spec.p2
    x2 = (p1 * p2) ** 2
    s2 = (p1 + p2) ** 2
    one_minus = 1 - p1 * p2
    eps1 = (1 - p) / (2 * s2)
    eps2 = (1 - p) * p1 * p2 / (2 * s2 * one_minus)
    eps3 = (1 - 3 * x2 + p * (-8 * x2 * x2 + 5 * x2 - 1)) / (2 * s2 * one_minus ** 2)
    return HardyQuartet.colored(eps1, eps2, eps3)


def sextet_white_highdim(spec: SchmidtSpec, p: float) -> HardyQuartet:
    """White-noise Hardy events on ``C^d1 (x) C^d2``.

    ``P(Y1=+1, X2=0)`` equals ``(1-p)(d2-2)/(d1 d2)`` because the zero-outcome
    projector has rank ``d2 - 2``; it coincides with ``eps`` only for
    ``d2 = 3`` (symmetrically for ``P(X1=0, Y2=+1)``).
    """
    d1, d2 = spec.dims
    eps = (1 - p) / (d1 * d2)
    a = p * hardy_probability(spec.p1, spec.p2)
    return HardyQuartet.highdim(eps, a, (d1, d2))


def closed_form(state: NoisyHardyState) -> HardyQuartet:
    """Closed-form Hardy-event probabilities for the family ``state`` belongs to."""
    if state.noise is NoiseKind.COLORED:
        return quartet_colored_2x2(state.spec, state.p)
    if state.spec.is_two_qubit:
        return quartet_white_2x2(state.spec, state.p)
    return sextet_white_highdim(state.spec, state.p)


def compare_with_born(state: NoisyHardyState, quartet: HardyQuartet | None = None):
    """Rows ``(pair, closed_form, born, |difference|)`` for each constrained event."""
    quartet = quartet or closed_form(state)
    rows = []
    for pair, value in quartet.constraints().items():
        born = born_joint(state, pair)
        rows.append((pair, value, born, abs(value - born)))
    return rows
