"""Local deterministic hidden-variable models for two parties with settings X, Y.

A behavior (or a partial list of its entries) is locally explicable iff it is
a convex combination of the behaviors induced by deterministic strategies.
:func:`lhv_feasible` decides that with a linear program over the strategy
weights; :func:`hardy_inequality` evaluates the closed-form necessary
condition obtained from the set-measure relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np
from scipy.optimize import linprog

from .errors import ConsistencyError, InvalidInput
from .probabilities import XX, XY, Y0, YX, YY, ZY, HardyQuartet, OutcomePair, Variant

FEASIBILITY_ATOL = 1e-9
SLACK_ATOL = 1e-12

TWO_OUTCOMES = (+1, -1)
THREE_OUTCOMES = (+1, -1, 0)


class DeterministicStrategy(NamedTuple):
    """Predetermined outcomes of X and Y for each party."""

    x1: int
    y1: int
    x2: int
    y2: int

    def outcome(self, party: int, setting: str) -> int:
        if party == 1:
            return self.x1 if setting == "X" else self.y1
        return self.x2 if setting == "X" else self.y2

    def predicts(self, pair: OutcomePair) -> bool:
        return self.outcome(1, pair.setting_a) == pair.outcome_a and self.outcome(2, pair.setting_b) == pair.outcome_b


def enumerate_strategies(outcomes1: Iterable[int] = TWO_OUTCOMES,
                         outcomes2: Iterable[int] = TWO_OUTCOMES) -> list[DeterministicStrategy]:
    o1, o2 = tuple(outcomes1), tuple(outcomes2)
    if not o1 or not o2:
        raise InvalidInput("outcome sets must be nonempty")
    if len(set(o1)) != len(o1) or len(set(o2)) != len(o2):
        raise InvalidInput("outcome sets must not repeat values")
    return [DeterministicStrategy(*s) for s in itertools.product(o1, o1, o2, o2)]


@dataclass(frozen=True)
class BehaviorConstraints:
    """Equality constraints ``P(pair) = value`` to be reproduced by an LHV model.

    ``full`` marks a table that constrains every setting/outcome combination.
    """

    entries: tuple[tuple[OutcomePair, float], ...]
    full: bool = False

    def __post_init__(self):
        seen = set()
        for pair, value in self.entries:
            if pair in seen:
                raise InvalidInput(f"duplicated constraint for {pair}")
            seen.add(pair)
            if not (0.0 <= value <= 1.0):
                raise InvalidInput(f"constraint value {value} for {pair} outside [0, 1]")

    @classmethod
    def from_mapping(cls, table: Mapping[OutcomePair, float], full: bool = False) -> BehaviorConstraints:
        return cls(tuple((OutcomePair(*k), float(v)) for k, v in table.items()), full=full)

    @classmethod
    def from_quartet(cls, quartet: HardyQuartet) -> BehaviorConstraints:
        # closed forms may round a hair below zero
        return cls.from_mapping({k: min(max(v, 0.0), 1.0) for k, v in quartet.constraints().items()})

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    max_violation: float
    weights: dict[DeterministicStrategy, float] | None = field(default=None, repr=False)


def _strategy_matrix(pairs, strategies) -> np.ndarray:
    return np.array([[1.0 if s.predicts(pair) else 0.0 for s in strategies] for pair in pairs])


def lhv_feasible(constraints: BehaviorConstraints,
                 outcomes1: Iterable[int] = TWO_OUTCOMES,
                 outcomes2: Iterable[int] = TWO_OUTCOMES,
                 atol: float = FEASIBILITY_ATOL) -> FeasibilityResult:
    """Decide whether a mixture of deterministic strategies matches every constraint.

    Solves ``min t`` subject to ``w >= 0``, ``sum(w) = 1`` and
    ``|M w - b| <= t`` entrywise, where ``M[k, s] = 1`` iff strategy ``s``
    produces event ``k``. The optimum ``t`` is the best achievable worst-case
    residual; the instance is feasible iff the returned weights reproduce all
    constraints within ``atol``.
    """
    strategies = enumerate_strategies(outcomes1, outcomes2)
    o1, o2 = set(outcomes1), set(outcomes2)
    for pair, _ in constraints.entries:
        if pair.outcome_a not in o1 or pair.outcome_b not in o2:
            raise InvalidInput(f"{pair} uses an outcome outside the given outcome sets")
    n = len(strategies)
    if not constraints.entries:
        w = np.full(n, 1.0 / n)
        return FeasibilityResult(True, 0.0, dict(zip(strategies, w)))

    pairs = [pair for pair, _ in constraints.entries]
    b = np.array([value for _, value in constraints.entries])
    M = _strategy_matrix(pairs, strategies)
    k = len(pairs)

    # variables: [w_1 .. w_n, t]
    c = np.zeros(n + 1)
    c[-1] = 1.0
    A_ub = np.block([[M, -np.ones((k, 1))], [-M, -np.ones((k, 1))]])
    b_ub = np.concatenate([b, -b])
    A_eq = np.concatenate([np.ones(n), [0.0]])[None, :]
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1.0],
                  bounds=[(0, None)] * (n + 1), method="highs",
                  options={"primal_feasibility_tolerance": 1e-10,
                           "dual_feasibility_tolerance": 1e-10})
    if res.status != 0:
        raise ConsistencyError(f"LP solver failed: {res.message}")

    w = np.clip(res.x[:n], 0.0, None)
    w /= w.sum()
    residual = float(np.max(np.abs(M @ w - b)))
    best = max(residual, float(res.x[-1]))
    if residual <= atol:
        return FeasibilityResult(True, residual, dict(zip(strategies, w)))
    return FeasibilityResult(False, best, None)


def quartet_feasibility(quartet: HardyQuartet, atol: float = FEASIBILITY_ATOL) -> FeasibilityResult:
    """LP test of only the constrained Hardy events of ``quartet``."""
    d1, d2 = quartet.dims
    o1 = THREE_OUTCOMES if d1 > 2 else TWO_OUTCOMES
    o2 = THREE_OUTCOMES if d2 > 2 else TWO_OUTCOMES
    return lhv_feasible(BehaviorConstraints.from_quartet(quartet), o1, o2, atol=atol)


@dataclass(frozen=True)
class MeasureConstraintSet:
    """Values forced on the hidden-variable measure of the sets

    ``A = {X1 = +1}``, ``B = {X2 = +1}``, ``C = {Y1 = +1}``, ``D = {Y2 = +1}``.
    """

    a_and_b: float
    c_minus_b_and_c: float
    d_minus_a_and_d: float
    c_and_d: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a_and_b, self.c_minus_b_and_c, self.d_minus_a_and_d, self.c_and_d)

    @staticmethod
    def measured(weights: Mapping[DeterministicStrategy, float]) -> MeasureConstraintSet:
        """The same four quantities evaluated on an explicit strategy mixture."""
        def mu(pred):
            return sum(w for s, w in weights.items() if pred(s))

        return MeasureConstraintSet(
            mu(lambda s: s.x1 == 1 and s.x2 == 1),
            mu(lambda s: s.y1 == 1) - mu(lambda s: s.x2 == 1 and s.y1 == 1),
            mu(lambda s: s.y2 == 1) - mu(lambda s: s.x1 == 1 and s.y2 == 1),
            mu(lambda s: s.y1 == 1 and s.y2 == 1),
        )


def measure_constraints(quartet: HardyQuartet) -> MeasureConstraintSet:
    """Translate Hardy-event probabilities into constraints on set measures.

    ``mu[C] - mu[B & C]`` is the measure of ``{Y1 = +1, X2 != +1}``, i.e. the
    sum of ``P(Y1=+1, X2=-1)`` and ``P(Y1=+1, X2=0)``; the latter is absent for
    two-outcome observables and equals ``eps`` in a 3x3 space, giving ``2 eps``.
    """
    c = quartet.constraints()
    if quartet.variant is Variant.WHITE_HIGHDIM:
        return MeasureConstraintSet(c[XX], c[YX] + c.get(Y0, 0.0), c[XY] + c.get(ZY, 0.0), c[YY])
    return MeasureConstraintSet(c[XX], c[YX], c[XY], c[YY])


@dataclass(frozen=True)
class InequalityResult:
    satisfied: bool
    slack: float

    @property
    def boundary(self) -> bool:
        return abs(self.slack) <= FEASIBILITY_ATOL


def hardy_inequality(quartet: HardyQuartet) -> InequalityResult:
    """Necessary condition for a local model of the Hardy events.

    Since ``C & D`` is contained in ``(A & B) | (C - B) | (D - A)``, every local
    model obeys ``mu[C & D] <= mu[A & B] + (mu[C] - mu[B & C]) + (mu[D] - mu[A & D])``.
    The slack of that inequality is ``2 eps - a`` for white noise on two qubits,
    ``eps1 + 2 eps2 - eps3`` for colored noise and ``4 eps - a`` for white noise
    on two qutrits (``(d1 + d2 - 2) eps - a`` in general).
    """
    m = measure_constraints(quartet)
    slack = m.a_and_b + m.c_minus_b_and_c + m.d_minus_a_and_d - m.c_and_d
    return InequalityResult(slack >= -SLACK_ATOL, float(slack))


def nominal_slack(quartet: HardyQuartet) -> float:
    """Slack in the family's own parameters.

    For the high-dimensional white family this is ``4 eps - a`` whatever the
    dimensions, i.e. it assumes both zero-outcome events have probability
    ``eps``. That holds exactly for ``d1 = d2 = 3``.
    """
    if quartet.variant is Variant.WHITE_2X2:
        return 2 * quartet.eps - quartet.a
    if quartet.variant is Variant.COLORED_2X2:
        return quartet.eps1 + 2 * quartet.eps2 - quartet.eps3
    return 4 * quartet.eps - quartet.a
