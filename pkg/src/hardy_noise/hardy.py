"""Hardy states and the X/Y observables built from their Schmidt weights."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import InvalidInput, InvalidSpec
from .qstate import projector, tensor

Setting = Literal["X", "Y"]
SETTINGS: tuple[str, str] = ("X", "Y")

DEGENERACY_GUARD = 1e-9
WEIGHT_NORM_ATOL = 1e-12

#: p1 * p2 at which the pure-state Hardy probability is largest.
HARDY_MAX_PRODUCT = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class SchmidtSpec:
    """Local dimensions and Schmidt weights ``p_1 .. p_r`` of a Hardy state.

    The weights are amplitudes, not probabilities: ``sum(p_i**2) == 1``.
    """

    d1: int
    d2: int
    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        w = self.weights
        if int(self.d1) != self.d1 or int(self.d2) != self.d2 or self.d1 < 2 or self.d2 < 2:
            raise InvalidSpec("local dimensions must be integers >= 2", f"d1={self.d1}, d2={self.d2}")
        if len(w) < 2:
            raise InvalidSpec("need at least two Schmidt weights", f"r={len(w)}")
        if len(w) > min(self.d1, self.d2):
            raise InvalidSpec("too many Schmidt weights", f"r={len(w)} > min(d1, d2)={min(self.d1, self.d2)}")
        if not all(math.isfinite(x) and x > 0 for x in w):
            raise InvalidSpec("weights must be strictly positive", f"weights={w}")
        norm_dev = abs(math.fsum(x * x for x in w) - 1.0)
        if norm_dev > WEIGHT_NORM_ATOL:
            raise InvalidSpec("sum of squared weights != 1", f"deviation {norm_dev:.3e}")
        if abs(w[0] - w[1]) < DEGENERACY_GUARD:
            raise InvalidSpec("p1 = p2", f"|p1-p2|={abs(w[0] - w[1]):.3e} < {DEGENERACY_GUARD:g}")

    @property
    def p1(self) -> float:
        return self.weights[0]

    @property
    def p2(self) -> float:
        return self.weights[1]

    @property
    def dims(self) -> tuple[int, int]:
        return (self.d1, self.d2)

    @property
    def is_two_qubit(self) -> bool:
        return self.d1 == 2 and self.d2 == 2

    @classmethod
    def two_qubit(cls, p1: float, p2: float | None = None) -> SchmidtSpec:
        if p2 is None:
            p2 = math.sqrt(max(0.0, 1.0 - p1 * p1))
        return cls(2, 2, (p1, p2))

    @classmethod
    def from_squared(cls, squared, d1: int = 2, d2: int = 2) -> SchmidtSpec:
        """Build from squared weights; the last one may be omitted when the rest sum below 1."""
        sq = [float(s) for s in squared]
        if len(sq) == 1 or (math.fsum(sq) < 1.0 - WEIGHT_NORM_ATOL and len(sq) < min(d1, d2)):
            sq.append(1.0 - math.fsum(sq))
        if any(s < 0 for s in sq):
            raise InvalidSpec("squared weights must be nonnegative", f"{sq}")
        return cls(d1, d2, tuple(math.sqrt(s) for s in sq))

    @classmethod
    def hardy_max(cls) -> SchmidtSpec:
        """Two-qubit state with ``p1 p2 = (3 - sqrt 5)/2`` and ``p1 > p2``."""
        x = HARDY_MAX_PRODUCT
        s, d = math.sqrt(1 + 2 * x), math.sqrt(1 - 2 * x)
        return cls(2, 2, ((s + d) / 2, (s - d) / 2))


def hardy_state(spec: SchmidtSpec) -> np.ndarray:
    """``sum_i p_i |i-1> (x) |i-1>`` in the computational basis."""
    psi = np.zeros(spec.d1 * spec.d2, dtype=np.complex128)
    for i, w in enumerate(spec.weights):
        psi[i * spec.d2 + i] = w
    return psi / np.linalg.norm(psi)


def _check_weights(p1: float, p2: float) -> None:
    if not (p1 > 0 and p2 > 0) or not (math.isfinite(p1) and math.isfinite(p2)):
        raise InvalidInput(f"basis weights must be positive and finite, got p1={p1}, p2={p2}")


def x_change_of_basis(p1: float, p2: float) -> np.ndarray:
    """Rows are the amplitudes of ``|x+>`` and ``|x->`` on ``|0>, |1>``."""
    _check_weights(p1, p2)
    a, b = math.sqrt(p2), math.sqrt(p1)
    return np.array([[a, -1j * b], [-1j * b, a]]) / math.sqrt(p1 + p2)


def y_change_of_basis(p1: float, p2: float) -> np.ndarray:
    """Rows are the amplitudes of ``|y+>`` and ``|y->`` on ``|0>, |1>``."""
    _check_weights(p1, p2)
    a, b = p2 * math.sqrt(p2), p1 * math.sqrt(p1)
    norm = math.sqrt((p1 * p1 + p2 * p2 - p1 * p2) * (p1 + p2))
    return np.array([[-1j * a, b], [b, -1j * a]]) / norm


def x_basis(p1: float, p2: float) -> tuple[np.ndarray, np.ndarray]:
    u = x_change_of_basis(p1, p2)
    return u[0].copy(), u[1].copy()


def y_basis(p1: float, p2: float) -> tuple[np.ndarray, np.ndarray]:
    u = y_change_of_basis(p1, p2)
    return u[0].copy(), u[1].copy()


@dataclass(frozen=True, eq=False)
class Observable:
    """A local X or Y measurement: eigenvalue -> projector on the party's space.

    The eigenvalue 0 (projector onto ``|2>, |3>, ...``) exists only when the
    local dimension exceeds 2.
    """

    party: int
    kind: str
    projectors: dict[int, np.ndarray] = field(repr=False)

    @property
    def eigenvalues(self) -> tuple[int, ...]:
        return tuple(self.projectors)

    @property
    def dim(self) -> int:
        return next(iter(self.projectors.values())).shape[0]

    def operator(self) -> np.ndarray:
        return sum(ev * P for ev, P in self.projectors.items())


def _embed(v2: np.ndarray, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[:2] = v2
    return v


def observable(party: int, kind: str, spec: SchmidtSpec) -> Observable:
    if party not in (1, 2):
        raise InvalidInput(f"party must be 1 or 2, got {party!r}")
    if kind not in SETTINGS:
        raise InvalidInput(f"kind must be 'X' or 'Y', got {kind!r}")
    dim = spec.d1 if party == 1 else spec.d2
    plus, minus = (x_basis if kind == "X" else y_basis)(spec.p1, spec.p2)
    projectors = {
        +1: projector(_embed(plus, dim)),
        -1: projector(_embed(minus, dim)),
    }
    if dim > 2:
        zero = np.zeros((dim, dim), dtype=np.complex128)
        zero[2:, 2:] = np.eye(dim - 2)
        projectors[0] = zero
    for P in projectors.values():
        P.setflags(write=False)
    return Observable(party, kind, projectors)


def outcome_set(dim: int) -> tuple[int, ...]:
    """Outcomes of the X/Y observables on a space of dimension ``dim``."""
    return (+1, -1, 0) if dim > 2 else (+1, -1)


def joint_projector(obs_a: Observable, outcome_a: int, obs_b: Observable, outcome_b: int) -> np.ndarray:
    return tensor(obs_a.projectors[outcome_a], obs_b.projectors[outcome_b])
