"""Hardy states mixed with white or colored noise."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ColoredNoiseRequiresTwoQubits, InvalidInput
from .hardy import SchmidtSpec, hardy_state
from .qstate import DensityOperator, projector, validate_density


class NoiseKind(enum.Enum):
    WHITE = "white"
    COLORED = "colored"


@dataclass(frozen=True, eq=False)
class NoisyHardyState:
    """``rho = p |psi><psi| + (1 - p) * noise``."""

    spec: SchmidtSpec
    noise: NoiseKind
    p: float
    rho: DensityOperator

    @property
    def matrix(self) -> np.ndarray:
        return self.rho.matrix

    @property
    def dims(self) -> tuple[int, int]:
        return self.spec.dims


def _check_p(p: float) -> float:
    p = float(p)
    if not (math.isfinite(p) and 0.0 <= p <= 1.0):
        raise InvalidInput(f"mixing parameter p must lie in [0, 1], got {p}")
    return p


def white_noise(d1: int, d2: int) -> np.ndarray:
    return np.eye(d1 * d2, dtype=np.complex128) / (d1 * d2)


def colored_noise() -> np.ndarray:
    """``(|00><00| + |11><11|) / 2`` on two qubits."""
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = m[3, 3] = 0.5
    return m


def mix_white(spec: SchmidtSpec, p: float) -> NoisyHardyState:
    p = _check_p(p)
    pure = projector(hardy_state(spec))
    rho = p * pure + (1.0 - p) * white_noise(spec.d1, spec.d2)
    return NoisyHardyState(spec, NoiseKind.WHITE, p, validate_density(rho))


def mix_colored(spec: SchmidtSpec, p: float) -> NoisyHardyState:
    if not spec.is_two_qubit:
        raise ColoredNoiseRequiresTwoQubits(
            f"colored noise is defined only for d1 = d2 = 2, got {spec.d1}x{spec.d2}"
        )
    p = _check_p(p)
    pure = projector(hardy_state(spec))
    rho = p * pure + (1.0 - p) * colored_noise()
    return NoisyHardyState(spec, NoiseKind.COLORED, p, validate_density(rho))


def mix(spec: SchmidtSpec, noise: NoiseKind | str, p: float) -> NoisyHardyState:
    noise = NoiseKind(noise)
    return mix_white(spec, p) if noise is NoiseKind.WHITE else mix_colored(spec, p)
