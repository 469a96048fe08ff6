"""Three-site spin chain with XX exchange, a z field and a three-spin term.

Basis convention: ket ``|b1 b2 b3>`` has index ``4*b1 + 2*b2 + b3`` and
``sigma_z |1> = +|1>``, ``sigma_z |0> = -|0>``. With this labelling
``|000>`` is the fully polarised state with energy ``-3h``.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadIndex, BadPair, ZeroCoupling
from .linalg import IDENTITY_2, SIGMA_X, kron_all, partial_trace

PAIRS = (12, 23, 13)
# qubit traced out for each pair
COMPLEMENT = {12: 3, 23: 1, 13: 2}

# sigma_z in the (|0>, |1>) ordering used by the model
SZ = np.array([[-1.0, 0.0], [0.0, 1.0]])
# i*sigma_y is real; the sigma_y pairs in the Hamiltonian are assembled as
# -(i sy)(x)(i sy) so that no complex arithmetic is needed.
ISY = np.array([[0.0, 1.0], [-1.0, 0.0]])


def check_pair(pair: int) -> int:
    if pair not in PAIRS:
        raise BadPair(f"pair must be one of {PAIRS}, got {pair!r}")
    return pair


@dataclass(frozen=True)
class ModelParams:
    J: float = 1.0
    h: float = 0.0
    k: float = 0.0

    def __post_init__(self):
        for name in ("J", "h", "k"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def a(self) -> float:
        return math.sqrt(8.0 * self.J**2 + self.k**2)

    def mirrored(self) -> "ModelParams":
        """Parameters under the global spin flip, (h, k) -> (-h, -k)."""
        return ModelParams(self.J, -self.h, -self.k)


def _site_ops(op: np.ndarray) -> list[np.ndarray]:
    ops = []
    for site in range(3):
        factors = [IDENTITY_2] * 3
        factors[site] = op
        ops.append(kron_all(*factors))
    return ops


def _bond(op_a: np.ndarray, op_mid: np.ndarray, op_b: np.ndarray) -> np.ndarray:
    return kron_all(op_a, op_mid, op_b)


@functools.lru_cache(maxsize=None)
def _hamiltonian_terms() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    I = IDENTITY_2
    exchange = (
        _bond(SIGMA_X, SIGMA_X, I)
        - _bond(ISY, ISY, I)
        + _bond(I, SIGMA_X, SIGMA_X)
        - _bond(I, ISY, ISY)
    )
    field = sum(_site_ops(SZ))
    three_spin = _bond(SIGMA_X, SZ, SIGMA_X) - _bond(ISY, SZ, ISY)
    for term in (exchange, field, three_spin):
        term.setflags(write=False)
    return exchange, field, three_spin


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """8x8 real symmetric Hamiltonian for parameters ``p``."""
    exchange, field, three_spin = _hamiltonian_terms()
    return p.J * exchange + p.h * field + p.k * three_spin


def basis_ket(label: str) -> np.ndarray:
    """Computational basis vector for a label such as ``"011"``."""
    if len(label) != 3 or set(label) - {"0", "1"}:
        raise ValueError(f"bad basis label {label!r}")
    v = np.zeros(8)
    v[int(label, 2)] = 1.0
    return v


@dataclass(frozen=True)
class AnalyticLevel:
    index: int
    energy: float
    state: np.ndarray
    c13: float
    c12: float
    c23: float


@dataclass(frozen=True)
class AnalyticSpectrum:
    params: ModelParams
    a: float
    sin_p: float
    cos_p: float
    sin_q: float
    cos_q: float
    levels: tuple[AnalyticLevel, ...]

    @property
    def energies(self) -> np.ndarray:
        return np.array([lev.energy for lev in self.levels])

    def level(self, index: int) -> AnalyticLevel:
        if not 1 <= index <= 8:
            raise BadIndex(f"level index must be in 1..8, got {index!r}")
        return self.levels[index - 1]


def level_energies(J: float, h: float, k: float) -> np.ndarray:
    """The eight eigenvalues, in level order 1..8."""
    a = math.sqrt(8.0 * J * J + k * k)
    return np.array(
        [-3 * h, 3 * h, h - 2 * k, -h + 2 * k, -h - k - a, h + k - a, -h - k + a, h + k + a]
    )


def analytic_spectrum(p: ModelParams) -> AnalyticSpectrum:
    """Closed-form eigenstates, energies and per-level pair concurrences."""
    J, h, k = p.J, p.h, p.k
    if J == 0:
        raise ZeroCoupling("analytic eigenstates need J != 0")
    a = p.a
    sgn = math.copysign(1.0, J)
    norm_p = math.sqrt(8 * J * J + (k - a) ** 2)
    norm_q = math.sqrt(8 * J * J + (k + a) ** 2)
    sin_p = 2 * math.sqrt(2) * abs(J) / norm_p
    cos_p = (k - a) / norm_p
    sin_q = 2 * math.sqrt(2) * abs(J) / norm_q
    cos_q = (k + a) / norm_q
    r2 = 1 / math.sqrt(2)
    ket = basis_ket

    states = [
        ket("000"),
        ket("111"),
        r2 * (-ket("110") + ket("011")),
        r2 * (-ket("100") + ket("001")),
        r2 * sin_p * ket("100") + sgn * cos_p * ket("010") + r2 * sin_p * ket("001"),
        r2 * sin_q * ket("110") - sgn * cos_q * ket("101") + r2 * sin_q * ket("011"),
        r2 * sin_q * ket("100") + sgn * cos_q * ket("010") + r2 * sin_q * ket("001"),
        r2 * sin_p * ket("110") - sgn * cos_p * ket("101") + r2 * sin_p * ket("011"),
    ]
    energies = level_energies(J, h, k)
    c5 = 4 * J * J / (a * (a - k))
    c6 = 4 * J * J / (a * (a + k))
    c13 = [0.0, 0.0, 1.0, 1.0, c5, c6, c6, c5]
    nn = 2 * abs(J) / a
    c12 = [0.0, 0.0, 0.0, 0.0, nn, nn, nn, nn]

    levels = tuple(
        AnalyticLevel(i + 1, float(energies[i]), states[i], c13[i], c12[i], c12[i])
        for i in range(8)
    )
    return AnalyticSpectrum(p, a, sin_p, cos_p, sin_q, cos_q, levels)


def level_pair_concurrence(level: AnalyticLevel, pair: int) -> float:
    check_pair(pair)
    return {13: level.c13, 12: level.c12, 23: level.c23}[pair]


def pure_pair_state(state: np.ndarray, pair: int) -> np.ndarray:
    """Two-qubit reduced state of a three-qubit pure state."""
    check_pair(pair)
    return partial_trace(np.outer(state, state), COMPLEMENT[pair])


def swap_13() -> np.ndarray:
    """Permutation matrix exchanging qubits 1 and 3."""
    perm = np.zeros((8, 8))
    for b in range(8):
        b1, b2, b3 = (b >> 2) & 1, (b >> 1) & 1, b & 1
        perm[4 * b3 + 2 * b2 + b1, b] = 1.0
    return perm


def global_flip() -> np.ndarray:
    """sigma_x on every site."""
    return kron_all(SIGMA_X, SIGMA_X, SIGMA_X)
