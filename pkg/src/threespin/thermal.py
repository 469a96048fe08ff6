"""Gibbs states, reduced pair states and pairwise concurrence (k_B = 1)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BadIndex, NonPositiveTemperature, PathMismatch, ZeroCoupling
from .linalg import eigh_symmetric, partial_trace, wootters_concurrence
from .model import (
    COMPLEMENT,
    ModelParams,
    analytic_spectrum,
    build_hamiltonian,
    check_pair,
    level_energies,
)

AGREEMENT_TOL = 1e-8
MISMATCH_TOL = 1e-6
DEGENERACY_RTOL = 1e-9


def _check_temperature(T: float) -> None:
    if not T > 0:
        raise NonPositiveTemperature(f"temperature must be positive, got {T!r}")


def gibbs_state(H: np.ndarray, T: float) -> np.ndarray:
    """exp(-H/T) / Z via the spectral decomposition of H.

    Exponents are shifted by the lowest eigenvalue so the largest Boltzmann
    weight is exactly 1 and nothing overflows at small T.
    """
    _check_temperature(T)
    dec = eigh_symmetric(H)
    weights = np.exp(-(dec.values - dec.values[0]) / T)
    weights /= weights.sum()
    rho = (dec.vectors * weights) @ dec.vectors.T
    rho = 0.5 * (rho + rho.T)
    return rho / np.trace(rho)


def reduced_pair_state(rho: np.ndarray, pair: int) -> np.ndarray:
    """Trace out the qubit not in ``pair`` (12 -> 3, 23 -> 1, 13 -> 2)."""
    check_pair(pair)
    return partial_trace(rho, COMPLEMENT[pair])


@dataclass(frozen=True)
class XStateParams:
    """Weights of the pair-13 X state, ``rho13 = [[u,0,0,0],[0,w,y,0],[0,y,w,0],[0,0,0,v]] / Z``.

    All five numbers carry a common factor ``exp(e0 * beta)`` (``e0`` the
    ground energy); only their ratios are meaningful, which is all that the
    concurrence and the reduced state need.
    """

    u: float
    v: float
    w: float
    y: float
    Z: float
    beta: float

    def matrix(self) -> np.ndarray:
        u, v, w, y, Z = self.u, self.v, self.w, self.y, self.Z
        return np.array([[u, 0, 0, 0], [0, w, y, 0], [0, y, w, 0], [0, 0, 0, v]]) / Z


def xstate_closed_form(p: ModelParams, T: float) -> XStateParams:
    """Closed-form X-state weights of the alternate pair (1, 3) at temperature T.

    The off-diagonal-block weight is fixed by the trace, ``w = y + 2 cosh((h - 2k) beta)``.
    """
    _check_temperature(T)
    J, h, k = p.J, p.h, p.k
    if J == 0:
        raise ZeroCoupling("closed-form weights need J != 0")
    beta = 1.0 / T
    a = p.a
    energies = level_energies(J, h, k)
    e0 = float(energies.min())
    # b[i] = exp(-(eps_i - e0) * beta) <= 1
    b = np.exp(-(energies - e0) * beta)
    b1, b2, b3, b4, b5, b6, b7, b8 = b
    plus, minus = (a + k) / (2 * a), (a - k) / (2 * a)
    # e^{(h+k-a)b} = b7, e^{(h+k+a)b} = b5, e^{-(h+k-a)b} = b6, e^{-(h+k+a)b} = b8
    u = b1 + plus * b7 + minus * b5
    v = b2 + plus * b6 + minus * b8
    # cosh((h+k+a)b) -> (b5 + b8)/2, cosh((h+k-a)b) -> (b7 + b6)/2, cosh((h-2k)b) -> (b3 + b4)/2
    cosh_32 = 0.5 * (b3 + b4)
    y = 0.5 * plus * (b5 + b8) + 0.5 * minus * (b7 + b6) - cosh_32
    Z = u + v + 2 * y + 4 * cosh_32
    w = y + 2 * cosh_32
    return XStateParams(float(u), float(v), float(w), float(y), float(Z), beta)


def concurrence_from_xstate(x: XStateParams) -> float:
    return 2.0 / x.Z * max(abs(x.y) - math.sqrt(x.u * x.v), 0.0)


def degenerate_ground_mixture(p: ModelParams, level_indices: Iterable[int], pair: int) -> np.ndarray:
    """Equal-weight mixture of analytic levels, reduced to ``pair``."""
    check_pair(pair)
    indices = sorted(set(level_indices))
    if not indices:
        raise BadIndex("need at least one level index")
    for i in indices:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= 8:
            raise BadIndex(f"level index must be in 1..8, got {i!r}")
    spec = analytic_spectrum(p)
    rho = np.zeros((8, 8))
    for i in indices:
        s = spec.levels[i - 1].state
        rho += np.outer(s, s)
    return reduced_pair_state(rho / len(indices), pair)


@dataclass(frozen=True)
class ThermalPoint:
    params: ModelParams
    T: float
    pair: int
    concurrence: float
    numeric: float
    closed_form: float | None = None
    xstate: XStateParams | None = None


def numeric_concurrence(p: ModelParams, T: float, pair: int) -> float:
    rho = gibbs_state(build_hamiltonian(p), T)
    return wootters_concurrence(reduced_pair_state(rho, pair))


def thermal_concurrence(p: ModelParams, T: float, pair: int = 13) -> ThermalPoint:
    """Concurrence of ``pair`` in the Gibbs state.

    The numeric route (diagonalise, Gibbs, partial trace, Wootters) always
    runs. For pair 13 with ``J != 0`` the closed form runs too and the two
    must agree.
    """
    check_pair(pair)
    _check_temperature(T)
    c_num = numeric_concurrence(p, T, pair)
    if pair != 13 or p.J == 0:
        return ThermalPoint(p, T, pair, c_num, c_num)
    x = xstate_closed_form(p, T)
    c_cf = concurrence_from_xstate(x)
    if abs(c_cf - c_num) > MISMATCH_TOL:
        raise PathMismatch(
            f"closed form {c_cf!r} vs numeric {c_num!r} at {p}, T={T}, pair={pair}"
        )
    return ThermalPoint(p, T, pair, c_cf, c_num, c_cf, x)


def ground_levels(p: ModelParams, rtol: float = DEGENERACY_RTOL) -> list[int]:
    """Indices (1..8) of the analytic levels degenerate with the minimum."""
    e = level_energies(p.J, p.h, p.k)
    spread = float(e.max() - e.min())
    tol = rtol * spread if spread > 0 else rtol
    return [int(i) + 1 for i in np.flatnonzero(e <= e.min() + tol)]


def zero_T_concurrence(p: ModelParams, pair: int = 13) -> float:
    """T -> 0 limit: pure ground level, or the equal mixture at a crossing."""
    check_pair(pair)
    if p.J == 0:
        raise ZeroCoupling("zero-temperature analysis needs J != 0")
    levels = ground_levels(p)
    if len(levels) == 1:
        lev = analytic_spectrum(p).levels[levels[0] - 1]
        return {13: lev.c13, 12: lev.c12, 23: lev.c23}[pair]
    return wootters_concurrence(degenerate_ground_mixture(p, levels, pair))
