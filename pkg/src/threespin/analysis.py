"""Ground-state structure in h, dip and boot heights, and grid sweeps.

Every level energy is affine in the field, ``eps_i(h) = slope_i * h +
offset_i(J, k)``, so the zero-temperature phase structure along h is the
lower envelope of eight lines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ZeroCoupling
from .linalg import eigh_symmetric, wootters_concurrence
from .model import ModelParams, _hamiltonian_terms, build_hamiltonian, check_pair
from .thermal import (
    degenerate_ground_mixture,
    ground_levels,
    thermal_concurrence,
    zero_T_concurrence,
)

SLOPES = np.array([-3.0, 3.0, 1.0, -1.0, -1.0, 1.0, -1.0, 1.0])
MERGE_TOL = 1e-12


def _need_coupling(J: float) -> None:
    if J == 0:
        raise ZeroCoupling("ground-state analysis needs J != 0")


def _offsets(J: float, k: float) -> np.ndarray:
    a = math.sqrt(8 * J * J + k * k)
    return np.array([0.0, 0.0, -2 * k, 2 * k, -k - a, k - a, -k + a, k + a])


@dataclass(frozen=True)
class PhaseSegment:
    h_lo: float
    h_hi: float
    ground_levels: tuple[int, ...]
    pair_c13: float


def crossing_points(J: float, k: float, h_range: tuple[float, float] = (-math.inf, math.inf)) -> list[float]:
    """Sorted, merged abscissae where any two level lines intersect."""
    off = _offsets(J, k)
    lo, hi = h_range
    pts = []
    for i in range(8):
        for j in range(i):
            ds = SLOPES[i] - SLOPES[j]
            if ds == 0:
                continue
            h = (off[j] - off[i]) / ds
            if lo < h < hi:
                pts.append(float(h))
    pts.sort()
    merged: list[float] = []
    for h in pts:
        if merged and abs(h - merged[-1]) <= MERGE_TOL * max(1.0, abs(h)):
            continue
        merged.append(h)
    return merged


def _envelope_argmin(J: float, k: float, h: float) -> tuple[int, ...]:
    return tuple(int(i) for i in ground_levels(ModelParams(J, h, k)))


def ground_segments(
    J: float, k: float, h_range: tuple[float, float] = (-math.inf, math.inf)
) -> list[PhaseSegment]:
    """Lower envelope of the level lines over ``h_range``.

    Each segment lists the levels that are lowest on its open interval and
    the zero-temperature pair-13 concurrence there. Consecutive segments
    share one boundary, a ground-state level crossing.
    """
    _need_coupling(J)
    lo, hi = h_range
    if not lo < hi:
        raise ValueError(f"empty field range {h_range}")
    cuts = [lo] + crossing_points(J, k, h_range) + [hi]
    raw: list[tuple[float, float, tuple[int, ...]]] = []
    for left, right in zip(cuts[:-1], cuts[1:]):
        levels = _envelope_argmin(J, k, _probe(left, right))
        if raw and raw[-1][2] == levels:
            raw[-1] = (raw[-1][0], right, levels)
        else:
            raw.append((left, right, levels))

    segments = []
    for left, right, levels in raw:
        probe = _probe(left, right)
        c13 = zero_T_concurrence(ModelParams(J, probe, k), 13)
        segments.append(PhaseSegment(left, right, levels, c13))
    return segments


def _probe(left: float, right: float) -> float:
    if math.isinf(left) and math.isinf(right):
        return 0.0
    if math.isinf(left):
        return right - 1.0
    if math.isinf(right):
        return left + 1.0
    return 0.5 * (left + right)


@dataclass(frozen=True)
class DipResult:
    k: float
    h_dip: float
    c_dip: float
    crossing_levels: tuple[int, ...]


def _dip_unit(kr: float) -> tuple[float, float]:
    """(h_dip, c_dip) for J = 1 and k >= 0 on the alternate pair."""
    if kr < 1.0:
        return -kr, 0.5 - math.sqrt(2) / math.sqrt(kr * kr + 8)
    if kr == 1.0:
        return -1.0, 0.0
    root = math.sqrt(kr * kr + 8)
    return 0.5 * (kr - root), 0.25 * (1 - kr / root)


def dip(k: float, J: float = 1.0, pair: int = 13) -> DipResult:
    """Location and T -> 0 concurrence of the dip between the two boots.

    For ``0 <= k < |J|`` the dip sits on the crossing of levels 5 and 6 at
    ``h = -k``; at ``k = |J|`` it is the four-fold point of levels 2, 3, 5, 6
    and is assigned zero concurrence; for ``k > |J|`` it is the crossing of
    levels 3 and 5. Negative k is the spin-flipped picture (h -> -h).
    """
    _need_coupling(J)
    check_pair(pair)
    scale = abs(J)
    kr = abs(k) / scale
    h_unit, c_unit = _dip_unit(kr)
    h_dip = (-1.0 if k < 0 else 1.0) * h_unit * scale
    levels = tuple(int(i) for i in ground_levels(ModelParams(J, h_dip, k)))
    if pair == 13:
        c_dip = c_unit
    elif kr == 1.0:
        c_dip = 0.0
    else:
        c_dip = wootters_concurrence(degenerate_ground_mixture(ModelParams(J, h_dip, k), levels, pair))
    return DipResult(k, h_dip, c_dip, levels)


@dataclass(frozen=True)
class BootHeights:
    k: float
    pair: int
    c_plus: float
    c_minus: float


def boot_heights(k: float, J: float = 1.0, pair: int = 13) -> BootHeights:
    """T -> 0 heights of the boots on the positive and negative field side."""
    _need_coupling(J)
    check_pair(pair)
    if k < 0:
        mirror = boot_heights(-k, J, pair)
        return BootHeights(k, pair, mirror.c_minus, mirror.c_plus)
    a = math.sqrt(8 * J * J + k * k)
    kr = k / abs(J)
    if pair == 13:
        c_plus = 4 * J * J / (a * (a - k))
        if kr < 1:
            c_minus = 4 * J * J / (a * (a + k))
        elif kr == 1:
            c_minus = 0.0
        else:
            c_minus = 1.0
    else:
        c_plus = 2 * abs(J) / a
        c_minus = c_plus if kr < 1 else 0.0
    return BootHeights(k, pair, c_plus, c_minus)


@dataclass(frozen=True)
class MutationScan:
    J: float
    eps: float
    c_dip_below: float
    c_dip_at: float
    c_dip_above: float
    h_dip_below: float
    h_dip_at: float
    h_dip_above: float


def mutation_scan(J: float = 1.0, eps: float = 1e-6, sign: int = 1) -> MutationScan:
    """Dip just below, at and just above ``|k| = |J|`` (``sign`` picks k > 0 or k < 0)."""
    _need_coupling(J)
    if not 0 < eps <= 1e-3:
        raise ValueError(f"eps must be in (0, 1e-3], got {eps!r}")
    s = 1.0 if sign >= 0 else -1.0
    ks = [s * abs(J) * (1 - eps), s * abs(J), s * abs(J) * (1 + eps)]
    d = [dip(kk, J) for kk in ks]
    return MutationScan(
        J, eps, d[0].c_dip, d[1].c_dip, d[2].c_dip, d[0].h_dip, d[1].h_dip, d[2].h_dip
    )


def grid(lo: float, hi: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise ValueError("a grid needs at least 2 points")
    if not lo < hi:
        raise ValueError(f"grid needs lo < hi, got ({lo}, {hi})")
    return np.linspace(lo, hi, steps)


def sweep(
    J: float,
    k: float,
    pair: int,
    h_grid: tuple[float, float, int],
    T_grid: tuple[float, float, int],
) -> list[tuple[float, float, float]]:
    """Rows ``(h, T, C)`` over the grid, h outer and T inner, both ascending."""
    check_pair(pair)
    hs = grid(*h_grid)
    Ts = grid(*T_grid)
    if Ts[0] <= 0:
        raise ValueError("temperatures must be positive")
    rows = []
    for h in hs:
        p = ModelParams(J, float(h), k)
        for T in Ts:
            rows.append((float(h), float(T), thermal_concurrence(p, float(T), pair).concurrence))
    return rows


def dip_curve(
    k_grid: tuple[float, float, int], J: float = 1.0, pair: int = 13
) -> list[tuple[float, float, float, float, float]]:
    """Rows ``(k, h_dip, c_dip, c_plus, c_minus)`` across a k grid."""
    _need_coupling(J)
    rows = []
    for k in grid(*k_grid):
        k = float(k)
        d = dip(k, J, pair)
        b = boot_heights(k, J, pair)
        rows.append((k, d.h_dip, d.c_dip, b.c_plus, b.c_minus))
    return rows


@dataclass(frozen=True)
class ScannedDip:
    """Numeric dip search at finite temperature.

    ``h_min``/``c_min`` are the raw grid argmin and minimum. Because C
    actually touches zero a distance O(T) away from the level crossing,
    the raw minimum is not the T -> 0 dip value; ``h_crossing`` is the
    numerically located crossing next to the argmin and ``c_crossing`` the
    concurrence there at the same temperature.
    """

    k: float
    T: float
    step: float
    h_min: float
    c_min: float
    h_crossing: float
    c_crossing: float


def _ground_line(J: float, k: float, h: float) -> tuple[float, float]:
    """Numeric ground energy and its field derivative (Hellmann-Feynman)."""
    dec = eigh_symmetric(build_hamiltonian(ModelParams(J, h, k)))
    psi = dec.vectors[:, 0]
    field = _hamiltonian_terms()[1]
    return float(dec.values[0]), float(psi @ field @ psi)


def locate_crossing(J: float, k: float, h_left: float, h_right: float) -> float | None:
    """Field of the single ground-state level crossing inside ``(h_left, h_right)``.

    Intersects the numeric ground-energy tangents at both ends. Returns None
    when both ends sit on the same level line.
    """
    e_l, s_l = _ground_line(J, k, h_left)
    e_r, s_r = _ground_line(J, k, h_right)
    if abs(s_l - s_r) < 1e-6:
        return None
    return (e_r - s_r * h_right - e_l + s_l * h_left) / (s_l - s_r)


def scan_dip(
    k: float,
    J: float = 1.0,
    T: float = 1e-3,
    window: tuple[float, float] | None = None,
    steps: int = 4001,
    pair: int = 13,
) -> ScannedDip:
    """Locate the dip by scanning C(h) at temperature T.

    The default window is ``[-|J|, 0]`` for ``k >= 0`` and ``[0, |J|]`` for
    ``k < 0``, which lies between the outer ground-state crossings for any k.
    """
    _need_coupling(J)
    if window is None:
        window = (-abs(J), 0.0) if k >= 0 else (0.0, abs(J))
    hs = grid(window[0], window[1], steps)
    step = float(hs[1] - hs[0])
    cs = np.array([thermal_concurrence(ModelParams(J, float(h), k), T, pair).concurrence for h in hs])
    i = int(np.argmin(cs))
    h_min = float(hs[i])
    h_x = locate_crossing(J, k, h_min - 2 * step, h_min + 2 * step)
    if h_x is None:
        h_x = h_min
    c_x = thermal_concurrence(ModelParams(J, h_x, k), T, pair).concurrence
    return ScannedDip(k, T, step, h_min, float(cs[i]), h_x, c_x)


def envelope_argmin_grid(J: float, k: float, hs: Sequence[float]) -> list[int]:
    """Index (1..8) of the lowest analytic level at each grid point."""
    off = _offsets(J, k)
    return [int(np.argmin(SLOPES * h + off)) + 1 for h in hs]
