"""Self-verification battery: analytic results against the numeric pipeline.

Each check returns a :class:`CheckResult`; :func:`run_all` runs the whole
battery with a fixed seed so reports are reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import analysis
from .linalg import (
    eigh_symmetric,
    kron,
    partial_trace,
    random_density,
    random_symmetric,
    wootters_concurrence,
)
from .model import (
    ModelParams,
    analytic_spectrum,
    build_hamiltonian,
    global_flip,
    level_energies,
    pure_pair_state,
    swap_13,
)
from .thermal import (
    concurrence_from_xstate,
    gibbs_state,
    ground_levels,
    reduced_pair_state,
    thermal_concurrence,
    xstate_closed_form,
    zero_T_concurrence,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class _Fail(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _Fail(message)


def _random_params(rng: np.random.Generator) -> ModelParams:
    J = 0.0
    while abs(J) < 1e-3:
        J = rng.uniform(-2, 2)
    return ModelParams(J, rng.uniform(-3, 3), rng.uniform(-3, 3))


def check_spectrum(rng, trials):
    worst_e = worst_r = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        H = build_hamiltonian(p)
        spec = analytic_spectrum(p)
        num = eigh_symmetric(H).values
        err = float(np.max(np.abs(np.sort(spec.energies) - num)))
        _require(err <= 1e-10, f"eigenvalue mismatch {err:.3e} at {p}")
        worst_e = max(worst_e, err)
        for lev in spec.levels:
            res = float(np.max(np.abs(H @ lev.state - lev.energy * lev.state)))
            _require(res <= 1e-10, f"level {lev.index} residual {res:.3e} at {p}")
            worst_r = max(worst_r, res)
    return f"max |eps_analytic - eps_numeric| = {worst_e:.2e}, max residual = {worst_r:.2e}"


def check_level_concurrences(rng, trials):
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        spec = analytic_spectrum(p)
        for lev in spec.levels:
            for pair, expected in ((13, lev.c13), (12, lev.c12), (23, lev.c23)):
                got = wootters_concurrence(pure_pair_state(lev.state, pair))
                err = abs(got - expected)
                _require(err <= 1e-10, f"level {lev.index} pair {pair}: {got} vs {expected} at {p}")
                worst = max(worst, err)
        lv = spec.levels
        _require(lv[4].c13 == lv[7].c13 and lv[5].c13 == lv[6].c13, "C5 != C8 or C6 != C7")
    return f"max table error {worst:.2e}"


def check_closed_form_state(rng, trials):
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        T = rng.uniform(0.01, 5)
        x = xstate_closed_form(p, T)
        numeric = reduced_pair_state(gibbs_state(build_hamiltonian(p), T), 13)
        err = float(np.max(np.abs(x.matrix() - numeric)))
        _require(err <= 1e-10, f"entrywise error {err:.3e} at {p}, T={T}")
        z_rel = abs(x.u + x.v + 2 * x.w - x.Z) / x.Z
        _require(z_rel <= 1e-10, f"trace consistency {z_rel:.3e}")
        worst = max(worst, err)
    return f"max entrywise error {worst:.2e}"


def check_level_curves(rng, trials):
    s = analytic_spectrum(ModelParams(1.0, 0.0, 0.0))
    _require(abs(s.levels[4].c13 - 0.5) <= 1e-12 and abs(s.levels[5].c13 - 0.5) <= 1e-12,
             "C5, C6 at k = 0 are not 0.5")
    ks = np.linspace(-5, 5, 1001)
    c5 = np.array([analytic_spectrum(ModelParams(1.0, 0.0, k)).levels[4].c13 for k in ks])
    c6 = np.array([analytic_spectrum(ModelParams(1.0, 0.0, k)).levels[5].c13 for k in ks])
    _require(bool(np.all(np.diff(c5) > 0)), "C5 not increasing")
    _require(bool(np.all(np.diff(c6) < 0)), "C6 not decreasing")
    return f"C5(0) = {c5[500]:.12f}, C5 in [{c5[0]:.4f}, {c5[-1]:.4f}]"


def _scan_check(ks, steps, T, check_value):
    lines = []
    for k in ks:
        d = analysis.dip(k)
        s = analysis.scan_dip(k, T=T, steps=steps)
        dist = abs(s.h_min - d.h_dip)
        _require(dist <= s.step * (1 + 1e-9), f"k={k}: argmin {s.h_min} vs {d.h_dip}")
        _require(abs(s.h_crossing - d.h_dip) <= s.step, f"k={k}: crossing {s.h_crossing}")
        err = abs(s.c_crossing - d.c_dip)
        _require(err <= 5e-3, f"k={k}: C at dip {s.c_crossing} vs {d.c_dip}")
        check_value(k, d)
        lines.append(f"k={k}: dh={dist:.1e} dC={err:.1e}")
    return "; ".join(lines)


def check_dip_below(rng, trials, steps=801):
    return _scan_check([0.1, 0.3, 0.5, 0.7, 0.9], steps, 1e-3, lambda k, d: None)


def check_mutation(rng, trials):
    m = analysis.mutation_scan(1.0, 1e-6)
    target = (0.5 - math.sqrt(2) / 3, 0.0, 1 / 6)
    got = (m.c_dip_below, m.c_dip_at, m.c_dip_above)
    for g, t in zip(got, target):
        _require(abs(g - t) <= 1e-4, f"mutation triple {got} vs {target}")
    mn = analysis.mutation_scan(-1.0, 1e-6, sign=-1)
    _require(abs(mn.h_dip_at - 1.0) <= 1e-12, "mirror mutation not at h = +1")
    return "triple = " + ", ".join(f"{g:.7f}" for g in got)


def check_peak(rng, trials):
    p = ModelParams(1.0, -1.2, 1.5)
    c = thermal_concurrence(p, 0.01).concurrence
    _require(c >= 0.999, f"peak concurrence {c}")
    _require(ground_levels(p) == [3], "ground state at the peak is not level 3")
    c0 = zero_T_concurrence(p)
    _require(c0 == 1.0, f"zero-T peak {c0}")
    return f"C(T=0.01) = {c:.6f}, C(T->0) = {c0}"


def check_dip_above(rng, trials, steps=801):
    ks = [1.5, 2.0, 3.0, 10.0]

    def value_check(k, d):
        _require(d.h_dip < 0, f"h_dip({k}) = {d.h_dip} is not negative")

    detail = _scan_check(ks, steps, 1e-3, value_check)
    hd = [analysis.dip(k).h_dip for k in ks + [100.0, 1e4]]
    _require(all(b > a for a, b in zip(hd, hd[1:])) and hd[-1] < 0, f"h_dip not rising to 0-: {hd}")
    _require(abs(analysis.dip(10.0).h_dip + 0.19615242) < 1e-7, "h_dip(10) != -0.19615")
    return detail


def check_symmetries(rng, trials):
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        T = rng.uniform(0.05, 5)
        c = thermal_concurrence(p, T, 13).concurrence
        pairs = [
            (c, thermal_concurrence(ModelParams(-p.J, p.h, p.k), T, 13).concurrence, "J sign"),
            (c, thermal_concurrence(p.mirrored(), T, 13).concurrence, "mirror"),
            (thermal_concurrence(p, T, 12).concurrence, thermal_concurrence(p, T, 23).concurrence, "12 vs 23"),
            (
                thermal_concurrence(ModelParams(p.J, p.h, 0.0), T, 13).concurrence,
                thermal_concurrence(ModelParams(p.J, -p.h, 0.0), T, 13).concurrence,
                "h -> -h at k = 0",
            ),
        ]
        for x, y, label in pairs:
            _require(abs(x - y) <= 1e-10, f"{label}: {x} vs {y} at {p}, T={T}")
            worst = max(worst, abs(x - y))
    return f"max deviation {worst:.2e}"


def check_nearest_neighbour(rng, trials):
    ks = np.linspace(0, 10, 201)
    cp = [analysis.boot_heights(k, 1.0, 12).c_plus for k in ks]
    _require(all(b < a for a, b in zip(cp, cp[1:])), "c_plus for pair 12 not decreasing")
    for k, c in zip(ks, cp):
        _require(abs(c - 2 / math.sqrt(8 + k * k)) <= 1e-12, f"c_plus({k}) = {c}")
    c100 = analysis.boot_heights(100.0, 1.0, 12).c_plus
    _require(abs(c100 - 0.0200) < 5e-5, f"c_plus(100) = {c100}")
    for k in (1.0, 1.5, 2.0, 5.0):
        _require(analysis.boot_heights(k, 1.0, 12).c_minus == 0.0, f"negative boot at k={k}")
        for seg in analysis.ground_segments(1.0, k):
            if 3 in seg.ground_levels:
                h = 0.5 * (seg.h_lo + seg.h_hi)
                c = zero_T_concurrence(ModelParams(1.0, h, k), 12)
                _require(c == 0.0, f"pair 12 on level-3 segment at k={k}: {c}")
    return f"c_plus(100) = {c100:.6f}"


# invariants beyond the numbered criteria


def check_linalg_invariants(rng, trials):
    for _ in range(trials):
        a = random_symmetric(rng, 8)
        dec = eigh_symmetric(a)
        scale = max(1.0, float(np.max(np.sum(np.abs(a), axis=1))))
        res = np.max(np.abs(a @ dec.vectors - dec.vectors * dec.values))
        _require(res <= 1e-10 * scale, f"Jacobi residual {res:.3e}")
        _require(np.max(np.abs(dec.vectors.T @ dec.vectors - np.eye(8))) <= 1e-10, "V not orthonormal")
        rho = random_density(rng, 8)
        for q in (1, 2, 3):
            r = partial_trace(rho, q)
            _require(abs(np.trace(r) - 1) <= 1e-12 and np.array_equal(r, r.T), "partial trace")
        # exact for integer entries; floating-point products are only associative to rounding
        m = [rng.integers(-9, 10, size=(2, 2)).astype(float) for _ in range(3)]
        _require(np.array_equal(kron(kron(m[0], m[1]), m[2]), kron(m[0], kron(m[1], m[2]))),
                 "kron not associative")
        m = [rng.normal(size=(2, 2)) for _ in range(3)]
        _require(np.allclose(kron(kron(m[0], m[1]), m[2]), kron(m[0], kron(m[1], m[2])), rtol=1e-15, atol=0),
                 "kron not associative to rounding")
    return "Jacobi, partial trace and kron invariants hold"


def check_wootters_xstate(rng, trials):
    from .thermal import XStateParams

    worst = 0.0
    for _ in range(trials):
        u, v, w = rng.uniform(0, 1, size=3)
        y = rng.uniform(-w, w)
        Z = u + v + 2 * w
        x = XStateParams(u, v, w, y, Z, 1.0)
        err = abs(wootters_concurrence(x.matrix()) - concurrence_from_xstate(x))
        _require(err <= 1e-8, f"X-state mismatch {err:.3e}")
        worst = max(worst, err)
    return f"max deviation {worst:.2e}"


def check_model_symmetries(rng, trials):
    S = swap_13()
    X = global_flip()
    for _ in range(trials):
        p = _random_params(rng)
        H = build_hamiltonian(p)
        _require(np.max(np.abs(S @ H - H @ S)) <= 1e-12, "H does not commute with 1<->3 swap")
        _require(np.array_equal(X @ H @ X, build_hamiltonian(p.mirrored())), "spin-flip covariance")
        e1 = level_energies(p.J, p.h, p.k)
        e2 = level_energies(-p.J, p.h, p.k)
        _require(np.array_equal(e1, e2), "energies depend on the sign of J")
    return "swap symmetry, spin-flip covariance, J-sign invariance hold"


def check_path_agreement(rng, trials):
    worst = 0.0
    for _ in range(trials):
        p = _random_params(rng)
        T = rng.uniform(0.01, 5)
        tp = thermal_concurrence(p, T, 13)
        err = abs(tp.closed_form - tp.numeric)
        _require(err <= 1e-8, f"paths differ by {err:.3e} at {p}, T={T}")
        _require(thermal_concurrence(p, 100.0, 13).concurrence == 0.0, f"entangled at T=100 for {p}")
        worst = max(worst, err)
    return f"max |closed - numeric| = {worst:.2e}"


def check_envelope(rng, trials):
    n = max(10, trials // 4)
    for _ in range(n):
        p = _random_params(rng)
        hs = np.linspace(-6, 6, 1000)
        segs = analysis.ground_segments(p.J, p.k)
        bounds = [s.h_hi for s in segs[:-1]]
        argmin = analysis.envelope_argmin_grid(p.J, p.k, hs)
        for h, lvl in zip(hs, argmin):
            if any(abs(h - b) < 1e-6 for b in bounds):
                continue
            seg = next(s for s in segs if s.h_lo < h < s.h_hi)
            _require(lvl in seg.ground_levels, f"envelope disagrees at h={h} for {p}")
    return f"{n} envelopes checked"


def check_zero_T_limit(rng, trials):
    n = max(10, trials // 4)
    worst = 0.0
    for _ in range(n):
        p = _random_params(rng)
        crossings = analysis.crossing_points(p.J, p.k)
        if any(abs(p.h - c) <= 0.05 for c in crossings):
            continue
        err = abs(thermal_concurrence(p, 1e-4, 13).concurrence - zero_T_concurrence(p, 13))
        _require(err <= 1e-3, f"T -> 0 limit off by {err:.3e} at {p}")
        worst = max(worst, err)
    return f"max |C(1e-4) - C(0)| = {worst:.2e}"


CHECKS: list[tuple[str, Callable]] = [
    ("1 spectrum agreement", check_spectrum),
    ("2 per-level concurrence table", check_level_concurrences),
    ("3 closed-form reduced state", check_closed_form_state),
    ("4 level concurrence curves", check_level_curves),
    ("5 dip law for k < 1", check_dip_below),
    ("6 mutation triple", check_mutation),
    ("7 peak height", check_peak),
    ("8 dip law for k > 1", check_dip_above),
    ("9 symmetries", check_symmetries),
    ("10 nearest-neighbour suppression", check_nearest_neighbour),
    ("linalg invariants", check_linalg_invariants),
    ("Wootters vs X-state closed form", check_wootters_xstate),
    ("Hamiltonian symmetries", check_model_symmetries),
    ("thermal path agreement", check_path_agreement),
    ("ground-state envelope", check_envelope),
    ("zero-temperature limit", check_zero_T_limit),
]


def run_all(trials: int = 200, seed: int = 42) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        rng = np.random.default_rng([seed, len(results)])
        try:
            detail = fn(rng, trials)
            ok = True
        except _Fail as exc:
            detail, ok = str(exc), False
        results.append(CheckResult(name, ok, detail))
    return results
