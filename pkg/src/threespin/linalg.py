"""Dense real linear algebra for small (n <= 8) matrices.

Everything here works on real ``float64`` numpy arrays. The Hamiltonian of
the three-site chain is real symmetric in the computational basis, so no
complex storage is needed anywhere downstream.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BadIndex, ComplexRoots, InvalidState, NoConvergence, NotSymmetric

MAX_SWEEPS = 100
CLAMP_TOL = 1e-9

# Real Pauli matrices. sigma_y itself is imaginary; only the real product
# sigma_y (x) sigma_y is ever needed, see SPIN_FLIP.
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
IDENTITY_2 = np.eye(2)

# sigma_y (x) sigma_y; i * i = -1 on the anti-diagonal corners.
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in non-decreasing order, eigenvectors as matching columns."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.T


def is_symmetric(a: np.ndarray, tol: float = 0.0) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(a - a.T), initial=0.0) <= tol)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, entry (i*rb + r, j*cb + c) = a[i, j] * b[r, c]."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise ValueError("kron needs non-empty matrices")
    ra, ca = a.shape
    rb, cb = b.shape
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(ra * rb, ca * cb)


def kron_all(*factors: np.ndarray) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def eigh_symmetric(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> SpectralDecomposition:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Sweeps over all (p, q) pairs until the off-diagonal Frobenius norm falls
    below ``tol * ||A||_F``.

    Raises
    ------
    NotSymmetric
        If ``max|A - A^T| > 1e-12 * max(1, max|A|)``.
    NoConvergence
        If ``max_sweeps`` sweeps do not reach the threshold.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if not is_symmetric(a, 1e-12 * scale):
        raise NotSymmetric("matrix is not symmetric within 1e-12 relative tolerance")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    v = np.eye(n)
    norm_f = float(np.sqrt(np.sum(a * a)))
    threshold = tol * norm_f
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    offdiag = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps + 1):
        off = float(np.sqrt(np.sum(a[offdiag] ** 2)))
        if off <= threshold:
            break
        for p, q in pairs:
            apq = a[p, q]
            if apq == 0.0:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
            if theta < 0.0:
                t = -t
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            col_p = a[:, p].copy()
            col_q = a[:, q]
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p = a[p, :].copy()
            row_q = a[q, :]
            a[p, :] = c * row_p - s * row_q
            a[q, :] = s * row_p + c * row_q
            a[p, q] = a[q, p] = 0.0
            vp = v[:, p].copy()
            vq = v[:, q]
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return SpectralDecomposition(values[order], v[:, order])


def partial_trace(rho: np.ndarray, traced_qubit: int) -> np.ndarray:
    """Trace one qubit (1, 2 or 3) out of a three-qubit density matrix.

    Basis index is ``4*b1 + 2*b2 + b3``; the two kept qubits stay in their
    original order.
    """
    if traced_qubit not in (1, 2, 3):
        raise BadIndex(f"traced_qubit must be 1, 2 or 3, got {traced_qubit!r}")
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (8, 8):
        raise InvalidState(f"expected an 8x8 matrix, got shape {rho.shape}")
    t = rho.reshape(2, 2, 2, 2, 2, 2)
    ax = traced_qubit - 1
    reduced = np.trace(t, axis1=ax, axis2=ax + 3)
    return reduced.reshape(4, 4)


def _charpoly(m: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial coefficients by Faddeev-LeVerrier.

    Returns ``[1, c1, c2, c3, c4]`` with det(x I - M) = x^4 + c1 x^3 + ...
    """
    n = m.shape[0]
    coeffs = [1.0]
    mk = np.zeros_like(m)
    ident = np.eye(n)
    for k in range(1, n + 1):
        mk = m @ (mk + coeffs[-1] * ident)
        coeffs.append(-np.trace(mk) / k)
    return np.array(coeffs)


def _aberth(coeffs: np.ndarray, iters: int = 500) -> np.ndarray:
    """Simultaneous Aberth-Ehrlich iteration for all roots of a polynomial."""
    deg = len(coeffs) - 1
    dcoeffs = np.polyder(coeffs)
    radius = 1.0 + max(abs(c) for c in coeffs[1:]) if deg else 1.0
    z = radius * np.exp(1j * (2 * np.pi * np.arange(deg) / deg + 0.4))
    for _ in range(iters):
        pz = np.polyval(coeffs, z)
        dpz = np.polyval(dcoeffs, z)
        done = pz == 0
        ratio = np.where(done, 0.0, pz / np.where(dpz == 0, 1e-300, dpz))
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        repulsion = np.sum(1.0 / diff, axis=1)
        step = np.where(done, 0.0, ratio / (1.0 - ratio * repulsion))
        z = z - step
        if np.all(np.abs(step) <= 1e-17 * np.maximum(1.0, np.abs(z))):
            break
    return z


def eigenvalues_4x4(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a 4x4 real matrix known to have a real spectrum.

    The characteristic quartic is solved by simultaneous (Aberth) iteration.
    Approximations that cluster around a multiple root are replaced by the
    cluster mean, which is far better conditioned than the individual
    estimates; simple roots get a final Newton polish. Roots in
    ``[-1e-9, 0)`` are clamped to zero.

    Raises
    ------
    ComplexRoots
        If an imaginary part exceeds ``1e-7 * ||M||_inf``.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    norm = float(np.max(np.sum(np.abs(m), axis=1)))
    if norm == 0.0:
        return np.zeros(4)
    coeffs = _charpoly(m / norm)
    z = _aberth(coeffs)

    # An m-fold root is only resolved to ~eps**(1/m); merge approximations
    # whose spread is within that scale, largest clusters first.
    eps = np.finfo(float).eps
    free = set(range(4))
    clusters = []
    for size in (4, 3, 2):
        tol = 10.0 * eps ** (1.0 / size) * max(1.0, float(np.max(np.abs(z))))
        for combo in itertools.combinations(sorted(free), size):
            if not free.issuperset(combo):
                continue
            pts = z[list(combo)]
            if np.max(np.abs(pts[:, None] - pts[None, :])) <= tol:
                clusters.append(list(combo))
                free -= set(combo)
    clusters += [[i] for i in sorted(free)]

    roots = np.empty(4, dtype=complex)
    dcoeffs = np.polyder(coeffs)
    for members in clusters:
        centre = np.mean(z[members])
        if len(members) == 1:
            for _ in range(3):
                d = np.polyval(dcoeffs, centre)
                if d == 0:
                    break
                centre = centre - np.polyval(coeffs, centre) / d
        roots[members] = centre

    if np.max(np.abs(roots.imag)) > 1e-7:
        raise ComplexRoots(f"characteristic polynomial has complex roots {roots * norm}")
    vals = roots.real * norm
    vals[(vals < 0.0) & (vals >= -CLAMP_TOL * max(1.0, norm))] = 0.0
    return np.sort(vals)[::-1]


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    dec = eigh_symmetric(rho)
    lam = dec.values
    if lam[0] < -CLAMP_TOL:
        raise InvalidState(f"state has negative eigenvalue {lam[0]:.3e}")
    lam = np.clip(lam, 0.0, None)
    return (dec.vectors * np.sqrt(lam)) @ dec.vectors.T


def wootters_concurrence(rho: np.ndarray, method: str = "symmetric") -> float:
    """Concurrence of a real two-qubit density matrix.

    ``C = max(0, l1 - l2 - l3 - l4)`` where ``l_i**2`` are the descending
    eigenvalues of ``rho @ Y @ rho @ Y`` with ``Y = sigma_y (x) sigma_y``.

    ``method="symmetric"`` (default) takes ``l_i`` as absolute eigenvalues of
    the symmetric matrix ``sqrt(rho) Y sqrt(rho)``, whose square is similar to
    ``rho @ rho_tilde``. This avoids square roots of tiny, rounding-dominated
    eigenvalues, so rank-deficient (e.g. pure) states stay accurate to machine
    precision. ``method="charpoly"`` solves the quartic of
    ``rho @ rho_tilde`` directly via :func:`eigenvalues_4x4`.
    """
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not is_symmetric(rho, 1e-12):
        raise InvalidState("two-qubit state must be real symmetric")
    if method == "symmetric":
        root = _psd_sqrt(rho)
        s = eigh_symmetric(root @ SPIN_FLIP @ root).values
        lam = np.sort(np.abs(s))[::-1]
    elif method == "charpoly":
        product = rho @ SPIN_FLIP @ rho @ SPIN_FLIP
        try:
            ev = eigenvalues_4x4(product)
        except ComplexRoots as exc:
            raise InvalidState(str(exc)) from exc
        if ev[-1] < 0.0:
            raise InvalidState(f"rho * rho_tilde has negative eigenvalue {ev[-1]:.3e}")
        lam = np.sqrt(ev)
    else:
        raise ValueError(f"unknown method {method!r}")
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def random_symmetric(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    m = rng.normal(scale=scale, size=(n, n))
    return 0.5 * (m + m.T)


def random_density(rng: np.random.Generator, n: int, rank: int | None = None) -> np.ndarray:
    """Random real density matrix of dimension n (Wishart-style)."""
    g = rng.normal(size=(n, rank or n))
    rho = g @ g.T
    return rho / np.trace(rho)


def validate_density(rho: np.ndarray, tol: float = 1e-10) -> None:
    """Raise InvalidState unless rho is symmetric, unit-trace and PSD."""
    rho = np.asarray(rho, dtype=float)
    if rho.shape not in ((4, 4), (8, 8)):
        raise InvalidState(f"density matrix must be 4x4 or 8x8, got {rho.shape}")
    if not is_symmetric(rho, 1e-12):
        raise InvalidState("density matrix is not symmetric")
    if abs(np.trace(rho) - 1.0) > tol:
        raise InvalidState(f"trace is {np.trace(rho)!r}, not 1")
    if eigh_symmetric(rho).values[0] < -CLAMP_TOL:
        raise InvalidState("density matrix is not positive semidefinite")
