"""Brute-force verification backends that share no code with the closed forms.

The matrices are actually assembled and their spectra computed with classical
algorithms: cyclic Jacobi rotations on dense symmetric matrices, Sturm-count
bisection on symmetric tridiagonal ones, and a characteristic-polynomial
recurrence that certifies individual eigenvalues without any eigensolver.
Two independent symmetric solvers are kept on purpose, so a bug in one cannot
silently confirm the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Horizon, NonConvergence, RealizedTriple, SpectralExtremes, SpectralKind

_MAX_ORDER = 512  # desk-scale guard for the dense solver
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class TridiagonalToeplitzMatrix:
    """Order-n matrix with constant diagonal/superdiagonal/subdiagonal, zero elsewhere."""

    order: int
    diag: float
    superdiag: float
    subdiag: float

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")

    def dense(self) -> np.ndarray:
        a = np.zeros((self.order, self.order))
        idx = np.arange(self.order)
        a[idx, idx] = self.diag
        a[idx[:-1], idx[1:]] = self.superdiag
        a[idx[1:], idx[:-1]] = self.subdiag
        return a


@dataclass(frozen=True)
class DenseSymmetricMatrix:
    """Dense real symmetric matrix (pentadiagonal Gram matrices are stored dense on purpose)."""

    order: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        e = np.asarray(self.entries, dtype=float)
        if e.shape != (self.order, self.order):
            raise ValueError(f"entries must be {self.order}x{self.order}, got {e.shape}")
        if not np.allclose(e, e.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(e).max(initial=0.0)))):
            raise ValueError("entries must be symmetric")
        object.__setattr__(self, "entries", e)


def assemble(t: RealizedTriple, n: int) -> TridiagonalToeplitzMatrix:
    """Matrix with diagonal x, superdiagonal y, subdiagonal z."""
    return TridiagonalToeplitzMatrix(order=n, diag=t.x, superdiag=t.y, subdiag=t.z)


def gram_matrix(m: TridiagonalToeplitzMatrix) -> DenseSymmetricMatrix:
    """A^T A of the assembled matrix; its eigenvalues are the squared singular values."""
    a = m.dense()
    g = a.T @ a
    g = 0.5 * (g + g.T)  # kill rounding asymmetry
    return DenseSymmetricMatrix(order=m.order, entries=g)


def symmetric_eigenvalues_jacobi(m: DenseSymmetricMatrix, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps the upper triangle in row-major order until the off-diagonal
    Frobenius mass drops below tol times the diagonal Frobenius mass. Raises
    NonConvergence past 100 sweeps, which signals pathological input or a tol
    below reach.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    n = m.order
    if n > _MAX_ORDER:
        raise ValueError(f"order {n} exceeds the dense-solver guard {_MAX_ORDER}")
    a = m.entries.copy()
    if n == 1:
        return a.diagonal().copy()

    def off_below_threshold() -> bool:
        off_part = a.copy()
        np.fill_diagonal(off_part, 0.0)
        off = float(np.sqrt((off_part * off_part).sum()))
        diag_mass = float(np.sqrt((a.diagonal() ** 2).sum()))
        return off <= tol * diag_mass

    for _ in range(_MAX_SWEEPS):
        if off_below_threshold():
            return np.sort(a.diagonal())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                with np.errstate(over="ignore"):
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t_ = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t_ * t_ + 1.0)
                s = t_ * c
                new_pp = a[p, p] - t_ * apq
                new_qq = a[q, q] + t_ * apq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p], a[q, q] = new_pp, new_qq
                a[p, q] = a[q, p] = 0.0
                a[:, p] = a[p, :]
                a[:, q] = a[q, :]
    if off_below_threshold():
        return np.sort(a.diagonal())
    raise NonConvergence(f"Jacobi did not converge within {_MAX_SWEEPS} sweeps (n={n}, tol={tol})")


def _sturm_count(diag: np.ndarray, offdiag_sq: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """Number of eigenvalues strictly below each entry of ``lam``.

    Counts negative pivots of the shifted LDL^T recurrence, equivalent to the
    sign-agreement count of the leading-principal-minor Sturm sequence.
    """
    lam = np.atleast_1d(lam)
    count = np.zeros(lam.shape, dtype=int)
    q = diag[0] - lam
    count += q < 0.0
    tiny = 1e-300
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        for i in range(1, diag.shape[0]):
            denom = np.where(q == 0.0, tiny, q)
            q = (diag[i] - lam) - offdiag_sq[i - 1] / denom
            count += q < 0.0
    return count


def sturm_tridiagonal_eigenvalues(
    diag: np.ndarray, offdiag: np.ndarray, tol: float = 1e-12
) -> np.ndarray:
    """All eigenvalues of a symmetric tridiagonal matrix by Sturm-count bisection.

    Bisection starts from the Gershgorin enclosure and narrows every bracket to
    width <= tol; it is unconditionally convergent.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    n = diag.shape[0]
    if offdiag.shape[0] != max(n - 1, 0):
        raise ValueError(f"offdiag must have length n-1={n - 1}, got {offdiag.shape[0]}")
    if n == 1:
        return diag.copy()

    radius = np.zeros(n)
    radius[:-1] += np.abs(offdiag)
    radius[1:] += np.abs(offdiag)
    lo = float((diag - radius).min())
    hi = float((diag + radius).max())
    offdiag_sq = offdiag * offdiag

    lower = np.full(n, lo)
    upper = np.full(n, hi)
    ranks = np.arange(1, n + 1)
    while float((upper - lower).max()) > tol:
        mid = 0.5 * (lower + upper)
        counts = _sturm_count(diag, offdiag_sq, mid)
        ge_rank = counts >= ranks  # at least j eigenvalues below mid -> j-th is to the left
        upper = np.where(ge_rank, mid, upper)
        lower = np.where(ge_rank, lower, mid)
    return np.sort(0.5 * (lower + upper))


def charpoly_residual(t: RealizedTriple, n: int, lam: complex) -> float:
    """Scaled characteristic-polynomial residual |p_n(lam)|; near zero certifies an eigenvalue.

    Uses the three-term recurrence p_k = (x - lam) p_{k-1} - (y z) p_{k-2},
    renormalizing the state pair to unit sup-norm after every step. The
    rescaling both avoids overflow (raw p_n exceeds double range near n ~ 700
    for moderate entries) and keeps the residual a scale-free separation
    witness: order one at points between eigenvalues, rounding-level at them.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    shift = complex(t.x) - complex(lam)
    yz = t.y * t.z
    p_prev = 1.0 + 0.0j
    p_cur = shift
    scale = max(abs(p_prev), abs(p_cur))
    if scale > 0.0:
        p_prev /= scale
        p_cur /= scale
    for _ in range(2, n + 1):
        p_prev, p_cur = p_cur, shift * p_cur - yz * p_prev
        scale = max(abs(p_prev), abs(p_cur))
        if scale > 0.0:
            p_cur /= scale
            p_prev /= scale
    return abs(p_cur)


def singular_values_bruteforce(t: RealizedTriple, n: int, tol: float = 1e-13) -> np.ndarray:
    """Singular values of the assembled matrix: Jacobi on A^T A, then square roots."""
    eig = symmetric_eigenvalues_jacobi(gram_matrix(assemble(t, n)), tol)
    return np.sqrt(np.maximum(eig, 0.0))


def eigenvalue_moduli_bruteforce(t: RealizedTriple, n: int, tol: float = 1e-12) -> np.ndarray:
    """Sorted eigenvalue moduli of the assembled (generally non-normal) matrix.

    y*z > 0: a diagonal similarity makes the matrix symmetric tridiagonal with
    offdiagonal sqrt(y*z), solved by Sturm bisection. y*z = 0: the matrix is
    triangular, all eigenvalues equal the diagonal. y*z < 0: the same scaling
    makes the shifted part antisymmetric K, whose spectrum is purely imaginary;
    the squared imaginary parts are the eigenvalues of K^T K (dense Jacobi) and
    every modulus is sqrt(x^2 + nu^2).
    """
    p = t.y * t.z
    if p == 0.0:
        return np.full(n, abs(t.x))
    if p > 0.0:
        eig = sturm_tridiagonal_eigenvalues(np.full(n, t.x), np.full(n - 1, math.sqrt(p)), tol)
        return np.sort(np.abs(eig))
    w = math.sqrt(-p)
    k = TridiagonalToeplitzMatrix(order=n, diag=0.0, superdiag=w, subdiag=-w)
    nu_sq = symmetric_eigenvalues_jacobi(gram_matrix(k), max(tol, 1e-13))
    return np.sort(np.sqrt(t.x * t.x + np.maximum(nu_sq, 0.0)))


def bruteforce_extremes(
    t: RealizedTriple, n: int, kind: SpectralKind, tol: float = 1e-12
) -> SpectralExtremes:
    """finite_extremes computed from assembled matrices instead of closed forms."""
    if kind is SpectralKind.SYMMETRIC_SINGULAR:
        sym = RealizedTriple(t.x, t.y, t.y)
        eig = sturm_tridiagonal_eigenvalues(np.full(n, sym.x), np.full(n - 1, sym.y), tol)
        values = np.abs(eig)
    else:
        values = eigenvalue_moduli_bruteforce(t, n, tol)
    lo = float(values.min())
    hi = float(values.max())
    return SpectralExtremes(min(lo, hi), max(lo, hi), kind, Horizon.finite(n))
