"""Exact finite-n spectra of tridiagonal Toeplitz matrices and their n -> infinity extremes.

A matrix with constant diagonal x, superdiagonal y and subdiagonal z has
eigenvalues x + 2*sqrt(y*z)*cos(pi*j/(n+1)), j = 1..n. For y*z < 0 the square
root is imaginary and only moduli are ever consumed, realized branch-free as
|x +- 2*sqrt(y*z)| := sqrt(x^2 + 4*|y*z|). The symmetric variant (z = y) has
singular values |x + 2*|y|*cos(pi*j/(n+1))|. As n grows the cosine grid fills
[-1, 1], which turns min/max over j into closed-form limit extremes.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import LIMIT, Horizon, RealizedTriple, SpectralExtremes, SpectralKind

# Trials-times-order elements held in memory at once by the batch helpers.
_BATCH_ELEMENT_BUDGET = 1 << 22


class LimitCaseLabel(enum.Enum):
    """Partition of entry triples driving the limit-extremes branch."""

    ZERO_PRODUCT = "zero-product"  # y*z = 0
    POSITIVE_PRODUCT_ZERO_INSIDE = "positive-product-zero-inside"  # y*z > 0, |x| <= 2*sqrt(y*z)
    POSITIVE_PRODUCT_ZERO_OUTSIDE = "positive-product-zero-outside"  # y*z > 0, |x| > 2*sqrt(y*z)
    NEGATIVE_PRODUCT = "negative-product"  # y*z < 0


def cosine_grid(n: int) -> np.ndarray:
    """cos(pi*j/(n+1)) for j = 1..n, evaluated directly per index (no recurrences)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return np.cos(np.pi * np.arange(1, n + 1) / (n + 1))


def eigenvalues_nonsymmetric(t: RealizedTriple, n: int) -> np.ndarray:
    """All n eigenvalues in index order j = 1..n, as complex numbers.

    Real (imaginary part exactly zero) when y*z >= 0; a conjugate family
    x + 2i*sqrt(|y*z|)*cos(pi*j/(n+1)) when y*z < 0.
    """
    grid = cosine_grid(n)
    p = t.y * t.z
    if p >= 0.0:
        return (t.x + 2.0 * math.sqrt(p) * grid).astype(complex)
    return t.x + 2.0j * math.sqrt(-p) * grid


def singular_values_symmetric(x: float, y: float, n: int) -> np.ndarray:
    """Sorted singular values |x + 2*|y|*cos(pi*j/(n+1))|, j = 1..n."""
    grid = cosine_grid(n)
    return np.sort(np.abs(x + 2.0 * abs(y) * grid))


def _moduli_nonsymmetric(x: float, p: float, grid: np.ndarray) -> np.ndarray:
    if p >= 0.0:
        return np.abs(x + 2.0 * math.sqrt(p) * grid)
    return np.sqrt(x * x + 4.0 * (-p) * grid * grid)


def finite_extremes(t: RealizedTriple, n: int, kind: SpectralKind) -> SpectralExtremes:
    """Min/max over j of the closed-form spectral moduli at order n.

    The symmetric kind uses (x, y) only; by caller convention z equals y and is
    ignored here.
    """
    grid = cosine_grid(n)
    if kind is SpectralKind.SYMMETRIC_SINGULAR:
        values = np.abs(t.x + 2.0 * abs(t.y) * grid)
    else:
        values = _moduli_nonsymmetric(t.x, t.y * t.z, grid)
    return SpectralExtremes(float(values.min()), float(values.max()), kind, Horizon.finite(n))


def limit_extremes_symmetric(x: float, y: float) -> SpectralExtremes:
    """n -> infinity extremes of the symmetric singular values.

    hi = max(|x - 2|y||, |x + 2|y||). lo = 0 when the line a -> x + 2|y|a has a
    zero inside [-1, 1] (that is |x| <= 2|y|), else min(|x - 2|y||, |x + 2|y||).
    """
    lo_cand = abs(x - 2.0 * abs(y))
    hi_cand = abs(x + 2.0 * abs(y))
    hi = max(lo_cand, hi_cand)
    lo = 0.0 if abs(x) <= 2.0 * abs(y) else min(lo_cand, hi_cand)
    return SpectralExtremes(lo, hi, SpectralKind.SYMMETRIC_SINGULAR, LIMIT)


def limit_extremes_nonsymmetric(t: RealizedTriple) -> SpectralExtremes:
    """n -> infinity extremes of the eigenvalue moduli, split by the sign of y*z."""
    p = t.y * t.z
    if p == 0.0:
        lo = hi = abs(t.x)
    elif p > 0.0:
        s = 2.0 * math.sqrt(p)
        lo_cand = abs(t.x - s)
        hi_cand = abs(t.x + s)
        hi = max(lo_cand, hi_cand)
        lo = 0.0 if abs(t.x) <= s else min(lo_cand, hi_cand)
    else:
        hi = math.sqrt(t.x * t.x + 4.0 * (-p))
        lo = abs(t.x)
    return SpectralExtremes(lo, hi, SpectralKind.NONSYMMETRIC_EIGENMODULUS, LIMIT)


def case_label(t: RealizedTriple) -> LimitCaseLabel:
    """The unique limit-case label of a triple, consistent with limit_extremes_nonsymmetric."""
    p = t.y * t.z
    if p == 0.0:
        return LimitCaseLabel.ZERO_PRODUCT
    if p < 0.0:
        return LimitCaseLabel.NEGATIVE_PRODUCT
    if abs(t.x) <= 2.0 * math.sqrt(p):
        return LimitCaseLabel.POSITIVE_PRODUCT_ZERO_INSIDE
    return LimitCaseLabel.POSITIVE_PRODUCT_ZERO_OUTSIDE


def batch_finite_extremes(
    xs: np.ndarray,
    ys: np.ndarray,
    zs: np.ndarray,
    n: int,
    kind: SpectralKind,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized finite_extremes over aligned entry arrays; returns (lo, hi).

    Scans the full cosine grid per trial in memory-bounded chunks, with the
    same per-element arithmetic as the scalar path.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    zs = np.asarray(zs, dtype=float)
    m = xs.shape[0]
    grid = cosine_grid(n)
    lo = np.empty(m)
    hi = np.empty(m)
    step = max(1, _BATCH_ELEMENT_BUDGET // max(n, 1))
    for start in range(0, m, step):
        end = min(start + step, m)
        x = xs[start:end, None]
        if kind is SpectralKind.SYMMETRIC_SINGULAR:
            moduli = np.abs(x + 2.0 * np.abs(ys[start:end, None]) * grid)
        else:
            p = (ys[start:end] * zs[start:end])[:, None]
            moduli = np.where(
                p >= 0.0,
                np.abs(x + 2.0 * np.sqrt(np.maximum(p, 0.0)) * grid),
                np.sqrt(x * x + 4.0 * np.maximum(-p, 0.0) * grid * grid),
            )
        lo[start:end] = moduli.min(axis=1)
        hi[start:end] = moduli.max(axis=1)
    return lo, hi


def batch_limit_extremes(
    xs: np.ndarray,
    ys: np.ndarray,
    zs: np.ndarray,
    kind: SpectralKind,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized limit extremes over aligned entry arrays; returns (lo, hi)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    zs = np.asarray(zs, dtype=float)
    if kind is SpectralKind.SYMMETRIC_SINGULAR:
        s = 2.0 * np.abs(ys)
        minus = np.abs(xs - s)
        plus = np.abs(xs + s)
        hi = np.maximum(minus, plus)
        lo = np.where(np.abs(xs) <= s, 0.0, np.minimum(minus, plus))
        return lo, hi
    p = ys * zs
    s = 2.0 * np.sqrt(np.abs(p))
    minus = np.abs(xs - s)
    plus = np.abs(xs + s)
    hi_pos = np.maximum(minus, plus)
    lo_pos = np.where(np.abs(xs) <= s, 0.0, np.minimum(minus, plus))
    hi = np.where(p > 0.0, hi_pos, np.where(p < 0.0, np.sqrt(xs * xs + s * s), np.abs(xs)))
    lo = np.where(p > 0.0, lo_pos, np.abs(xs))
    return lo, hi
