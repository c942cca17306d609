"""Quadrature oracles on uniform grids.

Everything here works from sampled values only and is meant as the
independent reference for the closed forms in :mod:`gaussframes.gaussians`.
Integrals are plain Riemann sums over uniform grids; for the rapidly
decaying, smooth integrands used throughout this gives spectral accuracy.

Shifts are exact index shifts, so they require grid-aligned displacements.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussians import CLASSICAL_HBAR, CovarianceState, check_hbar, det_sqrt, density_rho_eval
from .symplectic import standard_J

__all__ = [
    "GridError",
    "Grid1D",
    "SampledFunction1D",
    "SampledFunction2D",
    "sample",
    "sample_2d",
    "inner_product_l2",
    "norm_l2",
    "heisenberg_apply",
    "phase_space_translate",
    "wigner_numeric",
    "wigner_numeric_at",
    "wigner_numeric_nd_at",
    "ambiguity_numeric",
    "ambiguity_numeric_at",
    "hbar_fourier_numeric",
    "symplectic_fourier_numeric",
    "metaplectic_J_apply",
    "metaplectic_V_apply",
    "metaplectic_M_apply",
    "poisson_check",
    "CovarianceMeasurement",
    "numeric_covariance",
    "density_integral",
]

_ALIGN_TOL = 1e-9


class GridError(ValueError):
    """Grid precondition violated (alignment, support or resolution)."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid ``center + (k - count//2) * spacing``, ``k = 0..count-1``."""

    center: float
    spacing: float
    count: int

    def __post_init__(self):
        if not self.spacing > 0:
            raise ValueError("spacing must be positive")
        if int(self.count) != self.count or self.count < 16:
            raise ValueError("count must be an integer >= 16")
        object.__setattr__(self, "count", int(self.count))

    @classmethod
    def symmetric(cls, halfwidth, count):
        return cls(0.0, 2.0 * halfwidth / count, count)

    @classmethod
    def for_gaussian(cls, M=None, hbar=CLASSICAL_HBAR, count=1024):
        """Default grid: half-width ``8 sqrt(hbar max(1, |M^{-1}|))``."""
        s = 1.0
        if M is not None:
            s = max(1.0, np.linalg.norm(np.linalg.inv(np.atleast_2d(M)), 2))
        return cls.symmetric(8.0 * math.sqrt(hbar * s), count)

    @property
    def points(self):
        k = np.arange(self.count) - self.count // 2
        return self.center + k * self.spacing

    @property
    def halfwidth(self):
        return 0.5 * self.count * self.spacing

    def index_of(self, x):
        """Exact node index of ``x``; raises :class:`GridError` when off-grid."""
        t = (x - self.center) / self.spacing + self.count // 2
        k = int(round(t))
        if abs(t - k) > _ALIGN_TOL * max(1.0, abs(t)):
            raise GridError(f"{x} is not a grid node (spacing {self.spacing})")
        return k

    def steps(self, dx):
        """Integer number of grid steps in a displacement ``dx``."""
        t = dx / self.spacing
        k = int(round(t))
        if abs(t - k) > _ALIGN_TOL * max(1.0, abs(t)):
            raise GridError(f"shift {dx} is not a multiple of the spacing {self.spacing}")
        return k


def _frozen(v):
    v = np.array(v, dtype=complex)
    v.setflags(write=False)
    return v


@dataclass(frozen=True)
class SampledFunction1D:
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        v = _frozen(self.values)
        if v.shape != (self.grid.count,):
            raise ValueError(f"expected {self.grid.count} values, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", v)

    @property
    def x(self):
        return self.grid.points

    def norm(self):
        return norm_l2(self)


@dataclass(frozen=True)
class SampledFunction2D:
    """Values on a product grid; axis 0 follows ``xgrid``, axis 1 ``ygrid``.

    For phase-space functions (n = 1) the axes are ``x`` and ``p``; for
    configuration-space functions with n = 2 they are ``x1`` and ``x2``.
    """

    xgrid: Grid1D
    ygrid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        v = _frozen(self.values)
        if v.shape != (self.xgrid.count, self.ygrid.count):
            raise ValueError(
                f"expected shape {(self.xgrid.count, self.ygrid.count)}, got {v.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", v)

    @property
    def mesh(self):
        """Stacked coordinates of shape ``(Nx, Ny, 2)``."""
        X, Y = np.meshgrid(self.xgrid.points, self.ygrid.points, indexing="ij")
        return np.stack([X, Y], axis=-1)

    @property
    def cell(self):
        return self.xgrid.spacing * self.ygrid.spacing

    def norm(self):
        return norm_l2(self)


def sample(fn, grid: Grid1D):
    """Sample a callable (or a closed-form state) on a 1-D grid."""
    return SampledFunction1D(grid, fn(grid.points))


def sample_2d(fn, xgrid: Grid1D, ygrid: Grid1D):
    """Sample ``fn`` at points of shape ``(Nx, Ny, 2)``."""
    X, Y = np.meshgrid(xgrid.points, ygrid.points, indexing="ij")
    return SampledFunction2D(xgrid, ygrid, fn(np.stack([X, Y], axis=-1)))


def _same_grid(f, g):
    if isinstance(f, SampledFunction1D) and isinstance(g, SampledFunction1D):
        if f.grid != g.grid:
            raise GridError("functions live on different grids")
        return f.grid.spacing
    if isinstance(f, SampledFunction2D) and isinstance(g, SampledFunction2D):
        if f.xgrid != g.xgrid or f.ygrid != g.ygrid:
            raise GridError("functions live on different grids")
        return f.cell
    raise TypeError("inner product needs two sampled functions of the same kind")


def inner_product_l2(f, g):
    """``(f | g) = sum f conj(g) * cell`` on a common grid."""
    w = _same_grid(f, g)
    return complex(np.vdot(g.values, f.values) * w)


def norm_l2(f):
    return math.sqrt(inner_product_l2(f, f).real)


def _shift_values(v, k, axis=0):
    out = np.zeros_like(v)
    n = v.shape[axis]
    if abs(k) >= n:
        return out
    src = [slice(None)] * v.ndim
    dst = [slice(None)] * v.ndim
    if k >= 0:
        src[axis], dst[axis] = slice(0, n - k), slice(k, n)
    else:
        src[axis], dst[axis] = slice(-k, n), slice(0, n + k)
    out[tuple(dst)] = v[tuple(src)]
    return out


def _fourier_shift(v, t, spacing):
    # band-limited translation v(x - t) on a periodic extension
    k = np.fft.fftfreq(v.size, d=spacing)
    return np.fft.ifft(np.fft.fft(v) * np.exp(-2j * np.pi * k * t))


def heisenberg_apply(z0, f: SampledFunction1D, hbar=CLASSICAL_HBAR, interpolate=False):
    """``T(z0) f(x) = exp(i/hbar (p0 x - p0 x0 / 2)) f(x - x0)`` on the grid.

    ``x0`` must be a multiple of the grid spacing unless ``interpolate`` is
    set, in which case a band-limited (FFT) shift is used.
    """
    hbar = check_hbar(hbar)
    x0, p0 = (float(c) for c in np.asarray(z0, dtype=float))
    x = f.grid.points
    if interpolate:
        shifted = _fourier_shift(np.asarray(f.values), x0, f.grid.spacing)
    else:
        shifted = _shift_values(np.asarray(f.values), f.grid.steps(x0))
    phase = np.exp(1j / hbar * (p0 * x - 0.5 * p0 * x0))
    return SampledFunction1D(f.grid, phase * shifted)


def phase_space_translate(z0, F2: SampledFunction2D, hbar=CLASSICAL_HBAR):
    """``T~(z0) Psi(z) = exp(-i sigma(z, z0)/hbar) Psi(z - z0/2)`` on the grid.

    ``z0 / 2`` must be grid-aligned along both axes.
    """
    hbar = check_hbar(hbar)
    x0, p0 = (float(c) for c in np.asarray(z0, dtype=float))
    kx = F2.xgrid.steps(0.5 * x0)
    kp = F2.ygrid.steps(0.5 * p0)
    v = _shift_values(_shift_values(np.asarray(F2.values), kx, 0), kp, 1)
    X, P = np.meshgrid(F2.xgrid.points, F2.ygrid.points, indexing="ij")
    sigma = P * x0 - p0 * X
    return SampledFunction2D(F2.xgrid, F2.ygrid, np.exp(-1j * sigma / hbar) * v)


def _check_support(f, tol=1e-10):
    v = np.abs(np.asarray(f.values))
    peak = v.max()
    if peak == 0:
        return
    edge = max(v[0], v[-1])
    if edge > tol * peak:
        raise GridError(
            f"insufficient support: boundary value {edge:.2e} relative to peak {peak:.2e}"
        )


def _check_nyquist(step, pmax, hbar, what):
    # integrand phase exp(-i p y / hbar) sampled with spacing `step` in y
    if pmax > 0 and step > math.pi * hbar / pmax * (1 + 1e-12):
        raise GridError(
            f"{what}: sample step {step:.4g} too coarse for |p| up to {pmax:.4g} "
            f"(need <= {math.pi * hbar / pmax:.4g})"
        )


def _lagged_products(fv, gv, centers, lags, sign):
    # rows: f[c + m] * conj(g[c - m]) (sign=+1) for each center c and lag m
    N = fv.size
    a = centers[:, None] + lags[None, :]
    b = centers[:, None] - lags[None, :]
    ok = (a >= 0) & (a < N) & (b >= 0) & (b < N)
    a = np.clip(a, 0, N - 1)
    b = np.clip(b, 0, N - 1)
    return np.where(ok, fv[a] * np.conj(gv[b]), 0.0)


def wigner_numeric(
    f: SampledFunction1D,
    g: SampledFunction1D,
    pgrid: Grid1D | None = None,
    hbar=CLASSICAL_HBAR,
    x_stride=1,
    xgrid: Grid1D | None = None,
    check_support=True,
):
    """Cross-Wigner transform by quadrature on a 2-D (x, p) grid.

    The output x-grid is ``xgrid`` if given (its nodes must be input nodes),
    otherwise every ``x_stride``-th input node.  The integration variable
    runs over ``y = 2 m h`` so that ``x +- y/2`` stay on nodes.
    """
    hbar = check_hbar(hbar)
    if f.grid != g.grid:
        raise GridError("functions live on different grids")
    if check_support:
        _check_support(f)
        _check_support(g)
    grid = f.grid
    h = grid.spacing
    N = grid.count
    if xgrid is None:
        if N % x_stride:
            raise GridError("x_stride must divide the grid size")
        xgrid = Grid1D(grid.center, h * x_stride, N // x_stride)
    idx = np.array([grid.index_of(x) for x in xgrid.points])
    if idx.min() < 0 or idx.max() >= N:
        raise GridError("output x-grid extends beyond the input grid")
    if pgrid is None:
        pgrid = Grid1D(0.0, xgrid.spacing, xgrid.count)
    pmax = np.max(np.abs(pgrid.points))
    _check_nyquist(2 * h, pmax, hbar, "wigner_numeric")
    lags = np.arange(-(N - 1), N)
    V = _lagged_products(np.asarray(f.values), np.asarray(g.values), idx, lags, 1)
    E = np.exp(-2j * np.outer(lags * h, pgrid.points) / hbar)
    W = V @ E * (2 * h) / (2 * np.pi * hbar)
    return SampledFunction2D(xgrid, pgrid, W)


def wigner_numeric_at(f: SampledFunction1D, g: SampledFunction1D, points, hbar=CLASSICAL_HBAR):
    """Cross-Wigner transform at explicit (x, p) points; each x must be a node."""
    hbar = check_hbar(hbar)
    if f.grid != g.grid:
        raise GridError("functions live on different grids")
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    grid = f.grid
    h, N = grid.spacing, grid.count
    centers = np.array([grid.index_of(x) for x in pts[:, 0]])
    lags = np.arange(-(N - 1), N)
    V = _lagged_products(np.asarray(f.values), np.asarray(g.values), centers, lags, 1)
    E = np.exp(-2j * np.outer(pts[:, 1], lags * h) / hbar)
    return np.sum(V * E, axis=1) * (2 * h) / (2 * np.pi * hbar)


def wigner_numeric_nd_at(f: SampledFunction2D, g: SampledFunction2D, points, hbar=CLASSICAL_HBAR):
    """Cross-Wigner transform for n = 2 at points ``(x1, x2, p1, p2)``.

    ``f`` and ``g`` are sampled on a common (x1, x2) product grid; each
    ``(x1, x2)`` must be a node.
    """
    hbar = check_hbar(hbar)
    if f.xgrid != g.xgrid or f.ygrid != g.ygrid:
        raise GridError("functions live on different grids")
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != 4:
        raise ValueError("points must have 4 coordinates")
    fv, gv = np.asarray(f.values), np.asarray(g.values)
    g1, g2 = f.xgrid, f.ygrid
    N1, N2 = g1.count, g2.count
    h1, h2 = g1.spacing, g2.spacing
    m1 = np.arange(-(N1 - 1), N1)
    m2 = np.arange(-(N2 - 1), N2)
    out = np.empty(len(pts), dtype=complex)
    for i, (x1, x2, p1, p2) in enumerate(pts):
        j1, j2 = g1.index_of(x1), g2.index_of(x2)
        a1, b1 = j1 + m1, j1 - m1
        a2, b2 = j2 + m2, j2 - m2
        ok1 = (a1 >= 0) & (a1 < N1) & (b1 >= 0) & (b1 < N1)
        ok2 = (a2 >= 0) & (a2 < N2) & (b2 >= 0) & (b2 < N2)
        prod = fv[np.ix_(a1[ok1], a2[ok2])] * np.conj(gv[np.ix_(b1[ok1], b2[ok2])])
        e1 = np.exp(-2j * p1 * m1[ok1] * h1 / hbar)
        e2 = np.exp(-2j * p2 * m2[ok2] * h2 / hbar)
        out[i] = e1 @ prod @ e2
    return out * (4 * h1 * h2) / (2 * np.pi * hbar) ** 2


def ambiguity_numeric(
    f: SampledFunction1D,
    g: SampledFunction1D,
    pgrid: Grid1D | None = None,
    hbar=CLASSICAL_HBAR,
    x_count=None,
    check_support=True,
):
    """Cross-ambiguity function by quadrature on a 2-D (x, p) grid.

    Output x-nodes are multiples of twice the input spacing, centred at 0.
    """
    hbar = check_hbar(hbar)
    if f.grid != g.grid:
        raise GridError("functions live on different grids")
    if check_support:
        _check_support(f)
        _check_support(g)
    grid = f.grid
    h, N = grid.spacing, grid.count
    if x_count is None:
        x_count = N // 2
    xg = Grid1D(0.0, 2 * h, x_count)
    half_lags = np.rint(xg.points / (2 * h)).astype(int)
    if pgrid is None:
        pgrid = Grid1D(0.0, xg.spacing, xg.count)
    _check_nyquist(h, np.max(np.abs(pgrid.points)), hbar, "ambiguity_numeric")
    nodes = np.arange(N)
    # V[m', j] = f[j + m'] conj g[j - m']
    V = _lagged_products(np.asarray(f.values), np.asarray(g.values), nodes, half_lags, 1).T
    E = np.exp(-1j * np.outer(grid.points, pgrid.points) / hbar)
    A = V @ E * h / (2 * np.pi * hbar)
    return SampledFunction2D(xg, pgrid, A)


def ambiguity_numeric_at(f: SampledFunction1D, g: SampledFunction1D, points, hbar=CLASSICAL_HBAR):
    """Cross-ambiguity at explicit (x, p) points; each ``x/2`` must be a grid step multiple."""
    hbar = check_hbar(hbar)
    if f.grid != g.grid:
        raise GridError("functions live on different grids")
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    grid = f.grid
    h, N = grid.spacing, grid.count
    fv, gv = np.asarray(f.values), np.asarray(g.values)
    y = grid.points
    out = np.empty(len(pts), dtype=complex)
    for i, (x, p) in enumerate(pts):
        m = grid.steps(0.5 * x)
        a = np.arange(N) + m
        b = np.arange(N) - m
        ok = (a >= 0) & (a < N) & (b >= 0) & (b < N)
        out[i] = np.sum(np.exp(-1j * p * y[ok] / hbar) * fv[a[ok]] * np.conj(gv[b[ok]]))
    return out * h / (2 * np.pi * hbar)


def hbar_fourier_numeric(f: SampledFunction1D, hbar=CLASSICAL_HBAR, out_grid: Grid1D | None = None):
    """``F f(p) = (2 pi hbar)^{-1/2} sum f(x) exp(-i p x / hbar) dx``."""
    hbar = check_hbar(hbar)
    if out_grid is None:
        out_grid = f.grid
    p = out_grid.points
    _check_nyquist(f.grid.spacing, np.max(np.abs(p)), hbar, "hbar_fourier_numeric")
    E = np.exp(-1j * np.outer(p, f.grid.points) / hbar)
    vals = E @ np.asarray(f.values) * f.grid.spacing / math.sqrt(2 * np.pi * hbar)
    return SampledFunction1D(out_grid, vals)


def _inverse_fourier(f: SampledFunction1D, hbar, out_grid=None):
    out_grid = out_grid or f.grid
    E = np.exp(1j * np.outer(out_grid.points, f.grid.points) / hbar)
    vals = E @ np.asarray(f.values) * f.grid.spacing / math.sqrt(2 * np.pi * hbar)
    return SampledFunction1D(out_grid, vals)


def symplectic_fourier_numeric(F2: SampledFunction2D, hbar=CLASSICAL_HBAR):
    """``F_sigma Psi(z) = (2 pi hbar)^{-1} int exp(-i sigma(z, z')/hbar) Psi(z') dz'`` (n = 1).

    The output lives on the input grid.
    """
    hbar = check_hbar(hbar)
    x = F2.xgrid.points
    p = F2.ygrid.points
    _check_nyquist(F2.xgrid.spacing, np.max(np.abs(p)), hbar, "symplectic_fourier_numeric")
    _check_nyquist(F2.ygrid.spacing, np.max(np.abs(x)), hbar, "symplectic_fourier_numeric")
    # sigma(z, z') = p x' - p' x
    Ex = np.exp(-1j * np.outer(x, p) / hbar)  # [x', p]: exp(-i p x'/hbar)
    Ep = np.exp(1j * np.outer(x, p) / hbar)  # [x, p']: exp(+i p' x/hbar)
    out = Ep @ np.asarray(F2.values).T @ Ex * F2.cell / (2 * np.pi * hbar)
    return SampledFunction2D(F2.xgrid, F2.ygrid, out)


def metaplectic_J_apply(f: SampledFunction1D, hbar=CLASSICAL_HBAR, inverse=False):
    """``J^ f = exp(-i pi/4) F f`` (n = 1); ``inverse`` applies ``exp(i pi/4) F^{-1}``."""
    hbar = check_hbar(hbar)
    if inverse:
        out = _inverse_fourier(f, hbar)
        return SampledFunction1D(f.grid, np.exp(1j * np.pi / 4) * out.values)
    out = hbar_fourier_numeric(f, hbar)
    return SampledFunction1D(f.grid, np.exp(-1j * np.pi / 4) * out.values)


def metaplectic_V_apply(f: SampledFunction1D, P, hbar=CLASSICAL_HBAR):
    """``V^_{-P} f(x) = exp(i P x^2 / 2 hbar) f(x)``."""
    hbar = check_hbar(hbar)
    x = f.grid.points
    return SampledFunction1D(f.grid, np.exp(0.5j * float(P) * x * x / hbar) * f.values)


def metaplectic_M_apply(f: SampledFunction1D, L):
    """``M^_{L,0} f(x) = sqrt|L| f(L x)``, resampled onto the same grid.

    Exact node lookup when every ``L x`` is a node, band-limited (sinc)
    interpolation otherwise.
    """
    L = float(L)
    if L == 0:
        raise ValueError("L must be nonzero")
    grid = f.grid
    x = grid.points
    t = L * x
    v = np.asarray(f.values)
    lo, hi = x[0], x[-1]
    outside = (t < lo - 1e-12) | (t > hi + 1e-12)
    if np.any(outside):
        edge = max(abs(v[0]), abs(v[-1]))
        if edge > 1e-12 * np.max(np.abs(v)):
            raise GridError("resampling out of grid range for a function that does not decay")
    k = (t - grid.center) / grid.spacing + grid.count // 2
    on_grid = np.all(np.abs(k - np.rint(k)) < 1e-9)
    if on_grid:
        ki = np.rint(k).astype(int)
        vals = np.where(outside, 0.0, v[np.clip(ki, 0, grid.count - 1)])
    else:
        kernel = np.sinc(k[:, None] - np.arange(grid.count)[None, :])
        vals = np.where(outside, 0.0, kernel @ v)
    return SampledFunction1D(grid, math.sqrt(abs(L)) * vals)


def _theta_radius(lam, hbar_like, shift=0.0, log_tol=40.0):
    # smallest K with exp(-lam (K - shift)^2 / (2 hbar_like)) below exp(-log_tol)
    return int(math.ceil(abs(shift) + math.sqrt(2 * hbar_like * log_tol / lam))) + 1


def poisson_check(M, hbar=CLASSICAL_HBAR, x=0.0):
    """Both sides of Poisson summation for ``psi(x) = exp(-M x^2 / 2 hbar)``.

    ``lhs = sum_k psi(k + x)`` and ``rhs = sum_l psi^(l) exp(2 pi i l x)``
    with ``psi^(xi) = (2 pi hbar)^{n/2} F psi(2 pi hbar xi)``; at
    ``hbar = 1/(2 pi)`` the right side is ``sum_l F psi(l) exp(i l x / hbar)``.
    Each side is truncated where the omitted terms fall below 1e-17.
    """
    hbar = check_hbar(hbar)
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    n = M.shape[0]
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size != n:
        raise ValueError("x must have length n")
    lam = np.linalg.eigvalsh(0.5 * (M.real + M.real.T))[0]
    if lam <= 0:
        raise ValueError("Re M must be positive definite")
    Minv = np.linalg.inv(M)
    lam_inv = np.linalg.eigvalsh(0.5 * (Minv.real + Minv.real.T))[0]

    K = _theta_radius(lam, hbar, np.max(np.abs(x)))
    ks = np.array(np.meshgrid(*[np.arange(-K, K + 1)] * n, indexing="ij")).reshape(n, -1).T
    y = ks + x
    lhs_terms = np.exp(-np.einsum("ki,ij,kj->k", y, M, y) / (2 * hbar))

    c = (2 * np.pi * hbar) ** 2 / (2 * hbar)
    Kl = _theta_radius(lam_inv * c, 0.5)
    ls = np.array(np.meshgrid(*[np.arange(-Kl, Kl + 1)] * n, indexing="ij")).reshape(n, -1).T
    amp = (2 * np.pi * hbar) ** (n / 2) / det_sqrt(M)
    rhs_terms = amp * np.exp(-c * np.einsum("ki,ij,kj->k", ls, Minv, ls)) * np.exp(
        2j * np.pi * ls @ x
    )

    def csum(t):
        return complex(math.fsum(t.real), math.fsum(t.imag))

    return csum(lhs_terms), csum(rhs_terms)


@dataclass(frozen=True)
class CovarianceMeasurement:
    """Second moment of a phase-space density measured by quadrature."""

    sigma: np.ndarray
    measured: np.ndarray
    normalization: float

    @property
    def ratio(self):
        """Scalar ``tr(measured Sigma^{-1}) / 2n`` (``1/(2 pi)`` for these densities)."""
        d = self.sigma.shape[0]
        return float(np.trace(self.measured @ np.linalg.inv(self.sigma)) / d)


def _phase_space_nodes(c: CovarianceState, per_axis):
    d = 2 * c.n
    sd = np.sqrt(np.diag(c.Sigma) / (2 * np.pi))
    axes = [np.linspace(-12 * s, 12 * s, per_axis) for s in sd]
    mesh = np.meshgrid(*axes, indexing="ij")
    Z = np.stack(mesh, axis=-1).reshape(-1, d)
    w = np.prod([a[1] - a[0] for a in axes])
    return Z, w


def density_integral(c: CovarianceState, per_axis=None):
    """Quadrature of the density over phase space (n <= 2)."""
    if c.n > 2:
        raise ValueError("quadrature oracles support n <= 2")
    per_axis = per_axis or (241 if c.n == 1 else 41)
    Z, w = _phase_space_nodes(c, per_axis)
    return float(np.sum(density_rho_eval(c, Z)) * w)


def numeric_covariance(c: CovarianceState, per_axis=None) -> CovarianceMeasurement:
    """Quadrature of ``int z z^T rho(z) dz`` (n <= 2), reported next to Sigma."""
    if c.n > 2:
        raise ValueError("quadrature oracles support n <= 2")
    per_axis = per_axis or (241 if c.n == 1 else 41)
    Z, w = _phase_space_nodes(c, per_axis)
    rho = density_rho_eval(c, Z)
    measured = np.einsum("k,ki,kj->ij", rho, Z, Z) * w
    return CovarianceMeasurement(np.array(c.Sigma), measured, float(np.sum(rho) * w))
