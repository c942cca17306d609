"""Weyl-Heisenberg frames with Gaussian windows.

Normalization
-------------
With ``hbar``-scaled Heisenberg operators the frame operator
``A_G = sum_lambda |T(z_lambda) phi><T(z_lambda) phi|`` of a dense lattice
satisfies ``A_G ~ (2 pi hbar)^n / vol(Lambda) * Id``.  Throughout, the
*normalized* frame operator is ``vol(Lambda) / (2 pi hbar)^n * A_G``; at
``hbar = 1/(2 pi)`` and ``Lambda = delta^{-1} S Z^{2n}`` this is the familiar
``delta^{-2n} A_G``.

Janssen's representation expands ``A_G`` over the adjoint lattice
``2 pi hbar J M^{-T} Z^{2n}``.  For ``Lambda = delta^{-1} S Z^{2n}`` with
``S`` symplectic and the standard Gaussian window every Janssen coefficient
has modulus ``exp(-pi^2 hbar delta^2 G k^2)``, ``G = S^T S``, so

    ||Id - normalized A_G|| <= sum_{k != 0} exp(-pi^2 hbar delta^2 G k^2).

At ``hbar = 1/(2 pi)`` the exponent is ``delta^2 G k^2 / (4 hbar)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from .gaussians import CLASSICAL_HBAR, GaussianState, check_hbar, cross_ambiguity_closed, wigner_gram_split
from .numerics import Grid1D, SampledFunction1D
from .symplectic import Lattice, LowerBlockSymplectic, enumerate_points, is_symplectic

__all__ = [
    "UndecidableFrameError",
    "NotAFrameError",
    "FrameConvergenceError",
    "FrameSpec",
    "FrameDiagnostics",
    "gaussian_frame_set_contains",
    "frame_normalization",
    "janssen_exponent",
    "janssen_sum_gram",
    "janssen_error_sum",
    "shortest_vector_sq",
    "predicted_rate",
    "leading_rate",
    "theta_form",
    "theta_sum",
    "theta_reference_sum",
    "ThetaCheck",
    "theta_inequality_check",
    "DualWindowApprox",
    "approximate_dual_window",
    "ExpansionReport",
    "approx_expansion",
    "hermite_functions",
    "frame_bounds_numeric",
    "frame_error_numeric",
]

_CRITICAL_RTOL = 1e-12


class UndecidableFrameError(ValueError):
    """The frame property of this (window, lattice) pair is undecidable by this library."""


class NotAFrameError(ValueError):
    """The frame specification is not a frame, or the Janssen bound cannot certify it."""


class FrameConvergenceError(RuntimeError):
    """Iterative eigenvalue estimation did not converge."""


@dataclass(frozen=True)
class FrameSpec:
    """A Weyl-Heisenberg system ``{T(z) window : z in lattice}``."""

    window: GaussianState
    lattice: Lattice
    hbar: float | None = None

    def __post_init__(self):
        if not isinstance(self.window, GaussianState):
            raise TypeError("window must be a GaussianState")
        if not isinstance(self.lattice, Lattice):
            raise TypeError("lattice must be a Lattice")
        if self.window.n != self.lattice.n:
            raise ValueError("window and lattice dimensions differ")
        hbar = self.window.hbar if self.hbar is None else check_hbar(self.hbar)
        if not math.isclose(hbar, self.window.hbar, rel_tol=1e-14):
            raise ValueError("spec hbar differs from the window's hbar")
        object.__setattr__(self, "hbar", hbar)

    @property
    def n(self):
        return self.lattice.n

    @classmethod
    def square(cls, delta, n=1, hbar=CLASSICAL_HBAR):
        return cls(GaussianState.standard(n, hbar), Lattice.square(delta, n))


@dataclass(frozen=True)
class FrameDiagnostics:
    """Janssen-sum certificate for a symplectic spec.

    ``janssen_error`` bounds ``||Id - normalized A_G||``; it is *vacuous*
    (certifies nothing) when it is >= 1.  ``predicted_rate`` is the
    exponential ``exp(-pi^2 hbar delta^2 (|L|^2 + |L|^{-2}))`` and
    ``leading_rate`` the exponential of the smallest lattice term.
    """

    janssen_error: float
    predicted_rate: float
    truncation_radius: int
    leading_rate: float = float("nan")
    tail_bound: float = 0.0
    numeric_lower_bound: float | None = None
    numeric_upper_bound: float | None = None

    @property
    def vacuous(self):
        return not self.janssen_error < 1.0

    @property
    def certified_dual_error(self):
        """Neumann-series bound ``e / (1 - e)`` (``inf`` if vacuous)."""
        e = self.janssen_error
        return e / (1.0 - e) if e < 1.0 else math.inf


# ----------------------------------------------------------------------------
# frame-set predicate


def _window_symplectic(window: GaussianState):
    # R with R^T R = G, where W(window) ~ exp(-G z^2 / hbar); window = mu(R^{-1}) phi
    return wigner_gram_split(window)


def gaussian_frame_set_contains(spec: FrameSpec) -> bool:
    """Decide whether ``spec`` is a Weyl-Heisenberg frame.

    * n = 1: a frame iff the lattice density exceeds ``1/(2 pi hbar)``
      strictly (any Gaussian window).
    * n > 1: the window is written as a metaplectic image ``mu(S) phi`` of
      the standard Gaussian; the system is then equivalent to
      ``(phi, S^{-1} Lambda)``.  If ``S^{-1} Lambda = Q diag(alpha, beta) Z^{2n}``
      with ``Q`` orthogonal and symplectic (so that ``mu(Q) phi = phi`` up
      to a phase) the answer is ``alpha_j beta_j < 2 pi hbar`` for every j.

    Exactly critical configurations (equality within a relative 1e-12)
    return False.

    Raises
    ------
    UndecidableFrameError
        For n > 1 lattices that do not reduce to a separable one.
    """
    hbar = spec.hbar
    crit = 2 * np.pi * hbar
    n = spec.n
    if n == 1:
        return bool(spec.lattice.volume < crit * (1 - _CRITICAL_RTOL))
    R = _window_symplectic(spec.window)
    N = R @ spec.lattice.generator
    NtN = N.T @ N
    off = NtN - np.diag(np.diag(NtN))
    if np.max(np.abs(off)) > 1e-10 * np.max(np.abs(NtN)):
        raise UndecidableFrameError(
            "undecidable by this library: the lattice is not a symplectic image of a separable lattice"
        )
    d = np.sqrt(np.diag(NtN))
    Q = N / d
    if not is_symplectic(Q, 1e-9):
        raise UndecidableFrameError(
            "undecidable by this library: no orthosymplectic reduction to a separable lattice"
        )
    prod = d[:n] * d[n:]
    return bool(np.all(prod < crit * (1 - _CRITICAL_RTOL)))


# ----------------------------------------------------------------------------
# Janssen sums and rates


def frame_normalization(lattice: Lattice, hbar=CLASSICAL_HBAR):
    """``vol(Lambda) / (2 pi hbar)^n``."""
    return lattice.volume / (2 * np.pi * check_hbar(hbar)) ** lattice.n


def janssen_exponent(delta, hbar=CLASSICAL_HBAR):
    """Coefficient ``c`` in the Janssen terms ``exp(-c G k^2)``: ``pi^2 hbar delta^2``."""
    return np.pi**2 * check_hbar(hbar) * float(delta) ** 2


def _theta1(q, K=None):
    # sum_{j in Z} q^{j^2}, truncated to |j| <= K when K is given
    if K is None:
        K = int(math.ceil(math.sqrt(40.0 / -math.log(q)))) + 2 if q > 0 else 0
    j = np.arange(1, K + 1)
    return 1.0 + 2.0 * math.fsum(q ** (j * j))


def _gauss_lattice_sum(A, c, tail_tol, include_zero=False, max_radius=200):
    """``sum_k exp(-c A k^2)`` over ``Z^d`` with a rigorous truncation.

    The box ``|k|_inf <= K`` is grown until the omitted mass, bounded by
    ``theta(q)^d - theta_K(q)^d`` with ``q = exp(-c lambda_min(A))``, is
    below ``tail_tol``.  Terms are added with :func:`math.fsum`.

    Returns
    -------
    value, K, tail_bound
    """
    A = np.asarray(A, dtype=float)
    d = A.shape[0]
    lam = np.linalg.eigvalsh(0.5 * (A + A.T))[0]
    if lam <= 0:
        raise ValueError("quadratic form must be positive definite")
    q = math.exp(-c * lam)
    full = _theta1(q)
    K = 1
    while True:
        # theta^d - theta_K^d = (theta - theta_K) sum_i theta^i theta_K^{d-1-i}
        part = _theta1(q, K)
        j = np.arange(K + 1, K + 60)
        gap = 2.0 * math.fsum(q ** (j * j))
        tail = gap * sum(full**i * part ** (d - 1 - i) for i in range(d))
        if tail < tail_tol or K >= max_radius:
            break
        K += 1
    if tail >= tail_tol:
        raise ValueError("lattice sum truncation radius exceeded; form too degenerate")
    ks = np.array(list(itertools.product(range(-K, K + 1), repeat=d)), dtype=float)
    if not include_zero:
        ks = ks[np.any(ks != 0, axis=1)]
    terms = np.exp(-c * np.einsum("ki,ij,kj->k", ks, A, ks))
    return math.fsum(terms), K, tail


def janssen_sum_gram(G, delta, hbar=CLASSICAL_HBAR, tail_tol=1e-16):
    """``sum_{k != 0} exp(-pi^2 hbar delta^2 G k^2)`` and its truncation data."""
    return _gauss_lattice_sum(G, janssen_exponent(delta, hbar), tail_tol)


def shortest_vector_sq(G):
    """``min_{k != 0} G k^2`` by bounded enumeration (small dimensions)."""
    G = np.asarray(G, dtype=float)
    d = G.shape[0]
    lam = np.linalg.eigvalsh(G)[0]
    best = float(np.min(np.diag(G)))
    K = int(math.floor(math.sqrt(best / lam) + 1e-9))
    for k in itertools.product(range(-K, K + 1), repeat=d):
        if any(k):
            v = np.array(k, dtype=float)
            best = min(best, float(v @ G @ v))
    return best


def predicted_rate(B: LowerBlockSymplectic, delta, hbar=CLASSICAL_HBAR):
    """``exp(-pi^2 hbar delta^2 (|L|^2 + |L|^{-2}))`` with the spectral norm of ``L``.

    At ``hbar = 1/(2 pi)`` this is ``exp(-(delta^2 / 4 hbar)(|L|^2 + |L|^{-2}))``.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    nL = np.linalg.norm(B.L, 2)
    return math.exp(-janssen_exponent(delta, hbar) * (nL**2 + nL**-2))


def leading_rate(G, delta, hbar=CLASSICAL_HBAR):
    """``exp(-pi^2 hbar delta^2 min_{k != 0} G k^2)``, the decay of the largest Janssen term."""
    return math.exp(-janssen_exponent(delta, hbar) * shortest_vector_sq(G))


def janssen_error_sum(spec: FrameSpec, tail_tol=1e-16) -> FrameDiagnostics:
    """Janssen-sum bound on ``||Id - normalized A_G||`` for a symplectic lattice.

    Requires the standard Gaussian window and a lattice
    ``delta^{-1} S Z^{2n}`` with ``S`` symplectic (detected automatically).
    """
    if not spec.window.is_standard():
        raise ValueError("the Janssen certificate needs the standard Gaussian window")
    tag = spec.lattice.tag
    if tag is None:
        raise ValueError("lattice is not symplectic (no delta^{-1} S Z^{2n} form)")
    G = tag.gram
    value, K, tail = janssen_sum_gram(G, tag.delta, spec.hbar, tail_tol)
    return FrameDiagnostics(
        janssen_error=value,
        predicted_rate=predicted_rate(tag.B, tag.delta, spec.hbar),
        truncation_radius=K,
        leading_rate=leading_rate(G, tag.delta, spec.hbar),
        tail_bound=tail,
    )


# ----------------------------------------------------------------------------
# theta sums


def theta_form(alpha, beta, gamma, form="squared"):
    """Quadratic form of the sheared theta sum.

    ``form="squared"``: ``alpha^2 k^2 + 2 alpha beta gamma k l + beta^2 (1 + gamma)^2 l^2``
    (determinant ``1 + 2 gamma`` when ``alpha beta = 1``).

    ``form="unimodular"``: ``alpha^2 k^2 + 2 alpha beta gamma k l + beta^2 (1 + gamma^2) l^2
    = (alpha k + beta gamma l)^2 + beta^2 l^2``, the Gram form of a sheared
    unimodular lattice (determinant 1).
    """
    if form == "squared":
        c = (1 + gamma) ** 2
    elif form == "unimodular":
        c = 1 + gamma**2
    else:
        raise ValueError("form must be 'squared' or 'unimodular'")
    return np.array([[alpha**2, alpha * beta * gamma], [alpha * beta * gamma, beta**2 * c]])


def _check_unit(alpha, beta):
    if abs(alpha * beta - 1) > 1e-12:
        raise ValueError(f"alpha * beta must equal 1, got {alpha * beta!r}")


def theta_sum(r, alpha, beta, gamma, tail_tol=1e-14, form="squared"):
    """``sum_{k,l} exp(-r Q(k, l))`` for the form of :func:`theta_form`."""
    _check_unit(alpha, beta)
    if not r > 0:
        raise ValueError("r must be positive")
    A = theta_form(alpha, beta, gamma, form)
    if np.linalg.eigvalsh(A)[0] <= 0:
        raise ValueError("quadratic form is not positive definite")
    return _gauss_lattice_sum(A, r, tail_tol, include_zero=True)[0]


def theta_reference_sum(r, alpha, beta, tail_tol=1e-14):
    """``sum_{k,l} exp(-r (k^2 / alpha^2 + l^2 / beta^2))``."""
    _check_unit(alpha, beta)
    A = np.diag([alpha**-2, beta**-2])
    return _gauss_lattice_sum(A, r, tail_tol, include_zero=True)[0]


@dataclass(frozen=True)
class ThetaCheck:
    lhs: float
    rhs: float

    @property
    def margin(self):
        return self.rhs - self.lhs

    @property
    def holds(self):
        return self.lhs <= self.rhs + 1e-12


def theta_inequality_check(r, alpha, beta, gamma, form="squared") -> ThetaCheck:
    """Compare :func:`theta_sum` with :func:`theta_reference_sum`.

    With the squared form the inequality ``lhs <= rhs`` can fail for
    ``gamma < 0`` (e.g. ``r = 1, alpha = 1, gamma = -0.4``: the form has
    determinant ``1 + 2 gamma < 1``); :attr:`ThetaCheck.holds` reports this
    faithfully.  The unimodular form satisfies it for every ``gamma``.
    """
    return ThetaCheck(theta_sum(r, alpha, beta, gamma, form=form), theta_reference_sum(r, alpha, beta))


# ----------------------------------------------------------------------------
# approximate dual window and expansions


@dataclass(frozen=True)
class DualWindowApprox:
    """Stand-in ``scale * window`` for the canonical dual window."""

    window: GaussianState
    scale: float
    certified_error: float

    def __call__(self, x):
        return self.scale * self.window(x)


def approximate_dual_window(spec: FrameSpec, tail_tol=1e-16) -> DualWindowApprox:
    """``vol(Lambda)/(2 pi hbar)^n * window`` with a certified relative error.

    The error bound ``e / (1 - e)``, ``e`` the Janssen sum, follows from a
    Neumann series for the inverse of the normalized frame operator.

    Raises
    ------
    NotAFrameError
        If the Janssen sum is >= 1 (density too low to certify).
    """
    diag = janssen_error_sum(spec, tail_tol)
    if diag.vacuous:
        raise NotAFrameError(
            f"Janssen bound {diag.janssen_error:.6g} >= 1: cannot certify an approximate dual"
        )
    return DualWindowApprox(
        spec.window, frame_normalization(spec.lattice, spec.hbar), diag.certified_dual_error
    )


@dataclass(frozen=True)
class ExpansionReport:
    """Errors of a truncated approximate expansion, with its parameters."""

    sup_err: float
    l2_err: float
    radius: float
    n_terms: int
    grid: Grid1D
    coefficient_tail: float
    is_frame: bool


def _shifted_windows(window, points, x, hbar):
    # rows: T(z) window sampled at x, for each lattice point z; window is any callable
    x0 = points[:, :1]
    p0 = points[:, 1:]
    phase = np.exp(1j / hbar * (p0 * x[None, :] - 0.5 * p0 * x0))
    return phase * window(x[None, :] - x0)


def _auto_radius(coef_fn, lattice, start, tol=1e-12, grow=1.25, max_iter=40):
    step = np.linalg.norm(lattice.generator, 2)
    R = start
    for _ in range(max_iter):
        pts, ks = enumerate_points(lattice, R)
        c = coef_fn(pts)
        peak = np.max(np.abs(c))
        shell = np.linalg.norm(pts, axis=1) > R - step
        tail = np.max(np.abs(c[shell])) / peak if np.any(shell) else 0.0
        if tail < tol:
            return R, pts, ks, c, tail
        R *= grow
    raise FrameConvergenceError("could not find a truncation radius for the coefficients")


def approx_expansion(target, spec: FrameSpec, radius=None, grid: Grid1D | None = None, force=False):
    """Approximate expansion ``psi ~ vol/(2 pi hbar)^n sum (psi | T(z) phi) T(z) phi`` (n = 1).

    Parameters
    ----------
    target : GaussianState or SampledFunction1D
        Gaussian targets get closed-form coefficients
        ``(2 pi hbar)^n A(psi, phi)(z)``; sampled targets use grid inner
        products (``grid`` is then the target's grid).
    radius : float, optional
        Lattice truncation radius.  By default it is grown until the
        coefficients on the outer shell fall below ``1e-12`` of the peak.
    force : bool
        Run even when the lattice does not give a frame (e.g. critical density).

    Returns
    -------
    coefficients : list of (ndarray, complex)
    reconstruction : SampledFunction1D
    report : ExpansionReport
    """
    if spec.n != 1:
        raise ValueError("grid expansions are implemented for n = 1")
    hbar = spec.hbar
    is_frame = gaussian_frame_set_contains(spec)
    if not is_frame and not force:
        raise NotAFrameError("spec is not a frame (use force=True to run anyway)")
    window = spec.window
    if isinstance(target, SampledFunction1D):
        grid = target.grid
        x = grid.points
        tv = np.asarray(target.values)

        def coef_fn(pts):
            rows = _shifted_windows(window, pts, x, hbar)
            return rows.conj() @ tv * grid.spacing

    elif isinstance(target, GaussianState):
        if grid is None:
            grid = Grid1D.for_gaussian(np.linalg.inv(target.X) + np.linalg.inv(window.X), hbar, 1024)
        x = grid.points
        tv = target(x)

        def coef_fn(pts):
            return (2 * np.pi * hbar) * cross_ambiguity_closed(target, window, pts)

    else:
        raise TypeError("target must be a GaussianState or SampledFunction1D")

    if radius is None:
        start = 2 * math.sqrt(hbar) + np.linalg.norm(spec.lattice.generator, 2)
        radius, pts, ks, c, tail = _auto_radius(coef_fn, spec.lattice, start)
    else:
        pts, ks = enumerate_points(spec.lattice, radius)
        c = coef_fn(pts)
        step = np.linalg.norm(spec.lattice.generator, 2)
        shell = np.linalg.norm(pts, axis=1) > radius - step
        tail = float(np.max(np.abs(c[shell])) / np.max(np.abs(c))) if np.any(shell) else 0.0

    scale = frame_normalization(spec.lattice, hbar)
    rec = np.zeros(grid.count, dtype=complex)
    for i0 in range(0, len(pts), 512):
        blk = slice(i0, i0 + 512)
        rec += c[blk] @ _shifted_windows(window, pts[blk], x, hbar)
    rec *= scale
    diff = rec - tv
    report = ExpansionReport(
        sup_err=float(np.max(np.abs(diff))),
        l2_err=float(np.sqrt(np.sum(np.abs(diff) ** 2) * grid.spacing)),
        radius=float(radius),
        n_terms=len(pts),
        grid=grid,
        coefficient_tail=float(tail),
        is_frame=is_frame,
    )
    coefficients = [(z, complex(ci)) for z, ci in zip(pts, c)]
    return coefficients, SampledFunction1D(grid, rec), report


# ----------------------------------------------------------------------------
# numeric frame bounds


def hermite_functions(K, x, hbar=CLASSICAL_HBAR):
    """Rows ``h_0 .. h_K`` of the ``hbar``-scaled Hermite functions at ``x``.

    ``h_k(x) = (pi hbar)^{-1/4} (2^k k!)^{-1/2} H_k(x / sqrt(hbar)) exp(-x^2 / 2 hbar)``,
    evaluated with the stable three-term recurrence.
    """
    t = np.asarray(x, dtype=float) / math.sqrt(hbar)
    H = np.empty((K + 1,) + t.shape)
    H[0] = (np.pi * hbar) ** -0.25 * np.exp(-0.5 * t * t)
    if K >= 1:
        H[1] = math.sqrt(2.0) * t * H[0]
    for k in range(2, K + 1):
        H[k] = math.sqrt(2.0 / k) * t * H[k - 1] - math.sqrt((k - 1) / k) * H[k - 2]
    return H


def frame_bounds_numeric(
    spec: FrameSpec,
    radius=None,
    grid: Grid1D | None = None,
    hermite_order=48,
    window=None,
    tol=1e-6,
    max_iter=5000,
):
    """Estimate the bounds of the normalized frame operator (n = 1).

    The frame operator is compressed onto the span of the first
    ``hermite_order + 1`` Hermite functions; the compression's extremal
    eigenvalues (found with ARPACK to tolerance ``tol``) are estimates of
    the optimal bounds from the inside (``a_est >= a``, ``b_est <= b``).
    The subspace and the default ball-shaped lattice truncation are both
    rotation invariant.

    Parameters
    ----------
    window : callable, optional
        Override the Gaussian window with an arbitrary (L2-normalized on the
        grid) callable; used for exploratory non-Gaussian comparisons.

    Returns
    -------
    a_est, b_est : float
    """
    if spec.n != 1:
        raise ValueError("grid frame bounds are implemented for n = 1")
    hbar = spec.hbar
    K = int(hermite_order)
    RH = math.sqrt((2 * K + 1) * hbar)
    if radius is None:
        radius = RH + math.sqrt(4 * hbar * math.log(1e14)) * max(
            1.0, math.sqrt(np.max(np.linalg.eigvalsh(np.linalg.inv(spec.window.X))))
        )
    if grid is None:
        halfwidth = RH + 10 * math.sqrt(hbar)
        pmax = RH + radius + 10 * math.sqrt(hbar)
        count = int(math.ceil(2 * halfwidth / (0.5 * np.pi * hbar / pmax)))
        count = max(256, count + count % 2)
        grid = Grid1D.symmetric(halfwidth, count)
    x = grid.points
    win = spec.window if window is None else window
    if window is not None:
        nrm = math.sqrt(np.sum(np.abs(window(x)) ** 2) * grid.spacing)
        win = lambda t, w=window, c=nrm: w(t) / c  # noqa: E731
    pts, _ = enumerate_points(spec.lattice, radius)
    Hm = hermite_functions(K, x, hbar)
    V = np.empty((len(pts), K + 1), dtype=complex)
    for i0 in range(0, len(pts), 256):
        blk = slice(i0, i0 + 256)
        rows = _shifted_windows(win, pts[blk], x, hbar)
        V[blk] = rows.conj() @ Hm.T * grid.spacing  # (h_k | T(z) g) conjugated
    V *= math.sqrt(frame_normalization(spec.lattice, hbar))
    dim = K + 1
    op = LinearOperator((dim, dim), matvec=lambda v: V.conj().T @ (V @ v), dtype=complex)
    try:
        if dim <= 8:
            ev = np.linalg.eigvalsh(V.conj().T @ V)
            return float(ev[0]), float(ev[-1])
        # a wide Krylov basis keeps ARPACK robust when the spectrum clusters at 0
        ncv = min(dim - 1, 40)
        kw = dict(k=1, tol=tol, maxiter=max_iter, ncv=ncv, return_eigenvectors=False)
        lo = eigsh(op, which="SA", **kw)
        hi = eigsh(op, which="LA", **kw)
    except ArpackNoConvergence as exc:
        raise FrameConvergenceError(f"eigenvalue iteration did not converge: {exc}") from exc
    return float(lo[0]), float(hi[0])


def frame_error_numeric(spec: FrameSpec, **kwargs):
    """``max(|1 - a_est|, |b_est - 1|)``: spectral estimate of ``||Id - normalized A_G||``."""
    a, b = frame_bounds_numeric(spec, **kwargs)
    return max(abs(1 - a), abs(b - 1))

