"""The phase-space lift ``U_phi psi = (2 pi hbar)^{n/2} W(psi, phi)`` and its frames.

``U_phi`` is an isometry of ``L^2(R^n)`` onto a closed subspace ``H_phi`` of
``L^2(R^{2n})`` and intertwines Heisenberg shifts with the phase-space
translations ``T~(z0) Psi(z) = exp(-i sigma(z, z0)/hbar) Psi(z - z0/2)``.
A Weyl-Heisenberg frame ``{T(z) phi}`` is carried to the frame
``{T~(z) Phi}`` of ``H_phi``, with ``Phi = U_phi phi``.

Grid operations here are for n = 1 (2-D phase space); the coefficients
of :func:`phase_space_expand` are closed-form in any dimension.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frames import (
    FrameSpec,
    NotAFrameError,
    frame_normalization,
    gaussian_frame_set_contains,
    janssen_error_sum,
)
from .gaussians import (
    GaussianState,
    PhaseSpaceGaussian,
    coefficient_H_matrix,
    expansion_coefficient,
    u_phi_closed,
)
from .numerics import Grid1D, SampledFunction1D, SampledFunction2D, sample, sample_2d, wigner_numeric
from .symplectic import enumerate_points

__all__ = [
    "PhaseSpaceFrameSpec",
    "phase_space_grid",
    "u_phi_numeric",
    "phase_space_norm",
    "phase_space_inner",
    "phase_space_frame_apply",
    "frame_coefficients_2d",
    "PhaseSpaceReport",
    "phase_space_expand",
    "u_phi_adjoint_numeric",
    "projection_check",
]


@dataclass(frozen=True)
class PhaseSpaceFrameSpec:
    """Phase-space image of a Gaussian Weyl-Heisenberg frame.

    The base window must be the standard Gaussian and the base system a
    frame.
    """

    base: FrameSpec

    def __post_init__(self):
        if not self.base.window.is_standard():
            raise ValueError("phase-space frames use the standard Gaussian window")
        if not gaussian_frame_set_contains(self.base):
            raise NotAFrameError("the base Weyl-Heisenberg system is not a frame")

    @property
    def lattice(self):
        return self.base.lattice

    @property
    def hbar(self):
        return self.base.hbar

    @property
    def n(self):
        return self.base.n

    @property
    def window(self) -> PhaseSpaceGaussian:
        """``Phi = U_phi phi`` in closed form."""
        return u_phi_closed(self.base.window)

    @classmethod
    def square(cls, delta, n=1, hbar=None):
        from .gaussians import CLASSICAL_HBAR

        return cls(FrameSpec.square(delta, n, CLASSICAL_HBAR if hbar is None else hbar))


def phase_space_grid(target: PhaseSpaceGaussian | None = None, hbar=None, count=256, extra=0.0):
    """Square (x, p) grid covering ``target`` down to ~1e-16 of its peak.

    ``extra`` widens the half-width, e.g. to cover translated copies.
    """
    if target is not None:
        hbar = target.hbar
        lam = np.linalg.eigvalsh(target.F.real)[0]
    else:
        lam = 0.5
    halfwidth = math.sqrt(37.0 * hbar / lam) + extra
    g = Grid1D.symmetric(halfwidth, count)
    return g, g


def phase_space_inner(F: SampledFunction2D, G: SampledFunction2D):
    """``((F | G)) = sum F conj(G) dx dp``."""
    if F.xgrid != G.xgrid or F.ygrid != G.ygrid:
        raise ValueError("functions live on different grids")
    return complex(np.vdot(G.values, F.values) * F.cell)


def phase_space_norm(F: SampledFunction2D):
    return math.sqrt(float(np.sum(np.abs(F.values) ** 2) * F.cell))


def u_phi_numeric(
    psi: SampledFunction1D,
    phi: GaussianState,
    pgrid: Grid1D | None = None,
    x_stride=1,
    xgrid: Grid1D | None = None,
    check_support=True,
):
    """``(2 pi hbar)^{1/2} W(psi, phi)`` by quadrature (n = 1)."""
    if phi.n != 1:
        raise ValueError("grid lift is implemented for n = 1")
    hbar = phi.hbar
    W = wigner_numeric(
        psi,
        sample(phi, psi.grid),
        pgrid,
        hbar,
        x_stride=x_stride,
        xgrid=xgrid,
        check_support=check_support,
    )
    return SampledFunction2D(W.xgrid, W.ygrid, math.sqrt(2 * np.pi * hbar) * W.values)


def _translated_on_grid(Phi: PhaseSpaceGaussian, z0, xgrid: Grid1D, pgrid: Grid1D):
    """``T~(z0) Phi`` on a product grid (n = 1).

    A diagonal ``F`` makes the translated window an outer product of two
    1-D factors; other ``F`` fall back to a full mesh evaluation.
    """
    F = Phi.F
    if F[0, 1] != 0:
        X, P = np.meshgrid(xgrid.points, pgrid.points, indexing="ij")
        return Phi.translated(z0, np.stack([X, P], axis=-1))
    x0, p0 = float(z0[0]), float(z0[1])
    x, p = xgrid.points, pgrid.points
    hbar = Phi.hbar
    # exp(-i sigma(z, z0)/hbar) = exp(-i (p x0 - p0 x)/hbar)
    fx = np.exp(-F[0, 0] * (x - 0.5 * x0) ** 2 / hbar + 1j * p0 * x / hbar)
    fp = np.exp(-F[1, 1] * (p - 0.5 * p0) ** 2 / hbar - 1j * x0 * p / hbar)
    return Phi.amplitude * np.outer(fx, fp)


def frame_coefficients_2d(Psi: SampledFunction2D, spec: PhaseSpaceFrameSpec, points):
    """Quadrature inner products ``((Psi | T~(z) Phi))`` for each point."""
    Phi = spec.window
    v = np.asarray(Psi.values)
    return np.array(
        [np.vdot(_translated_on_grid(Phi, z, Psi.xgrid, Psi.ygrid), v) * Psi.cell for z in points],
        dtype=complex,
    )


def phase_space_frame_apply(Psi: SampledFunction2D, spec: PhaseSpaceFrameSpec, radius):
    """Truncated phase-space frame operator ``sum ((Psi | T~ Phi)) T~ Phi`` (n = 1).

    Inner products are 2-D quadratures on ``Psi``'s grid; translated
    windows are evaluated in closed form, so no grid alignment is needed.
    The result is *not* normalized (multiply by
    :func:`gaussframes.frames.frame_normalization` for that).
    """
    if spec.n != 1:
        raise ValueError("grid frame operator is implemented for n = 1")
    Phi = spec.window
    pts, _ = enumerate_points(spec.lattice, radius)
    v = np.asarray(Psi.values)
    out = np.zeros_like(v)
    for z in pts:
        tw = _translated_on_grid(Phi, z, Psi.xgrid, Psi.ygrid)
        out += (np.vdot(tw, v) * Psi.cell) * tw
    return SampledFunction2D(Psi.xgrid, Psi.ygrid, out)


@dataclass(frozen=True)
class PhaseSpaceReport:
    sup_err: float
    l2_err: float
    rel_l2_err: float
    radius: float
    n_terms: int
    janssen_error: float
    predicted_rate: float
    leading_rate: float


def phase_space_expand(
    target: PhaseSpaceGaussian,
    spec: PhaseSpaceFrameSpec,
    radius=None,
    grid: tuple[Grid1D, Grid1D] | None = None,
):
    """Approximate expansion of a phase-space Gaussian in translated ``Phi``.

    ``Psi ~ vol/(2 pi hbar)^n sum_lambda c_lambda T~(z_lambda) Phi`` with
    closed-form ``c_lambda = ((Psi | T~(z_lambda) Phi))``.  The
    reconstruction (n = 1) is compared with the sampled closed-form target.

    Returns
    -------
    coefficients : list of (k, z, c)
    reconstruction : SampledFunction2D or None (n > 1)
    report : PhaseSpaceReport or None (n > 1)
    """
    if not math.isclose(target.hbar, spec.hbar, rel_tol=1e-14):
        raise ValueError("target and spec use different hbar")
    hbar = spec.hbar
    if radius is None:
        # coefficients decay like exp(-lambda z^2 / 4 hbar); go to ~1e-14 of the peak
        H = coefficient_H_matrix(target.F)
        lam = np.linalg.eigvalsh(np.real(np.eye(2 * target.n) + H))[0]
        radius = math.sqrt(4 * hbar * 33.0 / max(lam, 1e-3)) + np.linalg.norm(
            spec.lattice.generator, 2
        )
    pts, ks = enumerate_points(spec.lattice, radius)
    c = expansion_coefficient(target, pts)
    coefficients = [(k, z, complex(ci)) for k, z, ci in zip(ks, pts, c)]
    if spec.n != 1:
        return coefficients, None, None

    if grid is None:
        grid = phase_space_grid(target)
    mesh = sample_2d(lambda z: np.zeros(z.shape[:-1]), *grid).mesh
    Phi = spec.window
    rec = np.zeros(mesh.shape[:-1], dtype=complex)
    for z, ci in zip(pts, c):
        rec += ci * _translated_on_grid(Phi, z, *grid)
    rec *= frame_normalization(spec.lattice, hbar)
    ref = target(mesh)
    cell = grid[0].spacing * grid[1].spacing
    diff = rec - ref
    l2 = math.sqrt(float(np.sum(np.abs(diff) ** 2) * cell))
    nref = math.sqrt(float(np.sum(np.abs(ref) ** 2) * cell))
    diag = janssen_error_sum(spec.base)
    report = PhaseSpaceReport(
        sup_err=float(np.max(np.abs(diff))),
        l2_err=l2,
        rel_l2_err=l2 / nref,
        radius=float(radius),
        n_terms=len(pts),
        janssen_error=diag.janssen_error,
        predicted_rate=diag.predicted_rate,
        leading_rate=diag.leading_rate,
    )
    return coefficients, SampledFunction2D(grid[0], grid[1], rec), report


def u_phi_adjoint_numeric(Psi: SampledFunction2D, phi: GaussianState, ugrid: Grid1D | None = None):
    """Quadrature adjoint ``U_phi^* Psi`` (n = 1).

    ``U_phi^* Psi(u) = 2 (2 pi hbar)^{-1/2} int exp(2 i p (u - x)/hbar) phi(2x - u) Psi(x, p) dx dp``.
    The default output grid has the spacing of ``Psi``'s x-grid and twice
    its extent (the kernel maps ``x`` to ``u ~ 2x``).
    """
    hbar = phi.hbar
    if ugrid is None:
        ugrid = Grid1D(Psi.xgrid.center, Psi.xgrid.spacing, 2 * Psi.xgrid.count)
    x, p, u = Psi.xgrid.points, Psi.ygrid.points, ugrid.points
    v = np.asarray(Psi.values) * np.exp(-2j * np.outer(x, p) / hbar)
    inner = v @ np.exp(2j * np.outer(p, u) / hbar) * Psi.ygrid.spacing  # (x, u)
    kern = phi(2 * x[:, None] - u[None, :])
    vals = np.sum(kern * inner, axis=0) * Psi.xgrid.spacing * 2 / math.sqrt(2 * np.pi * hbar)
    return SampledFunction1D(ugrid, vals)


def projection_check(Psi: SampledFunction2D, phi: GaussianState):
    """``|||Pi_phi Psi - Psi|||`` with ``Pi_phi = U_phi U_phi^*`` realized by quadrature.

    Small exactly when ``Psi`` lies (numerically) in ``H_phi``.
    """
    psi = u_phi_adjoint_numeric(Psi, phi)
    back = u_phi_numeric(psi, phi, pgrid=Psi.ygrid, xgrid=Psi.xgrid, check_support=False)
    diff = np.asarray(back.values) - np.asarray(Psi.values)
    return math.sqrt(float(np.sum(np.abs(diff) ** 2) * Psi.cell))
