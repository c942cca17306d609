"""Closed-form calculus for centred Gaussians and their phase-space images.

Conventions
-----------
* ``Mx^2`` denotes the bilinear form ``x^T M x`` (no conjugation).
* ``phi_M(x) = (pi hbar)^{-n/4} det(X)^{1/4} exp(-Mx^2 / 2 hbar)`` with
  ``M = X + iY``, ``X`` positive definite; ``M = I`` is the standard Gaussian.
* Square roots of determinants of complex symmetric matrices with positive
  definite real part are taken as the product of principal square roots of
  the eigenvalues (all eigenvalues then lie in the open right half plane).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .symplectic import standard_J

__all__ = [
    "CLASSICAL_HBAR",
    "check_hbar",
    "det_sqrt",
    "GaussianState",
    "PhaseSpaceGaussian",
    "CovarianceState",
    "evaluate_gaussian",
    "cross_wigner_closed",
    "wigner_gram_split",
    "cross_ambiguity_closed",
    "fourier_gaussian",
    "u_phi_closed",
    "expansion_coefficient",
    "expansion_coefficient_H",
    "coefficient_H_matrix",
    "corollary_f_equals_identity_check",
    "density_rho_eval",
    "admissibility_eigenvalues",
    "admissible_density",
    "random_gaussian_state",
]

CLASSICAL_HBAR = 1.0 / (2.0 * np.pi)

_MIN_REAL_EIG = 1e-10


def check_hbar(hbar):
    hbar = float(hbar)
    if not (np.isfinite(hbar) and hbar > 0):
        raise ValueError(f"hbar must be positive and finite, got {hbar}")
    return hbar


def _symmetric(A, name, dtype=complex):
    A = np.atleast_2d(np.asarray(A, dtype=dtype))
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{name} must be a square matrix")
    if np.max(np.abs(A - A.T), initial=0.0) > 1e-12 * max(1.0, np.max(np.abs(A))):
        raise ValueError(f"{name} must be symmetric")
    A = 0.5 * (A + A.T)
    A.setflags(write=False)
    return A


def _coords(x, d):
    x = np.asarray(x, dtype=float)
    if d == 1:
        return x[..., None]
    if x.shape[-1] != d:
        raise ValueError(f"expected trailing dimension {d}, got shape {x.shape}")
    return x


def _quad(A, x):
    return np.einsum("...i,ij,...j->...", x, A, x)


def det_sqrt(A):
    """Principal-branch ``det(A)^{1/2}`` for complex symmetric ``A``, Re A > 0."""
    ev = np.linalg.eigvals(np.asarray(A, dtype=complex))
    return complex(np.prod(np.sqrt(ev)))


@dataclass(frozen=True)
class GaussianState:
    """Normalized centred Gaussian ``phi_M`` on R^n."""

    M: np.ndarray
    hbar: float = CLASSICAL_HBAR

    def __post_init__(self):
        M = _symmetric(self.M, "M")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "hbar", check_hbar(self.hbar))
        lo = np.linalg.eigvalsh(M.real)[0]
        if lo < _MIN_REAL_EIG:
            raise ValueError(
                f"Re M must be positive definite; smallest eigenvalue is {lo:.6g}"
            )

    @classmethod
    def standard(cls, n=1, hbar=CLASSICAL_HBAR):
        return cls(np.eye(n), hbar)

    @classmethod
    def generalized_1d(cls, P, L, hbar=CLASSICAL_HBAR):
        """The one-dimensional ``phi_{P,L}``, i.e. ``M = L^2 + i L P``."""
        if L <= 0:
            raise ValueError("L must be positive")
        return cls(np.array([[L * L + 1j * L * P]]), hbar)

    @property
    def n(self):
        return self.M.shape[0]

    @property
    def X(self):
        return self.M.real

    @property
    def Y(self):
        return self.M.imag

    @property
    def norm_constant(self):
        return (np.pi * self.hbar) ** (-self.n / 4) * np.linalg.det(self.X) ** 0.25

    def __call__(self, x):
        x = _coords(x, self.n)
        return self.norm_constant * np.exp(-_quad(self.M, x) / (2 * self.hbar))

    def shifted(self, z0, x):
        """Evaluate ``T(z0) phi_M`` at ``x`` (Heisenberg shift, closed form)."""
        n = self.n
        z0 = np.asarray(z0, dtype=float)
        x0, p0 = z0[:n], z0[n:]
        xs = _coords(x, n)
        phase = np.exp(1j / self.hbar * (xs @ p0 - 0.5 * p0 @ x0))
        return phase * self(xs - x0 if n > 1 else (xs - x0)[..., 0])

    def is_standard(self, tol=1e-14):
        return bool(np.max(np.abs(self.M - np.eye(self.n))) <= tol)


@dataclass(frozen=True)
class PhaseSpaceGaussian:
    """``amplitude * exp(-F z^2 / hbar)`` on R^{2n}."""

    amplitude: complex
    F: np.ndarray
    hbar: float = CLASSICAL_HBAR

    def __post_init__(self):
        F = _symmetric(self.F, "F")
        if F.shape[0] % 2:
            raise ValueError("F must have even size")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        object.__setattr__(self, "hbar", check_hbar(self.hbar))
        lo = np.linalg.eigvalsh(F.real)[0]
        if lo <= 0:
            raise ValueError(f"Re F must be positive definite; smallest eigenvalue {lo:.6g}")

    @property
    def n(self):
        return self.F.shape[0] // 2

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        return self.amplitude * np.exp(-_quad(self.F, z) / self.hbar)

    def translated(self, z0, z):
        """Evaluate ``T~(z0) Psi`` at ``z``: ``exp(-i sigma(z, z0)/hbar) Psi(z - z0/2)``."""
        z0 = np.asarray(z0, dtype=float)
        z = np.asarray(z, dtype=float)
        sigma = z @ (standard_J(self.n).T @ z0)  # z0^T J z
        return np.exp(-1j * sigma / self.hbar) * self(z - 0.5 * z0)


def evaluate_gaussian(g: GaussianState, x):
    return g(x)


def _check_pair(g1, g2):
    if g1.n != g2.n:
        raise ValueError("Gaussians live in different dimensions")
    if not np.isclose(g1.hbar, g2.hbar, rtol=1e-14, atol=0):
        raise ValueError("Gaussians use different hbar")


def cross_wigner_closed(g1: GaussianState, g2: GaussianState) -> PhaseSpaceGaussian:
    """Cross-Wigner transform ``W(phi_M, phi_M')`` as a phase-space Gaussian.

    ``W = (pi hbar)^{-n} C exp(-F z^2 / hbar)`` with
    ``C = det(X X')^{1/4} det((M + conj M')/2)^{-1/2}`` and ``F`` assembled
    from ``Sigma = M + conj M'``.
    """
    _check_pair(g1, g2)
    n, hbar = g1.n, g1.hbar
    M, Mc = g1.M, np.conj(g2.M)
    Sig = M + Mc
    if np.linalg.cond(Sig) > 1e12:
        raise ValueError("M + conj(M') is numerically singular")
    Si = np.linalg.inv(Sig)
    D = M - Mc
    F = np.block([[2 * Mc @ Si @ M, -1j * D @ Si], [-1j * Si @ D, 2 * Si]])
    F = 0.5 * (F + F.T)
    C = (np.linalg.det(g1.X) * np.linalg.det(g2.X)) ** 0.25 / det_sqrt(0.5 * Sig)
    return PhaseSpaceGaussian((np.pi * hbar) ** (-n) * C, F, hbar)


def wigner_gram_split(g: GaussianState):
    """Symplectic ``S = [[X^{1/2}, 0], [X^{-1/2} Y, X^{-1/2}]]`` with ``S^T S = G``.

    ``G`` is the (real) exponent matrix of the auto-Wigner transform of ``g``.
    """
    w, V = np.linalg.eigh(g.X)
    if w[0] <= 0:
        raise ValueError("Re M is not positive definite")
    Xh = (V * np.sqrt(w)) @ V.T
    Xmh = (V / np.sqrt(w)) @ V.T
    Z = np.zeros_like(Xh)
    return np.block([[Xh, Z], [Xmh @ g.Y, Xmh]])


def cross_ambiguity_closed(g1: GaussianState, g2: GaussianState, z):
    """``A(phi_M, phi_M')(z) = 2^{-n} W(phi_M, phi_M')(z/2)`` (Gaussians are even)."""
    W = cross_wigner_closed(g1, g2)
    z = np.asarray(z, dtype=float)
    return 2.0 ** (-g1.n) * W(0.5 * z)


def fourier_gaussian(M, hbar=CLASSICAL_HBAR):
    """hbar-Fourier transform of ``exp(-Mx^2 / 2 hbar)``.

    Returns ``(det(M)^{-1/2}, M^{-1})`` so that the transform equals
    ``amplitude * exp(-exponent p^2 / 2 hbar)``.
    """
    check_hbar(hbar)
    M = _symmetric(M, "M")
    if np.linalg.eigvalsh(M.real)[0] <= 0:
        raise ValueError("Re M must be positive definite")
    if np.linalg.cond(M) > 1e12:
        raise ValueError("M is singular")
    return 1.0 / det_sqrt(M), np.linalg.inv(M)


def u_phi_closed(g: GaussianState) -> PhaseSpaceGaussian:
    """``(2 pi hbar)^{n/2} W(g, phi)`` with ``phi`` the standard Gaussian."""
    W = cross_wigner_closed(g, GaussianState.standard(g.n, g.hbar))
    return PhaseSpaceGaussian((2 * np.pi * g.hbar) ** (g.n / 2) * W.amplitude, W.F, g.hbar)


def coefficient_H_matrix(F):
    """``H = (J + iI)^T (F + I)^{-1} (J + iI)``."""
    F = np.asarray(F, dtype=complex)
    d = F.shape[0]
    K = standard_J(d // 2) + 1j * np.eye(d)
    return K.T @ np.linalg.solve(F + np.eye(d), K)


def _coeff_prefactor(target: PhaseSpaceGaussian):
    n, hbar = target.n, target.hbar
    A = target.F + np.eye(2 * n)
    if np.linalg.eigvalsh(A.real)[0] <= 0 or np.linalg.cond(A) > 1e12:
        raise ValueError("F + I is numerically singular")
    return A, target.amplitude * (2 * np.pi * hbar) ** (n / 2) / det_sqrt(A)


def expansion_coefficient(target: PhaseSpaceGaussian, z):
    """Closed-form ``((target | T~(z) Phi))`` with ``Phi`` the standard phase-space Gaussian.

    ``z`` may be a single point or an array of points with trailing size 2n.
    """
    n, hbar = target.n, target.hbar
    A, pref = _coeff_prefactor(target)
    z = np.asarray(z, dtype=float)
    K = standard_J(n) + 1j * np.eye(2 * n)
    b = z @ K.T
    Ainv = np.linalg.inv(A)
    expo = np.einsum("...i,ij,...j->...", b, Ainv, b)
    zz = np.einsum("...i,...i->...", z, z)
    return pref * np.exp(-zz / (4 * hbar)) * np.exp(-expo / (4 * hbar))


def expansion_coefficient_H(target: PhaseSpaceGaussian, z):
    """Same as :func:`expansion_coefficient`, through ``exp(-(I + H) z^2 / 4 hbar)``."""
    n, hbar = target.n, target.hbar
    _, pref = _coeff_prefactor(target)
    H = coefficient_H_matrix(target.F)
    z = np.asarray(z, dtype=float)
    return pref * np.exp(-_quad(np.eye(2 * n) + H, z) / (4 * hbar))


def corollary_f_equals_identity_check(z, hbar=CLASSICAL_HBAR):
    """Both sides of ``((Phi | T~(z) Phi)) = (2 pi hbar)^n A phi(z)``."""
    z = np.asarray(z, dtype=float)
    n = z.shape[-1] // 2
    std = GaussianState.standard(n, hbar)
    lhs = expansion_coefficient(u_phi_closed(std), z)
    rhs = (2 * np.pi * hbar) ** n * cross_ambiguity_closed(std, std, z)
    return lhs, rhs


@dataclass(frozen=True)
class CovarianceState:
    """Phase-space density ``sqrt(det Sigma^{-1}) exp(-pi Sigma^{-1} z^2)``."""

    Sigma: np.ndarray
    hbar: float = CLASSICAL_HBAR

    def __post_init__(self):
        S = np.atleast_2d(np.asarray(self.Sigma, dtype=float))
        if S.shape[0] != S.shape[1] or S.shape[0] % 2:
            raise ValueError("Sigma must be square of even size")
        if np.max(np.abs(S - S.T)) > 1e-12 * max(1.0, np.max(np.abs(S))):
            raise ValueError("Sigma must be symmetric")
        S = 0.5 * (S + S.T)
        if np.linalg.eigvalsh(S)[0] <= 0:
            raise ValueError("Sigma must be positive definite")
        S.setflags(write=False)
        object.__setattr__(self, "Sigma", S)
        object.__setattr__(self, "hbar", check_hbar(self.hbar))

    @property
    def n(self):
        return self.Sigma.shape[0] // 2

    def __call__(self, z):
        return density_rho_eval(self, z)


def density_rho_eval(c: CovarianceState, z):
    Si = np.linalg.inv(c.Sigma)
    z = np.asarray(z, dtype=float)
    return np.sqrt(np.linalg.det(Si)) * np.exp(-np.pi * _quad(Si, z))


def admissibility_eigenvalues(c: CovarianceState):
    """Ascending eigenvalues of the Hermitian matrix ``Sigma + (i hbar / 2) J``."""
    H = c.Sigma + 0.5j * c.hbar * standard_J(c.n)
    return np.linalg.eigvalsh(H)


def admissible_density(c: CovarianceState, tol=1e-12):
    return bool(admissibility_eigenvalues(c)[0] >= -tol)


def random_gaussian_state(n, rng, hbar=CLASSICAL_HBAR, spread=0.6):
    """Random ``phi_M`` with well-conditioned real part (tests and demos)."""
    A = rng.normal(size=(n, n))
    X = np.eye(n) + spread * (A @ A.T) / n
    X *= np.exp(rng.uniform(-spread, spread))
    B = rng.normal(scale=spread, size=(n, n))
    return GaussianState(X + 1j * 0.5 * (B + B.T), hbar)
