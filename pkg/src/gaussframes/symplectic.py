"""Symplectic linear algebra on R^{2n} and phase-space lattices.

Points of phase space are real vectors ``z = (x, p)`` of even length 2n.
The standard symplectic matrix is ``J = [[0, I], [-I, 0]]`` so that
``sigma(z, z') = z'^T J z = p x' - p' x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SymplecticError",
    "standard_J",
    "symplectic_form",
    "is_symplectic",
    "check_symplectic",
    "generator_V",
    "generator_M",
    "LowerBlockSymplectic",
    "pre_iwasawa",
    "LatticeParam1D",
    "SymplecticTag",
    "Lattice",
    "lattice_volume",
    "lattice_density",
    "adjoint_lattice",
    "enumerate_points",
    "same_point_set",
    "random_symplectic",
    "rotation",
    "TOL_SYMPL",
    "COND_MAX",
]

TOL_SYMPL = 1e-10
COND_MAX = 1e12


class SymplecticError(ValueError):
    """Raised when a matrix fails a symplectic precondition."""


def _frozen(a, dtype=float):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


def _half_dim(S):
    S = np.asarray(S)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {S.shape}")
    if S.shape[0] % 2:
        raise ValueError(f"expected even size, got {S.shape[0]}")
    return S.shape[0] // 2


def standard_J(n):
    """Return the standard symplectic matrix ``[[0, I], [-I, 0]]`` of size 2n."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    I = np.eye(n)
    Z = np.zeros((n, n))
    return np.block([[Z, I], [-I, Z]])


def as_point(z):
    """Validate a phase-space point and return it as a float vector."""
    z = np.asarray(z, dtype=float)
    if z.ndim != 1 or z.size < 2 or z.size % 2:
        raise ValueError(f"phase-space point must have even length >= 2, got {z.shape}")
    return z


def symplectic_form(z, z2):
    """``sigma(z, z2) = z2^T J z``; for n = 1 this is ``p x2 - p2 x``."""
    z = as_point(z)
    z2 = as_point(z2)
    if z.shape != z2.shape:
        raise ValueError("dimension mismatch")
    return float(z2 @ standard_J(z.size // 2) @ z)


def is_symplectic(S, tol=TOL_SYMPL):
    S = np.asarray(S, dtype=float)
    n = _half_dim(S)
    J = standard_J(n)
    return bool(np.max(np.abs(S.T @ J @ S - J)) <= tol)


def check_symplectic(S, tol=TOL_SYMPL):
    """Return ``S`` as a read-only array, raising if it is not symplectic."""
    S = np.asarray(S, dtype=float)
    n = _half_dim(S)
    J = standard_J(n)
    err = np.max(np.abs(S.T @ J @ S - J))
    if err > tol:
        raise SymplecticError(f"matrix is not symplectic: max|S^T J S - J| = {err:.3e}")
    return _frozen(S)


def generator_V(P):
    """Shear generator ``[[I, 0], [P, I]]`` for symmetric ``P``."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    if P.shape[0] != P.shape[1]:
        raise ValueError("P must be square")
    if not np.allclose(P, P.T, rtol=0, atol=1e-12):
        raise ValueError("P must be symmetric")
    n = P.shape[0]
    I = np.eye(n)
    return check_symplectic(np.block([[I, np.zeros((n, n))], [P, I]]))


def generator_M(L):
    """Dilation generator ``[[L^{-1}, 0], [0, L^T]]`` for invertible ``L``."""
    L = np.atleast_2d(np.asarray(L, dtype=float))
    if L.shape[0] != L.shape[1]:
        raise ValueError("L must be square")
    if np.linalg.cond(L) > COND_MAX:
        raise ValueError("L is singular or too ill-conditioned")
    n = L.shape[0]
    Z = np.zeros((n, n))
    return check_symplectic(np.block([[np.linalg.inv(L), Z], [Z, L.T]]))


@dataclass(frozen=True)
class LowerBlockSymplectic:
    """The block-lower factor ``[[L, 0], [L^{-T} P, L^{-T}]]``.

    ``P`` is symmetrized on construction.
    """

    L: np.ndarray
    P: np.ndarray

    def __post_init__(self):
        L = np.atleast_2d(np.asarray(self.L, dtype=float))
        P = np.atleast_2d(np.asarray(self.P, dtype=float))
        if L.shape != P.shape or L.shape[0] != L.shape[1]:
            raise ValueError("L and P must be square and of equal size")
        if np.linalg.cond(L) > COND_MAX:
            raise ValueError("L is singular or too ill-conditioned")
        object.__setattr__(self, "L", _frozen(L))
        object.__setattr__(self, "P", _frozen(0.5 * (P + P.T)))

    @property
    def n(self):
        return self.L.shape[0]

    @property
    def matrix(self):
        Lit = np.linalg.inv(self.L).T
        Z = np.zeros_like(self.L)
        return np.block([[self.L, Z], [Lit @ self.P, Lit]])


def pre_iwasawa(S, tol=TOL_SYMPL):
    """Factor a symplectic matrix as ``S = Q B``.

    ``Q`` is orthogonal and symplectic, ``B`` is block-lower
    (:class:`LowerBlockSymplectic`).  ``B`` is read off from the Gram
    matrix ``S^T S = B^T B``: its lower-right block is ``(L^T L)^{-1}`` and
    its lower-left block is ``(L^T L)^{-1} P``.  ``L`` is taken as the
    symmetric positive square root, which for n = 1 is the scalar
    ``1/sqrt(G22)``.

    Returns
    -------
    Q : ndarray
    B : LowerBlockSymplectic
    """
    S = check_symplectic(S, tol)
    n = S.shape[0] // 2
    G = S.T @ S
    G22 = 0.5 * (G[n:, n:] + G[n:, n:].T)
    G21 = G[n:, :n]
    if n == 1:
        L = np.array([[1.0 / np.sqrt(G22[0, 0])]])
        P = G21 / G22[0, 0]
    else:
        w, V = np.linalg.eigh(G22)
        L = (V / np.sqrt(w)) @ V.T  # (G22)^{-1/2}
        P = np.linalg.solve(G22, G21)
    B = LowerBlockSymplectic(L, P)
    Bm = B.matrix
    # B^{-1} = -J B^T J for symplectic B
    J = standard_J(n)
    Q = S @ (-J @ Bm.T @ J)
    return _frozen(Q), B


@dataclass(frozen=True)
class LatticeParam1D:
    """Planar lattice ``[[alpha, 0], [beta*gamma, beta]] Z^2``."""

    alpha: float
    beta: float
    gamma: float = 0.0

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("alpha and beta must be positive")

    @property
    def matrix(self):
        return np.array([[self.alpha, 0.0], [self.beta * self.gamma, self.beta]])


@dataclass(frozen=True)
class SymplecticTag:
    """Records ``Lambda = delta^{-1} Q B Z^{2n}``."""

    delta: float
    Q: np.ndarray
    B: LowerBlockSymplectic

    @property
    def S(self):
        return self.Q @ self.B.matrix

    @property
    def gram(self):
        S = self.S
        return S.T @ S


@dataclass(frozen=True)
class Lattice:
    """A lattice ``generator @ Z^{2n}`` in phase space.

    Generators are not unique; two lattices are compared as point sets
    (:func:`same_point_set`).  ``tag`` is filled in automatically when the
    generator is a positive multiple of a symplectic matrix (always the
    case for n = 1, after possibly flipping one basis vector).
    """

    generator: np.ndarray
    tag: SymplecticTag | None = field(default=None, compare=False)

    def __post_init__(self):
        M = np.asarray(self.generator, dtype=float)
        _half_dim(M)
        if abs(np.linalg.det(M)) <= 0 or np.linalg.cond(M) > COND_MAX:
            raise ValueError("lattice generator is singular")
        object.__setattr__(self, "generator", _frozen(M))
        if self.tag is None:
            object.__setattr__(self, "tag", _detect_tag(M))

    @property
    def n(self):
        return self.generator.shape[0] // 2

    @property
    def volume(self):
        return float(abs(np.linalg.det(self.generator)))

    @property
    def density(self):
        return 1.0 / self.volume

    @property
    def is_symplectic(self):
        return self.tag is not None

    # constructors
    @classmethod
    def square(cls, delta=1.0, n=1):
        return cls(np.eye(2 * n) / delta)

    @classmethod
    def separable(cls, alpha, beta):
        alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
        beta = np.atleast_1d(np.asarray(beta, dtype=float))
        if alpha.shape != beta.shape:
            raise ValueError("alpha and beta must have equal length")
        return cls(np.diag(np.concatenate([alpha, beta])))

    @classmethod
    def from_symplectic(cls, S, delta=1.0):
        """``delta^{-1} S Z^{2n}`` for symplectic ``S``."""
        S = check_symplectic(S)
        Q, B = pre_iwasawa(S)
        return cls(S / delta, SymplecticTag(float(delta), Q, B))

    @classmethod
    def from_params(cls, params: LatticeParam1D, delta=1.0):
        return cls(params.matrix / delta)

    def rotated(self, theta):
        """Apply a phase-space rotation (n = 1 only)."""
        if self.n != 1:
            raise ValueError("rotation helper is defined for n = 1")
        return Lattice(rotation(theta) @ self.generator)

    def points(self, radius):
        return enumerate_points(self, radius)


def _detect_tag(M):
    n = M.shape[0] // 2
    det = np.linalg.det(M)
    Mp = M.copy()
    if det < 0:
        if n != 1:
            return None
        # flipping one basis vector leaves the point set unchanged
        Mp[:, 0] *= -1
    c = abs(det) ** (1.0 / (2 * n))
    S = Mp / c
    if not is_symplectic(S, 1e-9):
        return None
    Q, B = pre_iwasawa(S, 1e-9)
    return SymplecticTag(1.0 / c, Q, B)


def lattice_volume(lat: Lattice):
    return lat.volume


def lattice_density(lat: Lattice):
    return lat.density


def adjoint_lattice(lat: Lattice):
    """Return ``J M^{-T} Z^{2n}``."""
    J = standard_J(lat.n)
    return Lattice(J @ np.linalg.inv(lat.generator).T)


def enumerate_points(lat: Lattice, radius):
    """All lattice points of norm <= radius, lexicographic in the integer index.

    Returns
    -------
    points : ndarray, shape (N, 2n)
    indices : ndarray of int, shape (N, 2n)
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    M = lat.generator
    d = M.shape[0]
    smin = np.linalg.svd(M, compute_uv=False)[-1]
    K = int(np.floor(radius / smin + 1e-12))
    rng = np.arange(-K, K + 1)
    ks = np.array(list(itertools.product(rng, repeat=d)), dtype=int).reshape(-1, d)
    pts = ks @ M.T
    keep = np.einsum("ij,ij->i", pts, pts) <= radius * radius * (1 + 1e-12)
    return pts[keep], ks[keep]


def same_point_set(a: Lattice, b: Lattice, radius=None, atol=1e-9):
    """Decide whether two lattices are the same point set.

    Without ``radius`` the test is exact up to ``atol``: the change of
    basis between the generators must be an integer matrix of
    determinant +-1.  With ``radius`` the points inside the ball are
    compared directly; points closer than ``atol`` to the boundary are
    skipped on the side being checked so that rounding cannot decide
    membership.
    """
    if radius is None:
        if a.generator.shape != b.generator.shape:
            return False
        U = np.linalg.solve(b.generator, a.generator)
        R = np.rint(U)
        return bool(np.max(np.abs(U - R)) <= atol and abs(abs(np.linalg.det(R)) - 1) <= 0.5)
    from scipy.spatial import cKDTree

    pa, _ = enumerate_points(a, radius + 10 * atol)
    pb, _ = enumerate_points(b, radius + 10 * atol)

    def covered(src, dst):
        inner = src[np.linalg.norm(src, axis=1) <= radius - 10 * atol]
        if len(inner) == 0:
            return True
        d, _ = cKDTree(dst).query(inner)
        return bool(np.all(d <= atol))

    return covered(pa, pb) and covered(pb, pa)


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def random_symplectic(n, rng, depth=3, scale=0.5):
    """Random element of Sp(n) built as a product of generator matrices.

    Used by tests and demos; ``rng`` is a :class:`numpy.random.Generator`.
    """
    J = standard_J(n)
    S = np.eye(2 * n)
    for _ in range(depth):
        A = rng.normal(scale=scale, size=(n, n))
        P = 0.5 * (A + A.T)
        L = np.eye(n) + rng.normal(scale=scale / 2, size=(n, n))
        while np.linalg.cond(L) > 20:
            L = np.eye(n) + rng.normal(scale=scale / 2, size=(n, n))
        S = S @ generator_V(P) @ generator_M(L)
        if rng.random() < 0.5:
            S = S @ J
    return S
