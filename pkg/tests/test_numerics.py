"""Tests for the quadrature oracles.

Most grids here use spacing 1/16 with 256 nodes at hbar = 1/(2 pi): that is
exactly the Nyquist-adequate square grid for Fourier-type transforms that
map the grid to itself (spacing^2 = 1/count).
"""
import math

import numpy as np
import pytest

from gaussframes.gaussians import (
    CLASSICAL_HBAR,
    CovarianceState,
    GaussianState,
    cross_ambiguity_closed,
    cross_wigner_closed,
    fourier_gaussian,
    u_phi_closed,
)
from gaussframes.numerics import (
    Grid1D,
    GridError,
    SampledFunction1D,
    SampledFunction2D,
    ambiguity_numeric,
    ambiguity_numeric_at,
    density_integral,
    hbar_fourier_numeric,
    heisenberg_apply,
    inner_product_l2,
    metaplectic_J_apply,
    metaplectic_M_apply,
    metaplectic_V_apply,
    norm_l2,
    numeric_covariance,
    phase_space_translate,
    poisson_check,
    sample,
    sample_2d,
    symplectic_fourier_numeric,
    wigner_numeric,
    wigner_numeric_at,
)
from gaussframes.symplectic import generator_M, standard_J, symplectic_form

H0 = CLASSICAL_HBAR
GRID = Grid1D(0.0, 1.0 / 16, 256)
STD = GaussianState.standard()
# |p| <= 4 keeps the lag step 2/16 within the Nyquist bound at hbar = 1/(2 pi)
PGRID = Grid1D(0.0, 1.0 / 16, 128)


def _shifted(g, z0, grid=GRID):
    return SampledFunction1D(grid, g.shifted(z0, grid.points))


def _maxdiff(a, b):
    return float(np.max(np.abs(np.asarray(a.values) - np.asarray(b.values))))


# ---------------------------------------------------------------- grids


def test_grid_points_and_alignment():
    g = Grid1D(1.0, 0.5, 16)
    assert g.points[0] == pytest.approx(-3.0)
    assert g.points[8] == pytest.approx(1.0)
    assert g.index_of(2.5) == 11
    with pytest.raises(GridError):
        g.index_of(1.2)
    assert g.steps(-1.5) == -3
    with pytest.raises(GridError):
        g.steps(0.3)
    with pytest.raises(ValueError):
        Grid1D(0.0, 0.1, 8)
    with pytest.raises(ValueError):
        Grid1D(0.0, -0.1, 32)


def test_default_grid_for_gaussian():
    g = Grid1D.for_gaussian()
    assert g.count == 1024
    assert g.halfwidth == pytest.approx(8 * math.sqrt(H0))
    wide = Grid1D.for_gaussian([[0.25]], H0)
    assert wide.halfwidth == pytest.approx(8 * math.sqrt(4 * H0))


def test_sampled_function_validation():
    with pytest.raises(ValueError):
        SampledFunction1D(GRID, np.zeros(10))
    with pytest.raises(ValueError):
        SampledFunction1D(GRID, np.full(256, np.nan))
    f = sample(STD, GRID)
    with pytest.raises(ValueError):
        f.values[0] = 1.0


# ---------------------------------------------------------------- inner products


def test_inner_product_examples():
    f = sample(STD, GRID)
    assert inner_product_l2(f, f) == pytest.approx(1.0, abs=1e-10)
    zero = SampledFunction1D(GRID, np.zeros(256))
    assert inner_product_l2(zero, zero) == 0
    other = sample(STD, Grid1D(0.0, 1.0 / 16, 128))
    with pytest.raises(GridError):
        inner_product_l2(f, other)


def test_plancherel():
    f = _shifted(GaussianState([[0.7 + 0.4j]]), [0.5, -0.75])
    Ff = hbar_fourier_numeric(f)
    assert norm_l2(Ff) == pytest.approx(norm_l2(f), abs=1e-8)


# ---------------------------------------------------------------- Heisenberg operators


def test_heisenberg_identity_and_unitarity():
    f = sample(GaussianState([[1.5 + 0.5j]]), GRID)
    assert _maxdiff(heisenberg_apply([0.0, 0.0], f), f) == 0
    Tf = heisenberg_apply([0.5, 1.25], f)
    assert norm_l2(Tf) == pytest.approx(norm_l2(f), abs=1e-10)


def test_heisenberg_matches_closed_form():
    z0 = [0.75, -0.5]
    Tf = heisenberg_apply(z0, sample(STD, GRID))
    assert _maxdiff(Tf, _shifted(STD, z0)) <= 1e-12


def test_heisenberg_commutation_and_addition():
    f = sample(GaussianState([[0.8 + 0.3j]]), GRID)
    z0, z1 = np.array([0.5, 0.3]), np.array([-0.25, 1.1])
    s = symplectic_form(z0, z1)
    a = heisenberg_apply(z0, heisenberg_apply(z1, f))
    b = heisenberg_apply(z1, heisenberg_apply(z0, f))
    assert np.max(np.abs(a.values - np.exp(1j * s / H0) * b.values)) <= 1e-10
    c = heisenberg_apply(z0 + z1, f)
    assert np.max(np.abs(c.values - np.exp(-0.5j * s / H0) * a.values)) <= 1e-10


def test_heisenberg_off_grid():
    f = sample(STD, GRID)
    with pytest.raises(GridError):
        heisenberg_apply([0.01, 0.0], f)
    g = heisenberg_apply([0.01, 0.2], f, interpolate=True)
    assert _maxdiff(g, _shifted(STD, [0.01, 0.2])) <= 1e-10


# ---------------------------------------------------------------- phase-space translations


def _phase_space_grid():
    g = Grid1D(0.0, 1.0 / 16, 192)
    return g, g


def test_phase_space_translate_identity_and_unitarity():
    Phi = sample_2d(u_phi_closed(STD), *_phase_space_grid())
    assert _maxdiff(phase_space_translate([0.0, 0.0], Phi), Phi) == 0
    T = phase_space_translate([0.5, -0.25], Phi)
    assert T.norm() == pytest.approx(Phi.norm(), abs=1e-10)


def test_phase_space_translate_adjoint():
    xg, pg = _phase_space_grid()
    F = sample_2d(u_phi_closed(GaussianState([[2.0]])), xg, pg)
    G = sample_2d(u_phi_closed(GaussianState([[0.7 + 0.2j]])), xg, pg)
    z0 = np.array([0.25, 0.5])
    lhs = np.vdot(G.values, phase_space_translate(z0, F).values) * F.cell
    rhs = np.vdot(phase_space_translate(-z0, G).values, F.values) * F.cell
    assert abs(lhs - rhs) <= 1e-10


def test_phase_space_translate_laws():
    xg, pg = _phase_space_grid()
    F = sample_2d(u_phi_closed(GaussianState([[1.3 - 0.4j]])), xg, pg)
    z0, z1 = np.array([0.25, 0.5]), np.array([-0.375, 0.125])
    s = symplectic_form(z0, z1)
    a = phase_space_translate(z0, phase_space_translate(z1, F))
    b = phase_space_translate(z1, phase_space_translate(z0, F))
    assert np.max(np.abs(a.values - np.exp(1j * s / H0) * b.values)) <= 1e-10
    c = phase_space_translate(z0 + z1, F)
    assert np.max(np.abs(c.values - np.exp(-0.5j * s / H0) * a.values)) <= 1e-10


def test_phase_space_translate_matches_closed_form():
    xg, pg = _phase_space_grid()
    Phi = u_phi_closed(STD)
    z0 = np.array([0.5, -0.75])
    T = phase_space_translate(z0, sample_2d(Phi, xg, pg))
    closed = Phi.translated(z0, T.mesh)
    assert np.max(np.abs(T.values - closed)) <= 1e-12


def test_phase_space_translate_off_grid():
    F = sample_2d(u_phi_closed(STD), *_phase_space_grid())
    with pytest.raises(GridError):
        phase_space_translate([1.0 / 16, 0.0], F)


def test_intertwining_translation():
    """T~(z0) U_phi phi equals U_phi (T(z0) phi), the right side by quadrature."""
    z0 = np.array([0.5, -0.25])
    fine = Grid1D(0.0, 1.0 / 32, 512)
    pg = Grid1D(0.0, 1.0 / 16, 128)
    W = wigner_numeric(sample(STD, fine), sample(STD, fine), pg, x_stride=2)
    lhs = phase_space_translate(z0, W)
    rhs = wigner_numeric(_shifted(STD, z0, fine), sample(STD, fine), pg, x_stride=2)
    assert _maxdiff(lhs, rhs) * math.sqrt(2 * np.pi * H0) <= 1e-8


# ---------------------------------------------------------------- Wigner / ambiguity oracles


def test_wigner_standard_gaussian():
    W = wigner_numeric(sample(STD, GRID), sample(STD, GRID), PGRID, x_stride=2)
    X, P = W.mesh[..., 0], W.mesh[..., 1]
    ref = np.exp(-(X**2 + P**2) / H0) / (np.pi * H0)
    assert np.max(np.abs(W.values - ref)) <= 1e-8
    assert np.max(np.abs(W.values.imag)) <= 1e-10


def test_wigner_conjugate_symmetry():
    f = _shifted(GaussianState([[1.4 + 0.6j]]), [0.25, 0.5])
    g = sample(GaussianState([[0.8]]), GRID)
    a = wigner_numeric(f, g, PGRID, x_stride=2)
    b = wigner_numeric(g, f, PGRID, x_stride=2)
    assert np.max(np.abs(b.values - np.conj(a.values))) <= 1e-10


def test_wigner_translation_law():
    """W(T(z0) f, T(z0) g)(z) = W(f, g)(z - z0)."""
    f0, g0 = GaussianState([[1.2 + 0.3j]]), GaussianState([[0.9]])
    z0 = np.array([0.5, 0.25])
    pts = np.array([[0.0, 0.0], [0.5, 0.25], [1.0, -0.5], [-0.25, 0.75]])
    W = wigner_numeric_at(_shifted(f0, z0), _shifted(g0, z0), pts)
    ref = cross_wigner_closed(f0, g0)(pts - z0)
    assert np.max(np.abs(W - ref)) <= 1e-8


def test_wigner_support_check():
    narrow = Grid1D.symmetric(0.5, 64)
    with pytest.raises(GridError):
        wigner_numeric(sample(STD, narrow), sample(STD, narrow))


def test_wigner_nyquist_check():
    coarse = Grid1D(0.0, 0.25, 64)
    with pytest.raises(GridError):
        wigner_numeric(sample(STD, coarse), sample(STD, coarse), pgrid=Grid1D.symmetric(5.0, 64))


def test_ambiguity_standard_gaussian():
    A = ambiguity_numeric(sample(STD, GRID), sample(STD, GRID), pgrid=Grid1D(0.0, 1 / 8, 64))
    X, P = A.mesh[..., 0], A.mesh[..., 1]
    ref = np.exp(-(X**2 + P**2) / (4 * H0)) / (2 * np.pi * H0)
    assert np.max(np.abs(A.values - ref)) <= 1e-8


def test_ambiguity_is_shifted_inner_product():
    """A(f, g)(z) = (2 pi hbar)^{-1} (f | T(z) g)."""
    f = _shifted(GaussianState([[1.1 + 0.2j]]), [0.25, -0.5])
    g = sample(GaussianState([[0.6 - 0.3j]]), GRID)
    pts = np.array([[0.5, 0.3], [-1.0, 0.7], [0.25, -1.2]])
    A = ambiguity_numeric_at(f, g, pts)
    direct = np.array([inner_product_l2(f, heisenberg_apply(z, g)) for z in pts]) / (2 * np.pi * H0)
    assert np.max(np.abs(A - direct)) <= 1e-8


def test_ambiguity_wigner_relation():
    """A(f, g)(z) = 2^{-1} W(f, reflected g)(z / 2), on a grid symmetric about 0."""
    grid = Grid1D(0.0, 1.0 / 16, 257)
    f = _shifted(GaussianState([[1.1 + 0.2j]]), [0.25, -0.5], grid)
    g = _shifted(GaussianState([[0.6 - 0.3j]]), [-0.5, 0.25], grid)
    g_check = SampledFunction1D(grid, g.values[::-1])
    pts = np.array([[0.5, 0.3], [-1.0, 0.7], [0.25, -1.2]])
    A = ambiguity_numeric_at(f, g, pts)
    W = wigner_numeric_at(f, g_check, 0.5 * pts)
    assert np.max(np.abs(A - 0.5 * W)) <= 1e-8


def test_symplectic_fourier_maps_wigner_to_ambiguity():
    g = GaussianState([[1.5 + 0.5j]])
    W = sample_2d(cross_wigner_closed(g, STD), GRID, GRID)
    FW = symplectic_fourier_numeric(W)
    A = cross_ambiguity_closed(g, STD, FW.mesh)
    assert np.max(np.abs(FW.values - A)) <= 1e-6


def test_symplectic_fourier_involution_and_unitarity():
    W = sample_2d(cross_wigner_closed(STD, STD), GRID, GRID)
    FW = symplectic_fourier_numeric(W)
    assert FW.norm() == pytest.approx(W.norm(), abs=1e-8)
    assert _maxdiff(symplectic_fourier_numeric(FW), W) <= 1e-8


def test_grid_refinement_convergence():
    g = GaussianState([[1.3 + 0.5j]])
    pts = np.array([[0.0, 0.0], [0.25, 0.5], [-0.5, 0.25]])
    coarse = Grid1D(0.0, 1.0 / 16, 128)
    fine = Grid1D(0.0, 1.0 / 32, 256)
    a = wigner_numeric_at(sample(g, coarse), sample(STD, coarse), pts)
    b = wigner_numeric_at(sample(g, fine), sample(STD, fine), pts)
    assert np.max(np.abs(a - b)) <= 1e-7


# ---------------------------------------------------------------- Fourier and metaplectic operators


def test_fourier_fixed_point_and_scaling():
    f = sample(STD, GRID)
    assert _maxdiff(hbar_fourier_numeric(f), f) <= 1e-8
    M = 4.0
    g = sample(lambda x: np.exp(-M * x * x / (2 * H0)), GRID)
    amp, E = fourier_gaussian([[M]])
    ref = amp * np.exp(-E[0, 0] * GRID.points**2 / (2 * H0))
    assert np.max(np.abs(hbar_fourier_numeric(g).values - ref)) <= 1e-8


def test_fourier_resolution_check():
    coarse = Grid1D(0.0, 0.25, 64)
    with pytest.raises(GridError):
        hbar_fourier_numeric(sample(STD, coarse), out_grid=Grid1D.symmetric(10.0, 64))


def test_metaplectic_unitarity():
    f = _shifted(GaussianState([[0.9 + 0.2j]]), [0.25, 0.5])
    n0 = norm_l2(f)
    assert norm_l2(metaplectic_J_apply(f)) == pytest.approx(n0, abs=1e-8)
    assert norm_l2(metaplectic_V_apply(f, 1.3)) == pytest.approx(n0, abs=1e-8)
    assert norm_l2(metaplectic_M_apply(f, 2.0)) == pytest.approx(n0, abs=1e-8)
    assert norm_l2(metaplectic_M_apply(f, 0.5)) == pytest.approx(n0, abs=1e-8)


def test_metaplectic_V_zero_is_identity():
    f = sample(STD, GRID)
    assert _maxdiff(metaplectic_V_apply(f, 0.0), f) == 0


def test_metaplectic_J_inverse():
    f = _shifted(GaussianState([[0.9 + 0.2j]]), [0.25, 0.5])
    back = metaplectic_J_apply(metaplectic_J_apply(f), inverse=True)
    assert _maxdiff(back, f) <= 1e-8


def _covariance_error(S_op, S_inv_op, S, z):
    f = _shifted(GaussianState([[1.1 + 0.3j]]), [0.25, -0.125])
    lhs = S_op(heisenberg_apply(z, S_inv_op(f)))
    rhs = heisenberg_apply(S @ z, f)
    return _maxdiff(lhs, rhs)


def test_covariance_J():
    J = standard_J(1)
    z = np.array([0.5, -0.25])
    err = _covariance_error(
        metaplectic_J_apply, lambda f: metaplectic_J_apply(f, inverse=True), J, z
    )
    assert err <= 1e-8


def test_covariance_V():
    P = 1.5
    S = np.array([[1.0, 0.0], [P, 1.0]])
    z = np.array([0.5, -0.25])
    err = _covariance_error(
        lambda f: metaplectic_V_apply(f, P), lambda f: metaplectic_V_apply(f, -P), S, z
    )
    assert err <= 1e-8


@pytest.mark.parametrize("L", [2.0, 0.5])
def test_covariance_M(L):
    z = np.array([0.5, -0.25])
    err = _covariance_error(
        lambda f: metaplectic_M_apply(f, L), lambda f: metaplectic_M_apply(f, 1 / L), generator_M(L), z
    )
    assert err <= 1e-8


def test_dilated_standard_gaussian():
    out = metaplectic_M_apply(sample(STD, GRID), 2.0)
    ref = sample(GaussianState.generalized_1d(0.0, 2.0), GRID)
    assert _maxdiff(out, ref) <= 1e-10


def test_dilation_out_of_range():
    wide = SampledFunction1D(GRID, np.ones(256))
    with pytest.raises(GridError):
        metaplectic_M_apply(wide, 2.0)
    with pytest.raises(ValueError):
        metaplectic_M_apply(sample(STD, GRID), 0.0)


# ---------------------------------------------------------------- Poisson summation


def test_poisson_theta_constant():
    lhs, rhs = poisson_check([[1.0]], H0, 0.0)
    assert lhs.real == pytest.approx(1.0864348112133080, abs=1e-13)
    assert rhs.real == pytest.approx(1.0864348112133080, abs=1e-13)


@pytest.mark.parametrize("M,x", [(1.0, 0.5), (4.0, 0.0), (4.0, 0.5), (0.3 + 0.2j, 0.37)])
def test_poisson_identity(M, x):
    lhs, rhs = poisson_check([[M]], H0, x)
    assert abs(lhs - rhs) <= 1e-12


def test_poisson_general_hbar_and_n2():
    lhs, rhs = poisson_check([[0.8]], 0.7, 0.2)
    assert abs(lhs - rhs) <= 1e-12 * abs(lhs)
    M = np.array([[1.0, 0.3], [0.3, 0.8]]) + 0.1j * np.eye(2)
    lhs, rhs = poisson_check(M, H0, [0.1, -0.4])
    assert abs(lhs - rhs) <= 1e-12


# ---------------------------------------------------------------- covariance measurements


def test_covariance_measurement_identity():
    m = numeric_covariance(CovarianceState(np.eye(2)))
    assert np.allclose(m.measured, np.eye(2) / (2 * np.pi), atol=1e-10)
    assert m.ratio == pytest.approx(1 / (2 * np.pi), rel=1e-8)
    assert m.normalization == pytest.approx(1.0, abs=1e-10)


def test_covariance_measurement_diag_and_offdiag():
    m = numeric_covariance(CovarianceState(np.diag([2.0, 0.5])))
    assert np.allclose(m.measured, np.diag([2.0, 0.5]) / (2 * np.pi), atol=1e-10)
    S = np.array([[1.0, 0.4], [0.4, 0.7]])
    m = numeric_covariance(CovarianceState(S))
    assert np.allclose(m.measured, S / (2 * np.pi), atol=1e-8)


def test_covariance_measurement_n2():
    S = np.diag([1.0, 2.0, 0.5, 1.5])
    S[0, 1] = S[1, 0] = 0.2
    m = numeric_covariance(CovarianceState(S))
    assert np.allclose(m.measured, S / (2 * np.pi), atol=1e-6)
    assert density_integral(CovarianceState(S)) == pytest.approx(1.0, abs=1e-6)


# ---------------------------------------------------------------- frame-sum reformulations


def _square_points(delta, K):
    k = np.arange(-K, K + 1)
    kk = np.array(np.meshgrid(k, k, indexing="ij")).reshape(2, -1).T
    return delta * kk.astype(float)


def test_ambiguity_frame_sum_two_ways():
    psi = _shifted(GaussianState([[0.7 + 0.3j]]), [0.25, 0.5])
    phi = sample(STD, GRID)
    pts = _square_points(1.0, 3)
    via_quad = ambiguity_numeric_at(psi, phi, pts)
    via_inner = np.array([inner_product_l2(psi, heisenberg_apply(z, phi)) for z in pts])
    via_inner /= 2 * np.pi * H0
    s1 = np.sum(np.abs(via_quad) ** 2)
    s2 = np.sum(np.abs(via_inner) ** 2)
    assert abs(s1 - s2) <= 1e-6


def test_half_lattice_wigner_sum():
    """sum over half-lattice of |W(phi, psi)|^2 = 4 * sum over lattice of |A(psi, phi)|^2."""
    psi = _shifted(GaussianState([[0.7 + 0.3j]]), [0.25, 0.5])
    phi = sample(STD, GRID)
    pts = _square_points(1.0, 3)
    A = ambiguity_numeric_at(psi, phi, pts)
    W = wigner_numeric_at(phi, psi, 0.5 * pts)
    assert abs(np.sum(np.abs(W) ** 2) - 4 * np.sum(np.abs(A) ** 2)) <= 1e-6


if __name__ == "__main__":
    test_heisenberg_commutation_and_addition()
    test_symplectic_fourier_maps_wigner_to_ambiguity()
    test_poisson_theta_constant()
    test_half_lattice_wigner_sum()
