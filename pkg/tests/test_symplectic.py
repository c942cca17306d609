import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gaussframes.symplectic import (
    Lattice,
    LatticeParam1D,
    LowerBlockSymplectic,
    SymplecticError,
    adjoint_lattice,
    check_symplectic,
    enumerate_points,
    generator_M,
    generator_V,
    is_symplectic,
    lattice_density,
    lattice_volume,
    pre_iwasawa,
    random_symplectic,
    rotation,
    same_point_set,
    standard_J,
    symplectic_form,
)


def test_standard_J_n1():
    assert np.array_equal(standard_J(1), [[0, 1], [-1, 0]])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_standard_J_orthogonal(n):
    J = standard_J(n)
    assert np.allclose(J @ J.T, np.eye(2 * n))
    assert np.allclose(J @ J, -np.eye(2 * n))


def test_J_preserves_integer_lattice_n2():
    # J Z^4 = Z^4 as point sets
    assert same_point_set(Lattice(standard_J(2)), Lattice(np.eye(4)), radius=3.0)


def test_symplectic_form_values(rng):
    assert symplectic_form([1.0, 0.0], [0.0, 1.0]) == -1.0
    z = rng.normal(size=4)
    z2 = rng.normal(size=4)
    assert symplectic_form(z, z) == pytest.approx(0.0, abs=1e-15)
    assert symplectic_form(z, z2) == pytest.approx(-symplectic_form(z2, z))


def test_symplectic_form_matches_px_minus_px():
    # sigma(z, z') = p x' - p' x
    x, p, x2, p2 = 0.3, -1.2, 2.0, 0.7
    assert symplectic_form([x, p], [x2, p2]) == pytest.approx(p * x2 - p2 * x)


def test_is_symplectic_examples(rng):
    assert is_symplectic(standard_J(2))
    A = rng.normal(size=(2, 2))
    assert is_symplectic(generator_V(A + A.T))
    assert not is_symplectic(np.diag([2.0, 1.0]))
    with pytest.raises(SymplecticError):
        check_symplectic(np.diag([2.0, 1.0]))


def test_generators():
    assert np.allclose(generator_V(np.zeros((2, 2))), np.eye(4))
    assert np.allclose(generator_M(np.eye(2)), np.eye(4))
    assert np.allclose(generator_M(2.0), [[0.5, 0], [0, 2]])
    with pytest.raises(ValueError):
        generator_V([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        generator_M(np.zeros((2, 2)))


def test_pre_iwasawa_lower_input():
    S = np.array([[2.0, 0.0], [1.0, 0.5]])
    Q, B = pre_iwasawa(S)
    assert np.allclose(Q, np.eye(2), atol=1e-12)
    assert B.L[0, 0] == pytest.approx(2.0)
    assert B.P[0, 0] == pytest.approx(2.0)


def test_pre_iwasawa_of_J():
    J = standard_J(1)
    Q, B = pre_iwasawa(J)
    assert np.allclose(Q, J, atol=1e-12)
    assert B.L[0, 0] == pytest.approx(1.0)
    assert B.P[0, 0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2])
def test_pre_iwasawa_round_trip_battery(n):
    rng = np.random.default_rng(n)
    for _ in range(100):
        S = random_symplectic(n, rng)
        Q, B = pre_iwasawa(S)
        assert np.max(np.abs(Q @ B.matrix - S)) <= 1e-10
        # Q orthogonal and symplectic, B symplectic
        assert np.allclose(Q @ Q.T, np.eye(2 * n), atol=1e-10)
        assert is_symplectic(Q) and is_symplectic(B.matrix)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31 - 1))
def test_gram_invariant_under_orthosymplectic(seed):
    rng = np.random.default_rng(seed)
    S = random_symplectic(2, rng)
    theta = rng.uniform(0, 2 * np.pi, size=2)
    # block-diagonal rotation of (x_j, p_j) pairs is orthogonal and symplectic
    Q = np.zeros((4, 4))
    for j, t in enumerate(theta):
        R = rotation(t)
        Q[np.ix_([j, j + 2], [j, j + 2])] = R
    assert is_symplectic(Q)
    S2 = Q @ S
    assert np.max(np.abs(S2.T @ S2 - S.T @ S)) <= 1e-12 * max(1.0, np.max(np.abs(S.T @ S)))


def test_lower_block_symmetrizes_P():
    B = LowerBlockSymplectic(np.eye(2), [[0.0, 1.0], [0.0, 0.0]])
    assert np.allclose(B.P, [[0, 0.5], [0.5, 0]])
    assert is_symplectic(B.matrix)


def test_volume_and_density():
    assert lattice_volume(Lattice(np.eye(2))) == pytest.approx(1.0)
    assert lattice_density(Lattice(np.eye(2))) == pytest.approx(1.0)
    assert lattice_volume(Lattice([[1.0, 0.0], [0.5, 1.0]])) == pytest.approx(1.0)
    rng = np.random.default_rng(3)
    S = random_symplectic(2, rng)
    lat = Lattice.from_symplectic(S, delta=1.7)
    assert lat.density == pytest.approx(1.7**4, rel=1e-10)


def test_singular_lattice_rejected():
    with pytest.raises(ValueError):
        Lattice([[1.0, 2.0], [2.0, 4.0]])


def test_tag_detection():
    lat = Lattice.square(2.0)
    assert lat.tag is not None and lat.tag.delta == pytest.approx(2.0)
    sheared = Lattice.from_params(LatticeParam1D(1.0, 1.0, 0.5), delta=2.0)
    assert sheared.is_symplectic
    assert np.allclose(sheared.tag.S / sheared.tag.delta, sheared.generator)
    # n = 2 non-symplectic generator: no tag
    assert Lattice(np.diag([1.0, 2.0, 1.0, 1.0])).tag is None


def test_adjoint_lattice_examples():
    Z2 = Lattice(np.eye(2))
    assert same_point_set(adjoint_lattice(Z2), Z2)
    half = Lattice(0.5 * np.eye(2))
    assert same_point_set(adjoint_lattice(half), Lattice(2 * np.eye(2)))
    sheared = Lattice(0.5 * LatticeParam1D(1.0, 1.0, 0.5).matrix)
    four = Lattice(4 * sheared.generator)
    assert same_point_set(adjoint_lattice(sheared), four, radius=10.0)


def test_adjoint_involution_and_density(rng):
    for n in (1, 2):
        M = np.eye(2 * n) + 0.3 * rng.normal(size=(2 * n, 2 * n))
        lat = Lattice(M)
        adj = adjoint_lattice(lat)
        assert same_point_set(adjoint_lattice(adj), lat, radius=4.0)
        assert adj.density * lat.density == pytest.approx(1.0, rel=1e-12)


def test_enumerate_points_counts():
    assert len(enumerate_points(Lattice(np.eye(2)), 1.5)[0]) == 9
    assert len(enumerate_points(Lattice(np.eye(2)), 0.5)[0]) == 1
    # scaling the lattice by 2 scales the radius: 9 points at radius 3
    assert len(enumerate_points(Lattice(2 * np.eye(2)), 3.0)[0]) == 9
    # at radius 2.5 the diagonal points (norm 2*sqrt 2) drop out
    assert len(enumerate_points(Lattice(2 * np.eye(2)), 2.5)[0]) == 5
    with pytest.raises(ValueError):
        enumerate_points(Lattice(np.eye(2)), 0.0)


def test_enumerate_points_are_lattice_points():
    lat = Lattice(LatticeParam1D(1.3, 0.7, 0.4).matrix)
    pts, ks = enumerate_points(lat, 5.0)
    assert np.allclose(pts, ks @ lat.generator.T)
    assert np.all(np.linalg.norm(pts, axis=1) <= 5.0 + 1e-12)
    # lexicographic order in k
    assert [tuple(k) for k in ks] == sorted(tuple(k) for k in ks)
    # and complete: brute force over a big box
    kk = np.array(np.meshgrid(*[np.arange(-30, 31)] * 2, indexing="ij")).reshape(2, -1).T
    full = kk @ lat.generator.T
    assert np.sum(np.linalg.norm(full, axis=1) <= 5.0) == len(pts)


def test_rotated_lattice_same_density():
    lat = Lattice.square(2.0)
    rot = lat.rotated(0.3)
    assert rot.density == pytest.approx(lat.density)
    assert rot.is_symplectic
    assert not same_point_set(rot, lat, radius=3.0)


def test_same_point_set_exact_route():
    lat = Lattice(np.array([[1.0, 0.0], [0.5, 1.0]]))
    other_basis = Lattice(np.array([[1.0, 0.0], [1.5, 1.0]]))
    assert same_point_set(lat, other_basis)
    assert same_point_set(lat, other_basis, radius=4.0)
    assert not same_point_set(lat, Lattice(np.array([[1.0, 0.0], [0.25, 1.0]])))
    assert not same_point_set(lat, Lattice(2 * np.eye(2)))


if __name__ == "__main__":
    test_standard_J_n1()
    test_generators()
    test_pre_iwasawa_of_J()
    test_enumerate_points_counts()
    test_same_point_set_exact_route()
