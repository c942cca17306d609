"""Gaussian frames lifted to phase space.

The lift ``U_phi psi = (2 pi hbar)^{1/2} W(psi, phi)`` maps Gaussians to
phase-space Gaussians and intertwines the frame operators.  This script
lifts ``phi_2``, compares the closed-form expansion coefficients with a
2-D quadrature, and shows the expansion error falling as the lattice
shrinks.

Run with ``python3 demos/phase_space.py``.
"""

import numpy as np

from gaussframes.gaussians import GaussianState, expansion_coefficient, u_phi_closed
from gaussframes.numerics import Grid1D, sample
from gaussframes.phasespace import PhaseSpaceFrameSpec, phase_space_expand, phase_space_norm, u_phi_numeric


def main():
    g = GaussianState([[2.0]])
    Psi = u_phi_closed(g)
    print("lifted phi_2: F =")
    print(np.array2string(Psi.F, precision=6))

    grid = Grid1D(0.0, 1.0 / 16, 256)
    lifted = u_phi_numeric(sample(g, grid), GaussianState.standard(), Grid1D(0.0, 1.0 / 16, 128), x_stride=2)
    print(f"|||U psi||| by quadrature: {phase_space_norm(lifted):.10f} (||psi|| = 1)")

    z = np.array([1.0, 0.0])
    print(f"coefficient at z = (1, 0): {expansion_coefficient(Psi, z):.12f}")

    print(f"\n{'delta':>6} {'rel_l2_err':>12} {'janssen_error':>14}")
    for d in (1.5, 2.0, 2.5, 3.0):
        _, _, rep = phase_space_expand(Psi, PhaseSpaceFrameSpec.square(d))
        print(f"{d:6.2f} {rep.rel_l2_err:12.4e} {rep.janssen_error:14.4e}")


if __name__ == "__main__":
    main()
