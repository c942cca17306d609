"""Exponential convergence of Gaussian frames on shrinking lattices.

For the standard Gaussian window and the lattice ``delta^{-1} S Z^2`` the
Janssen sum bounds how far the normalized frame operator is from the
identity.  This script tabulates the bound, the certified rate, and grid
estimates of the frame bounds, then fits the slope of ``log(error)``
against ``delta^2``.  The ``predicted`` column is the exponential
``exp(-pi^2 hbar delta^2 (|L|^2 + |L|^{-2}))``; the Janssen sum itself is
dominated by its shortest lattice vector and decays at the slower rate
``exp(-pi^2 hbar delta^2 min Gk^2)``, which is what the fit recovers.

Run with ``python3 demos/rate_law.py``.
"""

import numpy as np

from gaussframes.frames import FrameSpec, frame_bounds_numeric, janssen_error_sum, shortest_vector_sq
from gaussframes.gaussians import CLASSICAL_HBAR, GaussianState
from gaussframes.symplectic import Lattice, LatticeParam1D


def sweep(params, deltas, bounds=True):
    rows = []
    for d in deltas:
        spec = FrameSpec(GaussianState.standard(), Lattice.from_params(params, d))
        diag = janssen_error_sum(spec)
        a = b = float("nan")
        if bounds and not diag.vacuous:
            a, b = frame_bounds_numeric(spec)
        rows.append((d, diag.janssen_error, diag.predicted_rate, a, b))
    return rows


def main():
    deltas = np.array([1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0])
    for label, params in [("square", LatticeParam1D(1.0, 1.0, 0.0)), ("stretched L=2", LatticeParam1D(2.0, 0.5, 0.0))]:
        print(f"\n{label} lattice")
        print(f"{'delta':>6} {'janssen_error':>14} {'predicted':>12} {'a_est':>10} {'b_est':>10}")
        rows = sweep(params, deltas)
        for d, e, r, a, b in rows:
            print(f"{d:6.2f} {e:14.6e} {r:12.4e} {a:10.6f} {b:10.6f}")
        fit = [(d, e) for d, e, *_ in rows if d >= 2.0]
        slope = np.polyfit([d**2 for d, _ in fit], np.log([e for _, e in fit]), 1)[0]
        G = params.matrix @ params.matrix.T
        expected = -shortest_vector_sq(G) / (4 * CLASSICAL_HBAR)
        print(f"fitted slope of log(error) vs delta^2: {slope:.5f}  (leading term predicts {expected:.5f})")


if __name__ == "__main__":
    main()
