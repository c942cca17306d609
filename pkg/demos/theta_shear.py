"""Shearing a lattice cannot increase its theta sum - for the right form.

Compares ``sum exp(-r Q(k, l))`` for the sheared quadratic form with the
unsheared reference.  The unimodular form (determinant 1) never exceeds
the reference; the form with ``beta^2 (1 + gamma)^2`` has determinant
``1 + 2 gamma`` and does exceed it for ``gamma < 0``.

Run with ``python3 demos/theta_shear.py``.
"""

import numpy as np

from gaussframes.frames import theta_inequality_check


def main():
    print(f"{'gamma':>7} {'reference':>11} {'(1+g)^2 form':>13} {'unimodular':>11}")
    for gamma in np.linspace(-0.4, 1.0, 8):
        p = theta_inequality_check(1.0, 1.0, 1.0, gamma, form="squared")
        u = theta_inequality_check(1.0, 1.0, 1.0, gamma, form="unimodular")
        flag = "  <- exceeds reference" if not p.holds else ""
        print(f"{gamma:7.2f} {p.rhs:11.6f} {p.lhs:13.6f} {u.lhs:11.6f}{flag}")


if __name__ == "__main__":
    main()
