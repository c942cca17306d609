"""Command-line experiments.

Every subcommand writes its artifacts into ``--out`` (atomically) and a
short summary to stdout.  Exit codes: 0 success, 2 precondition or parse
failure, 3 numerical non-convergence or a failed self-test.

Options may also come from a ``--config`` file of ``key=value`` lines;
command-line flags override the file.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np
from scipy.sparse.linalg import ArpackNoConvergence

from . import io as gio
from .frames import (
    FrameConvergenceError,
    FrameSpec,
    NotAFrameError,
    UndecidableFrameError,
    approx_expansion,
    frame_bounds_numeric,
    gaussian_frame_set_contains,
    janssen_error_sum,
    janssen_sum_gram,
    janssen_exponent,
    shortest_vector_sq,
)
from .gaussians import (
    CLASSICAL_HBAR,
    CovarianceState,
    GaussianState,
    admissibility_eigenvalues,
    cross_ambiguity_closed,
    cross_wigner_closed,
    u_phi_closed,
)
from .numerics import (
    Grid1D,
    GridError,
    SampledFunction1D,
    ambiguity_numeric,
    density_integral,
    numeric_covariance,
    poisson_check,
    sample,
    wigner_numeric,
)
from .phasespace import PhaseSpaceFrameSpec, phase_space_expand
from .symplectic import Lattice, LatticeParam1D

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_NUMERIC = 3


class CLIError(Exception):
    def __init__(self, message, code=EXIT_PRECONDITION):
        super().__init__(message)
        self.code = code


# ----------------------------------------------------------------------------
# argument types


def parse_hbar(text):
    t = str(text).strip().lower()
    if t == "classical":
        return CLASSICAL_HBAR
    try:
        v = float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid hbar {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError("hbar must be positive")
    return v


def float_list(text):
    try:
        return [float(t) for t in str(text).replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _gaussian_arg(spec, hbar, n=1):
    """``I``, a (complex) scalar, or a path to a Gaussian text file."""
    s = str(spec).strip()
    if os.path.isfile(s):
        with open(s) as fh:
            g = gio.parse_gaussian(fh.read())
        if not math.isclose(g.hbar, hbar, rel_tol=1e-12):
            raise CLIError(f"{s}: file hbar {g.hbar} differs from --hbar {hbar}")
        return g
    if s.upper() == "I":
        return GaussianState.standard(n, hbar)
    try:
        v = complex(s.replace(" ", ""))
    except ValueError:
        raise CLIError(f"cannot read Gaussian exponent {s!r} (use I, a number, or a file)") from None
    return GaussianState(np.eye(n) * v, hbar)


def _lattice_from(args, delta):
    if getattr(args, "lattice", None):
        with open(args.lattice) as fh:
            base = gio.parse_lattice(fh.read())
        return Lattice(base.generator / delta)
    params = LatticeParam1D(args.alpha, args.beta, args.gamma)
    return Lattice.from_params(params, delta)


def _write(args, name, text):
    path = os.path.join(args.out, name)
    gio.atomic_write(path, text)
    return path


def _line_grid(args, M_inv_norm=1.0):
    if args.grid_halfwidth is not None:
        return Grid1D.symmetric(args.grid_halfwidth, args.grid_n)
    hw = 8.0 * math.sqrt(args.hbar * max(1.0, M_inv_norm))
    return Grid1D.symmetric(hw, args.grid_n)


def _matrix_block(A):
    return "\n".join(" ".join(repr(float(v)) for v in row) for row in np.atleast_2d(A))


# ----------------------------------------------------------------------------
# subcommands


def _transform_pair(args):
    g1 = _gaussian_arg(args.m, args.hbar, args.n)
    g2 = _gaussian_arg(args.mprime, args.hbar, g1.n)
    return g1, g2


def _oracle_grid(args, g1, g2):
    inv = max(np.linalg.norm(np.linalg.inv(g.X), 2) for g in (g1, g2))
    grid = _line_grid(args, 2 * inv)
    stride = max(1, grid.count // 256)
    while grid.count % stride:
        stride -= 1
    return grid, stride


def cmd_wigner(args):
    g1, g2 = _transform_pair(args)
    W = cross_wigner_closed(g1, g2)
    text = (
        f"n={g1.n} hbar={args.hbar!r}\n"
        f"amplitude={W.amplitude.real!r} {W.amplitude.imag!r}\n"
        f"C={(W.amplitude * (np.pi * args.hbar) ** g1.n).real!r} "
        f"{(W.amplitude * (np.pi * args.hbar) ** g1.n).imag!r}\n"
        f"# F real part\n{_matrix_block(W.F.real)}\n# F imaginary part\n{_matrix_block(W.F.imag)}\n"
    )
    files = [_write(args, "wigner_params.txt", text)]
    print(f"F real part:\n{_matrix_block(W.F.real)}\nF imaginary part:\n{_matrix_block(W.F.imag)}")
    if g1.n == 1:
        grid, stride = _oracle_grid(args, g1, g2)
        num = wigner_numeric(sample(g1, grid), sample(g2, grid), hbar=args.hbar, x_stride=stride)
        closed = W(num.mesh)
        err = float(np.max(np.abs(num.values - closed)) / np.max(np.abs(closed)))
        files.append(_write(args, "wigner.csv", gio.format_sampled(num)))
        files.append(_write(args, "wigner_error.txt", f"max_relative_error={err!r}\n"))
        print(f"closed form vs quadrature: max relative error {err:.3e}")
    return files


def cmd_ambiguity(args):
    g1, g2 = _transform_pair(args)
    W = cross_wigner_closed(g1, g2)
    text = (
        f"n={g1.n} hbar={args.hbar!r}\n"
        "# A(z) = 2^-n * amplitude * exp(-F (z/2)^2 / hbar)\n"
        f"amplitude={W.amplitude.real!r} {W.amplitude.imag!r}\n"
        f"# F real part\n{_matrix_block(W.F.real)}\n# F imaginary part\n{_matrix_block(W.F.imag)}\n"
    )
    files = [_write(args, "ambiguity_params.txt", text)]
    if g1.n == 1:
        grid, stride = _oracle_grid(args, g1, g2)
        num = ambiguity_numeric(sample(g1, grid), sample(g2, grid), hbar=args.hbar, x_count=256)
        closed = cross_ambiguity_closed(g1, g2, num.mesh)
        err = float(np.max(np.abs(num.values - closed)) / np.max(np.abs(closed)))
        files.append(_write(args, "ambiguity.csv", gio.format_sampled(num)))
        files.append(_write(args, "ambiguity_error.txt", f"max_relative_error={err!r}\n"))
        print(f"closed form vs quadrature: max relative error {err:.3e}")
    return files


def cmd_rate_sweep(args):
    rows, notes = [], []
    hbar = args.hbar
    for delta in args.deltas:
        lat = _lattice_from(args, delta)
        spec = FrameSpec(GaussianState.standard(lat.n, hbar), lat)
        if lat.tag is None:
            raise CLIError("rate-sweep needs a symplectic lattice (a multiple of a symplectic matrix)")
        diag = janssen_error_sum(spec)
        a = b = sup = l2 = None
        if lat.n == 1 and not args.no_bounds:
            a, b = frame_bounds_numeric(spec, tol=args.tol)
            _, _, rep = approx_expansion(spec.window, spec, radius=args.radius, force=True)
            sup, l2 = rep.sup_err, rep.l2_err
        rows.append([float(delta), diag.janssen_error, diag.predicted_rate, a, b, sup, l2])
        # same sum with P = 0 and L replaced by |L| I: never smaller
        nL = np.linalg.norm(lat.tag.B.L, 2)
        G0 = np.diag([nL**2] * lat.n + [nL**-2] * lat.n)
        shear_free = janssen_sum_gram(G0, lat.tag.delta, hbar)[0]
        flag = "bound vacuous" if diag.vacuous else "certified"
        notes.append(
            f"delta={delta!r} janssen_error={diag.janssen_error!r} {flag}; "
            f"shear_free_bound={shear_free!r} (P = 0, L -> |L| I); truncation_radius={diag.truncation_radius}"
        )
        print(notes[-1])
    files = [_write(args, "rate_sweep.csv", gio.format_table(gio.SWEEP_COLUMNS, rows))]
    good = [(r[0], r[1]) for r in rows if 0 < r[1] < 1]
    if len(good) >= 2:
        d2 = np.array([g[0] ** 2 for g in good])
        le = np.log([g[1] for g in good])
        slope = float(np.polyfit(d2, le, 1)[0])
        lat = _lattice_from(args, 1.0)
        c = lat.tag.delta
        expected = -janssen_exponent(c, hbar) * shortest_vector_sq(lat.tag.gram)
        notes.append(f"fitted slope d log(janssen_error)/d delta^2 = {slope!r}; leading-term value {expected!r}")
        print(notes[-1])
    files.append(_write(args, "rate_sweep_report.txt", "\n".join(notes) + "\n"))
    return files


def _target_state(args):
    if args.target:
        return _gaussian_arg(args.target, args.hbar)
    return GaussianState.generalized_1d(args.target_P, args.target_L, args.hbar)


def cmd_reconstruct(args):
    hbar = args.hbar
    lat = _lattice_from(args, args.delta)
    if lat.n != 1:
        raise CLIError("reconstruct works on n = 1 lattices")
    spec = FrameSpec(GaussianState.standard(1, hbar), lat)
    is_frame = gaussian_frame_set_contains(spec)
    if not is_frame and not args.force:
        raise CLIError(
            f"lattice density {lat.density:.6g} is at or below 1/(2 pi hbar) = "
            f"{1 / (2 * np.pi * hbar):.6g}: not a frame (use --force)"
        )
    target = _target_state(args)
    grid = None
    if args.grid_halfwidth is not None:
        grid = Grid1D.symmetric(args.grid_halfwidth, args.grid_n)
    _, rec, rep = approx_expansion(target, spec, radius=args.radius, grid=grid, force=args.force)
    tgt = sample(target, rec.grid)
    diff = SampledFunction1D(rec.grid, np.abs(rec.values - tgt.values))
    status = "frame" if is_frame else "NOT a frame (forced)"
    summary = (
        f"status={status}\nlattice_density={lat.density!r}\nsup_err={rep.sup_err!r}\n"
        f"l2_err={rep.l2_err!r}\nradius={rep.radius!r}\nn_terms={rep.n_terms}\n"
        f"grid_halfwidth={rep.grid.halfwidth!r}\ngrid_n={rep.grid.count}\n"
        f"coefficient_tail={rep.coefficient_tail!r}\n"
    )
    print(summary, end="")
    return [
        _write(args, "target.csv", gio.format_sampled(tgt)),
        _write(args, "reconstruction.csv", gio.format_sampled(rec)),
        _write(args, "difference.csv", gio.format_sampled(diff)),
        _write(args, "reconstruct_summary.txt", summary),
    ]


def cmd_phase_expand(args):
    hbar = args.hbar
    g = _gaussian_arg(args.m, hbar, args.n)
    target = u_phi_closed(g)
    files, lines, errs = [], [], []
    for delta in args.deltas:
        lat = _lattice_from(args, delta) if g.n == 1 else Lattice.square(delta, g.n)
        try:
            spec = PhaseSpaceFrameSpec(FrameSpec(GaussianState.standard(g.n, hbar), lat))
        except NotAFrameError as exc:
            raise CLIError(f"delta={delta}: {exc}") from None
        coeffs, rec, rep = phase_space_expand(target, spec, radius=args.radius)
        tag = f"_d{delta:g}" if len(args.deltas) > 1 else ""
        rows = []
        for k, z, c in coeffs:
            rows.append([int(k[0]), int(k[g.n]), float(z[0]), float(z[g.n]), c.real, c.imag])
        files.append(_write(args, f"coefficients{tag}.csv", gio.format_table(gio.COEFF_COLUMNS, rows)))
        if rec is not None:
            files.append(_write(args, f"phase_reconstruction{tag}.csv", gio.format_sampled(rec)))
            lines.append(
                f"delta={delta!r} rel_l2_err={rep.rel_l2_err!r} sup_err={rep.sup_err!r} "
                f"janssen_error={rep.janssen_error!r} predicted_rate={rep.predicted_rate!r} "
                f"leading_rate={rep.leading_rate!r} n_terms={rep.n_terms} radius={rep.radius!r}"
            )
            errs.append((delta, rep.rel_l2_err))
        else:
            lines.append(f"delta={delta!r} n_terms={len(coeffs)} (coefficients only for n > 1)")
        print(lines[-1])
    if len(errs) >= 2:
        d2 = np.array([e[0] ** 2 for e in errs])
        slope = float(np.polyfit(d2, np.log([e[1] for e in errs]), 1)[0])
        lines.append(f"fitted slope d log(rel_l2_err)/d delta^2 = {slope!r}")
        print(lines[-1])
    files.append(_write(args, "phase_expand_report.txt", "\n".join(lines) + "\n"))
    return files


def cmd_check_state(args):
    hbar = args.hbar
    if args.sigma:
        with open(args.sigma) as fh:
            c = gio.parse_covariance(fh.read(), hbar)
    elif args.sigma_diag:
        c = CovarianceState(np.diag(args.sigma_diag), hbar)
    else:
        raise CLIError("check-state needs --sigma FILE or --sigma-diag a,b,...")
    ev = admissibility_eigenvalues(c)
    lo = float(ev[0])
    tol = args.tol if args.tol is not None else 1e-12
    if lo < -tol:
        verdict = "not admissible"
    elif lo <= tol:
        verdict = "admissible (boundary)"
    else:
        verdict = "admissible"
    lines = [
        "eigenvalues of Sigma + (i hbar/2) J: " + " ".join(repr(float(v)) for v in ev),
        f"min_eigenvalue={lo!r}",
        f"verdict={verdict}",
    ]
    if c.n <= 2:
        meas = numeric_covariance(c)
        lines.append(f"normalization_integral={density_integral(c)!r}")
        lines.append("measured_second_moment:\n" + _matrix_block(meas.measured))
        lines.append(f"measured_ratio={meas.ratio!r}")
    text = "\n".join(lines) + "\n"
    print(text, end="")
    return [_write(args, "check_state.txt", text)]


def _bump(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


def cmd_rotation_sweep(args):
    hbar = args.hbar
    base = _lattice_from(args, args.delta)
    if base.n != 1:
        raise CLIError("rotation-sweep is defined for n = 1")
    angles = args.angles
    if len(angles) == 1 and float(angles[0]).is_integer() and angles[0] >= 1:
        angles = list(np.linspace(0.0, np.pi / 2, int(angles[0]), endpoint=False))
    window = _bump if args.window == "bump" else None
    rows = []
    for th in angles:
        spec = FrameSpec(GaussianState.standard(1, hbar), base.rotated(th))
        a, b = frame_bounds_numeric(spec, radius=args.radius, window=window, tol=args.tol)
        rows.append([float(th), a, b])
    arr = np.array(rows)
    spread = float(max(np.ptp(arr[:, 1]), np.ptp(arr[:, 2])))
    text = gio.format_table(("angle", "a_est", "b_est"), rows)
    print(text, end="")
    print(f"max spread of the bound estimates: {spread:.3e}")
    return [
        _write(args, "rotation_sweep.csv", text),
        _write(args, "rotation_sweep_report.txt", f"window={args.window}\nmax_spread={spread!r}\n"),
    ]


def cmd_selftest(args):
    checks = []
    rng = np.random.default_rng(0)
    hbar = CLASSICAL_HBAR
    worst = 0.0
    for _ in range(3):
        A = rng.normal(size=2)
        g1 = GaussianState(np.array([[1 + abs(A[0]) + 0.3j * A[1]]]), hbar)
        g2 = GaussianState(np.array([[0.8 + 0.2j]]), hbar)
        grid = Grid1D.symmetric(6.0, 1024)
        num = wigner_numeric(sample(g1, grid), sample(g2, grid), hbar=hbar, x_stride=8)
        closed = cross_wigner_closed(g1, g2)(num.mesh)
        worst = max(worst, float(np.max(np.abs(num.values - closed)) / np.max(np.abs(closed))))
    checks.append(("cross-Wigner closed form vs quadrature", worst, worst <= 1e-8))
    j = janssen_error_sum(FrameSpec.square(2.0)).janssen_error
    checks.append(("Janssen sum, square lattice delta=2", j, abs(j - 7.4837e-3) <= 1e-6))
    lhs, rhs = poisson_check(np.eye(1), hbar, np.zeros(1))
    checks.append(("Poisson summation theta constant", lhs.real, abs(lhs - rhs) <= 1e-12 and abs(lhs.real - 1.0864348112) < 1e-9))
    ev = float(admissibility_eigenvalues(CovarianceState(np.eye(2) * hbar / 4, hbar))[0])
    checks.append(("admissibility of Sigma = hbar/4 I", ev, abs(ev + hbar / 4) <= 1e-12))
    ok = True
    lines = []
    for name, value, passed in checks:
        ok &= bool(passed)
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}: {value!r}")
    text = "\n".join(lines) + "\n"
    print(text, end="")
    files = [_write(args, "selftest.txt", text)]
    if not ok:
        raise CLIError("self-test failed", EXIT_NUMERIC)
    return files


# ----------------------------------------------------------------------------
# parser


def _common(p):
    g = p.add_argument_group("global options")
    g.add_argument("--hbar", type=parse_hbar, default=CLASSICAL_HBAR, help="'classical' (= 1/2pi) or a decimal")
    g.add_argument("--out", default="out", help="output directory")
    g.add_argument("--grid-n", type=int, default=1024, help="grid points per axis")
    g.add_argument("--grid-halfwidth", type=float, default=None, help="grid half-width")
    g.add_argument("--radius", type=float, default=None, help="lattice truncation radius")
    g.add_argument("--tol", type=float, default=1e-6, help="iteration / decision tolerance")
    g.add_argument("--config", default=None, help="key=value configuration file")


def _lattice_opts(p, deltas=False):
    p.add_argument("--lattice", default=None, help="lattice generator file (scaled by 1/delta)")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=0.0)
    if deltas:
        p.add_argument("--deltas", type=float_list, default=[2.0, 2.5, 3.0, 3.5, 4.0])
    else:
        p.add_argument("--delta", type=float, default=2.0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gaussframes", description="Gaussian Weyl-Heisenberg frames and phase-space expansions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("wigner", cmd_wigner, "closed-form cross-Wigner transform vs quadrature"),
        ("ambiguity", cmd_ambiguity, "closed-form cross-ambiguity function vs quadrature"),
    ):
        p = sub.add_parser(name, help=help_)
        _common(p)
        p.add_argument("--m", default="I", help="I, a scalar (e.g. 2 or 1+0.5j), or a Gaussian file")
        p.add_argument("--mprime", default="I")
        p.add_argument("--n", type=int, default=1, help="dimension for scalar/identity exponents")
        p.set_defaults(func=fn)

    p = sub.add_parser("rate-sweep", help="Janssen bound and rates over a delta sweep")
    _common(p)
    _lattice_opts(p, deltas=True)
    p.add_argument("--no-bounds", action="store_true", help="skip the grid measurements")
    p.set_defaults(func=cmd_rate_sweep)

    p = sub.add_parser("reconstruct", help="approximate Gabor expansion of a Gaussian (n = 1)")
    _common(p)
    _lattice_opts(p)
    p.add_argument("--target", default=None, help="target Gaussian (I, scalar, or file)")
    p.add_argument("--target-P", dest="target_P", type=float, default=0.0)
    p.add_argument("--target-L", dest="target_L", type=float, default=2.0)
    p.add_argument("--force", action="store_true", help="run at or below critical density")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("phase-expand", help="phase-space expansion of U_phi phi_M")
    _common(p)
    _lattice_opts(p, deltas=True)
    p.set_defaults(deltas=[2.0])
    p.add_argument("--m", default="2")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_phase_expand)

    p = sub.add_parser("check-state", help="admissibility of a Gaussian phase-space density")
    _common(p)
    p.add_argument("--sigma", default=None, help="file with the covariance matrix")
    p.add_argument("--sigma-diag", type=float_list, default=None, help="diagonal covariance a,b,...")
    p.set_defaults(func=cmd_check_state, tol=None)

    p = sub.add_parser("rotation-sweep", help="frame-bound estimates under lattice rotations")
    _common(p)
    _lattice_opts(p)
    p.add_argument("--angles", type=float_list, default=[8.0], help="angle list, or a single count")
    p.add_argument("--window", choices=("gaussian", "bump"), default="gaussian")
    p.set_defaults(func=cmd_rotation_sweep)

    p = sub.add_parser("selftest", help="quick numerical self-check")
    _common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def _apply_config(parser, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    with open(known.config) as fh:
        cfg = gio.parse_config(fh.read())
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    cmd = next((a for a in argv if a in sub.choices), None)
    if cmd is None:
        return
    sp = sub.choices[cmd]
    dests = {a.dest: a for a in sp._actions}
    defaults = {}
    for k, v in cfg.items():
        if k not in dests or k in ("help", "func", "config"):
            raise CLIError(f"config: unknown key {k!r} for '{cmd}'")
        act = dests[k]
        if isinstance(act, argparse._StoreTrueAction):
            defaults[k] = v.lower() in ("1", "true", "yes", "on")
        elif act.type is not None:
            try:
                defaults[k] = act.type(v)
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise CLIError(f"config: bad value for {k}: {exc}") from None
        else:
            defaults[k] = v
    sp.set_defaults(**defaults)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if args.grid_n < 16:
            raise CLIError("--grid-n must be at least 16")
        args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FrameConvergenceError, ArpackNoConvergence) as exc:
        print(f"error: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (
        gio.FormatError,
        GridError,
        NotAFrameError,
        UndecidableFrameError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
