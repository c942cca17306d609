"""Plain-text and CSV formats for lattices, Gaussians, samples and experiment tables.

All writers go through :func:`atomic_write`: the text is written to a
temporary file in the destination directory and renamed into place.
"""
from __future__ import annotations

import csv
import io
import os
import re
import tempfile

import numpy as np

from .gaussians import CovarianceState, GaussianState
from .numerics import Grid1D, SampledFunction1D, SampledFunction2D
from .symplectic import Lattice

__all__ = [
    "FormatError",
    "atomic_write",
    "format_lattice",
    "parse_lattice",
    "format_gaussian",
    "parse_gaussian",
    "parse_matrix",
    "parse_covariance",
    "format_sampled",
    "parse_sampled",
    "SWEEP_COLUMNS",
    "COEFF_COLUMNS",
    "format_table",
    "read_table",
    "parse_config",
]

SWEEP_COLUMNS = ("delta", "janssen_error", "predicted_rate", "a_est", "b_est", "sup_err", "l2_err")
COEFF_COLUMNS = ("kx", "kp", "zx", "zp", "re_c", "im_c")


class FormatError(ValueError):
    """Malformed input file."""


def atomic_write(path, text):
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(v):
    return repr(float(v))


def _rows(lines, count, width, what):
    if len(lines) < count:
        raise FormatError(f"{what}: expected {count} rows, got {len(lines)}")
    out = []
    for ln in lines[:count]:
        parts = ln.split()
        if len(parts) != width:
            raise FormatError(f"{what}: expected {width} entries per row, got {len(parts)}")
        try:
            out.append([float(p) for p in parts])
        except ValueError as exc:
            raise FormatError(f"{what}: {exc}") from None
    return np.array(out)


def _content_lines(text):
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def format_lattice(lat: Lattice):
    lines = [f"n={lat.n}"]
    lines += [" ".join(_fmt(v) for v in row) for row in lat.generator]
    return "\n".join(lines) + "\n"


def parse_lattice(text) -> Lattice:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty lattice file")
    m = re.fullmatch(r"n\s*=\s*(\d+)", lines[0])
    if not m:
        raise FormatError("lattice file must start with 'n=<int>'")
    n = int(m.group(1))
    if n < 1:
        raise FormatError("n must be positive")
    gen = _rows(lines[1:], 2 * n, 2 * n, "lattice generator")
    if len(lines) != 1 + 2 * n:
        raise FormatError("trailing content after lattice generator")
    return Lattice(gen)


def format_gaussian(g: GaussianState):
    lines = [f"n={g.n} hbar={_fmt(g.hbar)}"]
    lines += [" ".join(_fmt(v) for v in row) for row in g.M.real]
    lines += [" ".join(_fmt(v) for v in row) for row in g.M.imag]
    return "\n".join(lines) + "\n"


def parse_gaussian(text) -> GaussianState:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty Gaussian file")
    m = re.fullmatch(r"n\s*=\s*(\d+)\s+hbar\s*=\s*(\S+)", lines[0])
    if not m:
        raise FormatError("Gaussian file must start with 'n=<int> hbar=<decimal>'")
    n = int(m.group(1))
    try:
        hbar = float(m.group(2))
    except ValueError:
        raise FormatError(f"bad hbar value {m.group(2)!r}") from None
    if len(lines) != 1 + 2 * n:
        raise FormatError(f"expected {2 * n} matrix rows after the header")
    re_m = _rows(lines[1:], n, n, "Re M")
    im_m = _rows(lines[1 + n :], n, n, "Im M")
    return GaussianState(re_m + 1j * im_m, hbar)


def parse_matrix(text):
    """Whitespace-separated square real matrix (one row per line)."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty matrix file")
    width = len(lines[0].split())
    return _rows(lines, len(lines), width, "matrix")


def parse_covariance(text, hbar) -> CovarianceState:
    S = parse_matrix(text)
    if S.shape[0] != S.shape[1]:
        raise FormatError("covariance matrix must be square")
    return CovarianceState(S, hbar)


def format_sampled(f):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(f, SampledFunction1D):
        w.writerow(["x", "re", "im"])
        for x, v in zip(f.grid.points, f.values):
            w.writerow([_fmt(x), _fmt(v.real), _fmt(v.imag)])
    elif isinstance(f, SampledFunction2D):
        w.writerow(["x", "p", "re", "im"])
        xs, ps = f.xgrid.points, f.ygrid.points
        for i, x in enumerate(xs):
            for j, p in enumerate(ps):
                v = f.values[i, j]
                w.writerow([_fmt(x), _fmt(p), _fmt(v.real), _fmt(v.imag)])
    else:
        raise TypeError("expected a sampled function")
    return buf.getvalue()


def _grid_from(values):
    u = np.unique(values)
    if u.size < 16:
        raise FormatError("a grid needs at least 16 distinct nodes")
    h = np.diff(u)
    if np.max(np.abs(h - h.mean())) > 1e-9 * max(1.0, abs(h.mean())):
        raise FormatError("grid nodes are not uniformly spaced")
    spacing = float(h.mean())
    count = u.size
    center = float(u[count // 2])
    return Grid1D(center, spacing, count)


def parse_sampled(text):
    """Inverse of :func:`format_sampled` (header decides 1-D or 2-D)."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r]
    if not rows:
        raise FormatError("empty CSV")
    header = [c.strip() for c in rows[0]]
    try:
        data = np.array([[float(c) for c in r] for r in rows[1:]])
    except ValueError as exc:
        raise FormatError(f"non-numeric CSV entry: {exc}") from None
    if header == ["x", "re", "im"]:
        if data.ndim != 2 or data.shape[1] != 3:
            raise FormatError("expected 3 columns")
        grid = _grid_from(data[:, 0])
        if not np.allclose(data[:, 0], grid.points, rtol=0, atol=1e-9 * grid.spacing * grid.count):
            raise FormatError("x column must list the grid nodes in increasing order")
        return SampledFunction1D(grid, data[:, 1] + 1j * data[:, 2])
    if header == ["x", "p", "re", "im"]:
        if data.ndim != 2 or data.shape[1] != 4:
            raise FormatError("expected 4 columns")
        xg, pg = _grid_from(data[:, 0]), _grid_from(data[:, 1])
        if data.shape[0] != xg.count * pg.count:
            raise FormatError("2-D CSV must list every (x, p) grid node")
        vals = (data[:, 2] + 1j * data[:, 3]).reshape(xg.count, pg.count)
        return SampledFunction2D(xg, pg, vals)
    raise FormatError("header must be 'x,re,im' or 'x,p,re,im'")


def format_table(columns, rows):
    """CSV with a header; ``None`` cells are written empty, floats via ``repr``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        if len(r) != len(columns):
            raise ValueError("row length does not match the header")
        w.writerow(["" if v is None else (_fmt(v) if isinstance(v, float) else v) for v in r])
    return buf.getvalue()


def read_table(text):
    """Parse a CSV table into ``(header, list of dict)``; empty cells become ``None``."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise FormatError("empty CSV")
    header = rows[0]
    out = []
    for r in rows[1:]:
        if not r:
            continue
        out.append({k: (None if v == "" else _maybe_float(v)) for k, v in zip(header, r)})
    return header, out


def _maybe_float(v):
    try:
        return float(v)
    except ValueError:
        return v


def parse_config(text):
    """``key=value`` lines; ``#`` starts a comment; keys use ``_`` or ``-``."""
    cfg = {}
    for no, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        if "=" not in ln:
            raise FormatError(f"config line {no}: expected key=value")
        k, v = ln.split("=", 1)
        k = k.strip().replace("-", "_")
        if not k:
            raise FormatError(f"config line {no}: empty key")
        cfg[k] = v.strip()
    return cfg
