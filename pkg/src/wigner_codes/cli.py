"""Command-line interface.

Subcommands expose the finite-field tables, the length-(q+1) codes, the
MUB construction, face/facet operators and their distance dictionary, the
discrete Wigner transform, and the one-shot verification suite.  All
output is JSON (sorted keys, two-space indent) unless a text format is
requested, and all randomness is seeded, so identical invocations produce
identical bytes.

Exit codes: 0 success, 1 verification failure, 2 validation error.  The
environment variable WIGNER_CODES_TOL overrides the default numerical
tolerance.
"""

from __future__ import annotations

import json
import os
import sys

import click
import numpy as np

from . import __version__
from .codes import LinearCode, coset_table, hamming_code, simplex_code, weight_distribution
from .faceops import (
    FaceLabel,
    face_operator,
    fs_distance,
    hs_distance,
    trace_distance,
)
from .fields import Field, field_of_order
from .linalg import DEFAULT_TOL, matrix_to_json, state_from_json
from .mub import INFINITY, MubSet, overlap_deviation
from .suite import run as run_suite
from .wigner import DiscreteWigner, polytope_minimum

__all__ = ["main"]


def _tolerance() -> float:
    raw = os.environ.get("WIGNER_CODES_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise click.UsageError(f"WIGNER_CODES_TOL={raw!r} is not a number") from None
    if tol <= 0:
        raise click.UsageError("WIGNER_CODES_TOL must be positive")
    return tol


def _emit(obj) -> None:
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


def _field(q: int, modulus: str | None = None) -> Field:
    coeffs = None
    if modulus is not None:
        try:
            coeffs = tuple(int(c) for c in modulus.split(","))
        except ValueError:
            raise click.UsageError(f"modulus {modulus!r} is not a comma-separated integer list") from None
    try:
        return field_of_order(q, modulus=coeffs)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None


def _indices(raw: str, what: str) -> list[int]:
    try:
        return [int(t) for t in raw.split(",")]
    except ValueError:
        raise click.UsageError(f"{what} {raw!r} is not a comma-separated integer list") from None


def _facet_label(field: Field, raw: str, what: str = "label") -> FaceLabel:
    idx = _indices(raw, what)
    q = field.q
    if len(idx) != q + 1:
        raise click.UsageError(f"{what} needs {q + 1} values for q={q}, got {len(idx)}")
    if any(i < 0 or i >= q for i in idx):
        raise click.UsageError(f"{what} values must lie in 0..{q - 1}")
    return FaceLabel.facet([field.from_index(i) for i in idx])


def _load_state(path: str, q: int) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise click.UsageError(f"cannot read state file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise click.UsageError(
            f"malformed JSON in {path}: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from None
    try:
        rho = state_from_json(obj)
    except ValueError as exc:
        raise click.UsageError(f"bad state file {path}: {exc}") from None
    if rho.shape != (q, q):
        raise click.UsageError(f"state in {path} has dimension {rho.shape[0]}, expected {q}")
    return rho


_Q_OPT = click.option("--q", "q", type=int, required=True, help="Field order (prime power, at most 64).")


@click.group()
@click.version_option(version=__version__, prog_name="wigner-codes")
def main():
    """Classical codes mapped to MUB face operators and Wigner functions."""


# -- field ----------------------------------------------------------------------


@main.group("field")
def field_group():
    """Finite-field tables."""


@field_group.command("info")
@_Q_OPT
@click.option("--modulus", default=None, help="Override modulus c0,c1,...,cn (ascending, monic).")
def field_info(q: int, modulus: str | None):
    """Print the field parameters, the powers of alpha, and the trace table."""
    field = _field(q, modulus)
    _emit(
        {
            "p": field.p,
            "n": field.n,
            "q": field.q,
            "modulus": list(field.modulus),
            "alpha_powers": [e.index for e in field.alpha_powers],
            "trace": [e.trace() for e in field.elements],
        }
    )


# -- code -----------------------------------------------------------------------

_MAX_LISTED = 4096


def _code_json(code: LinearCode, with_words: bool, with_weights: bool) -> dict:
    out = {
        "N": code.length,
        "k": code.dimension,
        "d": code.min_distance(),
        "q": code.field.q,
        "generator": [list(g.indices) for g in code.generator],
    }
    if with_words:
        if code.size > _MAX_LISTED:
            out["codewords"] = None
            out["size"] = code.size
        else:
            out["codewords"] = [list(w.indices) for w in code.codewords]
    if with_weights:
        out["weights"] = list(weight_distribution(code))
    return out


@main.group("code")
def code_group():
    """Length-(q+1) simplex and Hamming codes."""


@code_group.command("simplex")
@_Q_OPT
def code_simplex(q: int):
    """The [q+1, 2, q] equidistant code, with all codewords."""
    _emit(_code_json(simplex_code(_field(q)), with_words=True, with_weights=False))


@code_group.command("hamming")
@_Q_OPT
def code_hamming(q: int):
    """The [q+1, q-1, 3] code (codewords listed only when few enough)."""
    _emit(_code_json(hamming_code(_field(q)), with_words=True, with_weights=False))


@code_group.command("weights")
@_Q_OPT
@click.option("--which", type=click.Choice(["simplex", "hamming"]), default="simplex")
def code_weights(q: int, which: str):
    """Weight distribution (A_0, ..., A_N)."""
    field = _field(q)
    code = simplex_code(field) if which == "simplex" else hamming_code(field)
    if code.size > _MAX_LISTED:
        raise click.UsageError(f"{which} code at q={q} has {code.size} words; too many to enumerate")
    _emit(_code_json(code, with_words=False, with_weights=True))


@code_group.command("cosets")
@_Q_OPT
@click.option("--which", type=click.Choice(["simplex", "hamming"]), default="simplex")
def code_cosets(q: int, which: str):
    """Standard (Slepian) coset array with minimum-weight leaders."""
    field = _field(q)
    code = simplex_code(field) if which == "simplex" else hamming_code(field)
    try:
        table = coset_table(code)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(
        {
            "q": q,
            "which": which,
            "leaders": [list(w.indices) for w in table.leaders],
            "rows": [[list(w.indices) for w in row] for row in table.rows],
        }
    )


# -- mub ------------------------------------------------------------------------


def _mub_label_str(label) -> str:
    return "inf" if label is INFINITY else str(label.index)


@main.group("mub")
def mub_group():
    """Complete sets of q+1 mutually unbiased bases."""


@mub_group.command("table")
@_Q_OPT
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def mub_table(q: int, fmt: str):
    """All q+1 basis matrices (columns are the basis vectors)."""
    field = _field(q)
    m = MubSet.build(field)
    if fmt == "json":
        _emit(
            {
                "q": q,
                "bases": [
                    {
                        "label": _mub_label_str(m.label_at(pos)),
                        "matrix": matrix_to_json(m.basis_matrix(pos)),
                    }
                    for pos in range(q + 1)
                ],
            }
        )
        return
    for pos in range(q + 1):
        click.echo(f"basis {_mub_label_str(m.label_at(pos))}:")
        mat = m.basis_matrix(pos)
        for row in mat:
            click.echo("  " + "  ".join(f"{c.real:+.4f}{c.imag:+.4f}j" for c in row))


@mub_group.command("verify")
@_Q_OPT
@click.pass_context
def mub_verify(ctx, q: int):
    """Check orthonormality and cross-basis unbiasedness; exit 1 on failure."""
    tol = _tolerance()
    field = _field(q)
    dev = overlap_deviation(MubSet.build(field))
    ok = dev < tol
    click.echo(f"max deviation {dev:.3e} ({'below' if ok else 'ABOVE'} tolerance {tol:g})")
    if not ok:
        ctx.exit(1)


# -- facet / distance -------------------------------------------------------------


@main.command("facet")
@_Q_OPT
@click.option("--label", required=True, help="q+1 vector indices v_inf,v_0,v_1,... (canonical order).")
def facet_cmd(q: int, label: str):
    """Emit the facet operator for a full-length label."""
    field = _field(q)
    lab = _facet_label(field, label)
    m = MubSet.build(field)
    op = face_operator(m, lab)
    _emit(
        {
            "q": q,
            "label": [v.index for v in lab.values],
            "size": lab.size,
            "offset": op.offset,
            "trace": float(op.matrix.trace().real),
            "matrix": matrix_to_json(op.matrix),
        }
    )


@main.command("distance")
@_Q_OPT
@click.option("--r", "r_raw", required=True, help="First facet label, q+1 comma-separated indices.")
@click.option("--s", "s_raw", required=True, help="Second facet label, q+1 comma-separated indices.")
def distance_cmd(q: int, r_raw: str, s_raw: str):
    """Hamming distance of two facet labels and the induced metric values."""
    field = _field(q)
    r = _facet_label(field, r_raw, "--r")
    s = _facet_label(field, s_raw, "--s")
    d = r.delta(s)
    _emit(
        {
            "delta": d,
            "hs": hs_distance(q, d),
            "trace": trace_distance(q, d),
            "fs": fs_distance(q, d),
        }
    )


# -- wigner -----------------------------------------------------------------------


@main.command("wigner")
@_Q_OPT
@click.option("--state", "state_path", required=True, type=str, help="JSON state file (matrix or vector).")
@click.option("--w", "w_raw", default=None, help="Leader label, q+1 indices; default all zeros.")
@click.option("--negativity", is_flag=True, help="Include the summed negative mass.")
@click.option("--polytope", "polytope_flag", is_flag=True, help="Include the facet-polytope minimum.")
def wigner_cmd(q: int, state_path: str, w_raw: str | None, negativity: bool, polytope_flag: bool):
    """Discrete Wigner table of a state for one simplex coset."""
    field = _field(q)
    rho = _load_state(state_path, q)
    m = MubSet.build(field)
    leader = None if w_raw is None else _facet_label(field, w_raw, "--w")
    dw = DiscreteWigner(m, leader)
    try:
        table = dw.values(rho, tol=_tolerance())
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    out = {
        "q": q,
        "w": [v.index for v in dw.leader.values],
        "table": [[float(x) for x in row] for row in table],
        "sum": float(table.sum()),
    }
    if negativity:
        out["negativity"] = float(np.clip(-table, 0.0, None).sum())
    if polytope_flag:
        rep = polytope_minimum(m, rho, tol=_tolerance())
        out["polytope"] = {
            "min": rep.minimum,
            "member": rep.member,
            "argmin": [v.index for v in rep.argmin.values],
        }
    _emit(out)


# -- verify -----------------------------------------------------------------------


@main.group("verify")
def verify_group():
    """Invariant suites."""


@verify_group.command("all")
@_Q_OPT
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def verify_all(ctx, q: int, seed: int):
    """Run every applicable invariant check for q; exit 1 on any failure."""
    tol = _tolerance()
    try:
        results = run_suite(q, seed=seed, tol=tol)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    failed = 0
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        click.echo(f"[{mark}] {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    click.echo(f"{len(results) - failed}/{len(results)} checks passed (q={q}, seed={seed}, tol={tol:g})")
    if failed:
        ctx.exit(1)


if __name__ == "__main__":
    main()
