"""One-shot verification suite: every structural identity the package
promises, checked numerically for a given dimension q.

``run(q, seed)`` returns a list of named pass/fail results with detail
strings; the command-line wrapper prints one line per check and exits
nonzero if any fail.  All randomness is routed through one seeded
generator, so output is reproducible.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codes import (
    LinearCode,
    Word,
    _rref,
    coset_table,
    dual,
    hamming_code,
    is_mds,
    is_perfect,
    simplex_code,
)
from .faceops import (
    FaceLabel,
    conjugate_label,
    face_operator,
    fs_distance,
    hs_distance,
    jam_state,
    predicted_overlap,
    predicted_overlap_unit_trace,
    purity_stats,
    trace_distance,
    unit_trace_face_operator,
    wh_orbit,
)
from .fields import Field, field_of_order
from .linalg import DEFAULT_TOL, hs_inner, random_pure_state
from .mub import MubSet, canonical_basis_labels, clock_op, overlap_deviation, shift_op
from .wigner import (
    DiscreteWigner,
    parity_deviation,
    polytope_minimum,
    polytope_minimum_exhaustive,
    positivity_survey,
)

__all__ = ["CheckResult", "run"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _all_facets(field: Field):
    q = field.q
    for idx in range(q ** (q + 1)):
        digits = []
        t = idx
        for _ in range(q + 1):
            digits.append(field.from_index(t % q))
            t //= q
        yield FaceLabel.facet(digits)


def _random_label(field: Field, rng, size: int | None = None) -> FaceLabel:
    q = field.q
    s = size if size is not None else int(rng.integers(1, q + 2))
    positions = sorted(rng.choice(q + 1, size=s, replace=False).tolist())
    order = canonical_basis_labels(field)
    bases = tuple(order[p] for p in positions)
    values = tuple(field.from_index(int(v)) for v in rng.integers(0, q, size=s))
    return FaceLabel(bases=bases, values=values)


def _random_codeword(code: LinearCode, rng) -> Word:
    field = code.field
    acc = Word(field, (field.zero,) * code.length)
    for row in code.generator:
        c = field.from_index(int(rng.integers(0, field.q)))
        if c:
            acc = acc + c * row
    return acc


def _check_mub(m: MubSet, tol: float) -> CheckResult:
    dev = overlap_deviation(m)
    return CheckResult("mub-unbiased", dev < tol, f"max overlap deviation {dev:.3e}")


def _check_two_design(m: MubSet, tol: float) -> CheckResult:
    q = m.q
    acc = np.zeros((q * q, q * q), dtype=complex)
    for b in range(q + 1):
        for v in range(q):
            p = m.projectors[b, v]
            acc += np.kron(p, p)
    swap = np.zeros((q * q, q * q))
    for i in range(q):
        for j in range(q):
            swap[i * q + j, j * q + i] = 1.0
    dev = float(np.abs(acc - np.eye(q * q) - swap).max())
    return CheckResult(
        "mub-2design", dev < tol, f"sum of P(x)P vs I + SWAP, deviation {dev:.3e}"
    )


def _check_codes(field: Field, simplex: LinearCode, hamming: LinearCode) -> CheckResult:
    q = field.q
    problems = []
    if any(w.weight != q for w in simplex.codewords if w.weight):
        problems.append("simplex not equidistant")
    if simplex.min_distance() != q:
        problems.append("simplex d != q")
    if not is_mds(simplex):
        problems.append("simplex not MDS")
    if is_perfect(simplex) != (q == 3):
        problems.append("simplex perfection wrong")
    if hamming.min_distance() != 3:
        problems.append("hamming d != 3")
    if not is_perfect(hamming):
        problems.append("hamming not perfect")

    def row_space(code):
        rows, _ = _rref(field, [list(g.symbols) for g in code.generator])
        return [tuple(e.index for e in row) for row in rows]

    if row_space(dual(simplex)) != row_space(hamming):
        problems.append("dual(simplex) != hamming")
    if q == 2:
        table = coset_table(simplex)
        want_rows = (
            ((0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 0)),
            ((0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 1)),
        )
        got_rows = tuple(tuple(w.indices for w in r) for r in table.rows)
        if got_rows != want_rows:
            problems.append("binary Slepian array mismatch")
    detail = (
        f"simplex [{q + 1},2,{q}] equidistant MDS"
        + (" perfect" if q == 3 else "")
        + ", hamming d=3 perfect, dual(simplex) = hamming"
    )
    return CheckResult("codes", not problems, "; ".join(problems) or detail)


def _check_overlap_dictionary(m: MubSet, rng, tol: float) -> CheckResult:
    field = m.field
    q = m.q
    if q <= 3:
        labels = list(_all_facets(field))
        ops = np.stack([face_operator(m, lab).matrix for lab in labels])
        gram = np.einsum("aij,bji->ab", ops, ops).real
        idx = np.array([[v.index for v in lab.values] for lab in labels])
        deltas = (idx[:, None, :] != idx[None, :, :]).sum(axis=2)
        worst = float(np.abs(gram - (q - deltas)).max())
        mode = f"exhaustive over {len(labels) ** 2} facet pairs"
    else:
        order = canonical_basis_labels(field)
        worst = 0.0
        n = 10_000
        for i in range(n):
            s = 1 + i % (q + 1)
            positions = sorted(rng.choice(q + 1, size=s, replace=False).tolist())
            bases = tuple(order[p] for p in positions)
            r, t = (
                FaceLabel(
                    bases=bases,
                    values=tuple(
                        field.from_index(int(v)) for v in rng.integers(0, q, size=s)
                    ),
                )
                for _ in range(2)
            )
            ov = hs_inner(face_operator(m, r).matrix, face_operator(m, t).matrix).real
            worst = max(worst, abs(ov - predicted_overlap(q, r.delta(t))))
        mode = f"{n} sampled pairs, sizes 1..{q + 1}"
    return CheckResult(
        "overlap-dictionary",
        worst < tol,
        f"Tr(A A') vs q - distance, {mode}, max deviation {worst:.3e}",
    )


def _check_trace_identities(m: MubSet, rng, tol: float) -> CheckResult:
    field = m.field
    q = m.q
    worst = 0.0
    for _ in range(1000):
        lab = _random_label(field, rng)
        op = face_operator(m, lab)
        worst = max(worst, abs(op.matrix.trace().real - (lab.size - q * op.offset)))
        worst = max(worst, abs(hs_inner(op.matrix, op.matrix).real - q))
        ut = unit_trace_face_operator(m, lab)
        worst = max(worst, abs(ut.matrix.trace().real - 1.0))
        worst = max(worst, abs(hs_inner(ut.matrix, ut.matrix).real - q))
    for _ in range(200):
        lab = _random_label(field, rng)
        other = FaceLabel(
            bases=lab.bases,
            values=tuple(
                field.from_index(int(v)) for v in rng.integers(0, q, size=lab.size)
            ),
        )
        ov = hs_inner(
            unit_trace_face_operator(m, lab).matrix,
            unit_trace_face_operator(m, other).matrix,
        ).real
        worst = max(
            worst, abs(ov - predicted_overlap_unit_trace(q, lab.size, lab.delta(other)))
        )
    return CheckResult(
        "trace-identities",
        worst < tol,
        f"Tr A, Tr A^2 and the unit-trace overlap law, max deviation {worst:.3e}",
    )


def _check_distances(m: MubSet, hamming: LinearCode, rng, tol: float) -> CheckResult:
    field = m.field
    q = m.q
    worst = 0.0
    for i in range(100):
        r = _random_label(field, rng, size=q + 1)
        s = _random_label(field, rng, size=q + 1)
        while s == r:
            s = _random_label(field, rng, size=q + 1)
        d = r.delta(s)
        ar = face_operator(m, r)
        bs = face_operator(m, s)
        diff = ar.matrix - bs.matrix
        worst = max(worst, abs(np.sqrt(hs_inner(diff, diff).real) - hs_distance(q, d)))
        jr, js = jam_state(ar), jam_state(bs)
        ov = np.vdot(jr, js)
        worst = max(worst, abs(ov - (1 - d / q)))
        worst = max(worst, abs(np.sqrt(max(0.0, 2 - 2 * abs(ov))) - fs_distance(q, d)))
        worst = max(
            worst, abs(np.sqrt(max(0.0, 1 - abs(ov) ** 2)) - trace_distance(q, d))
        )
        if i < 20:
            rho = np.outer(jr, jr.conj())
            sig = np.outer(js, js.conj())
            tnorm = 0.5 * np.abs(np.linalg.eigvalsh(rho - sig)).sum()
            worst = max(worst, abs(tnorm - trace_distance(q, d)))
    if hamming.size <= 256:
        cws = hamming.codewords
        pairs = [(a, b) for a in cws for b in cws if a != b]
    else:
        pairs = []
        while len(pairs) < 200:
            a = _random_codeword(hamming, rng)
            b = _random_codeword(hamming, rng)
            if a != b:
                pairs.append((a, b))
    bound_ok = True
    for a, b in pairs:
        d = sum(1 for x, y in zip(a.symbols, b.symbols) if x != y)
        if hs_distance(q, d) < np.sqrt(6) - tol:
            bound_ok = False
        if q >= 3 and fs_distance(q, d) < np.sqrt(6 / q) - tol:
            bound_ok = False
    detail = f"closed forms vs matrices, max deviation {worst:.3e}; distance-3 code bounds "
    detail += "hold" if bound_ok else "violated"
    if q == 2:
        detail += " (HS bound only at q=2)"
    return CheckResult("distance-identities", worst < tol and bound_ok, detail)


def _check_purity(m: MubSet, simplex: LinearCode, rng, tol: float) -> CheckResult:
    q = m.q
    stats = purity_stats(m, samples=2000, seed=int(rng.integers(0, 2**31)))
    ok = (1.0 / q) - tol <= stats.mean <= 1.0 + tol
    if stats.exhaustive:
        frac = Fraction(stats.mean).limit_denominator(10**6)
        detail = (
            f"mean reduced purity {frac} = {stats.mean:.12f} over all {stats.count} "
            f"facet states (Haar reference {stats.haar_mean:g})"
        )
        if q == 3:
            ok = ok and abs(stats.mean - 59 / 81) < tol and stats.haar_mean == 0.6
    else:
        detail = (
            f"mean reduced purity {stats.mean:.6f} +/- {stats.stderr:.6f} from "
            f"{stats.count} sampled facet states (Haar reference {stats.haar_mean:g})"
        )
    if m.field.p != 2:
        # Odd characteristic only: every simplex-word operator is a conjugate
        # of the parity permutation, hence unitary, hence its bipartite state
        # is maximally entangled with reduced purity exactly 1/q.
        worst = 0.0
        for w in simplex.codewords:
            a = face_operator(m, FaceLabel.facet(w.symbols)).matrix
            a2 = a @ a
            worst = max(worst, abs(hs_inner(a2, a2).real / (q * q) - 1.0 / q))
        detail += f"; simplex-word states maximally entangled (dev {worst:.3e})"
        ok = ok and worst < tol
    return CheckResult("purity", ok, detail)


def _check_orbit(m: MubSet, simplex: LinearCode) -> CheckResult:
    field = m.field
    q = field.q
    zero = FaceLabel.facet([field.zero] * (q + 1))
    orbit = wh_orbit(m, zero)
    problems = []
    if len(orbit) != q * q:
        problems.append(f"orbit size {len(orbit)} != q^2")
    if {lab.word() for lab in orbit} != set(simplex.codewords):
        problems.append("orbit is not the simplex code")
    detail = f"zero-label orbit under all {q * q} conjugations = simplex code"
    return CheckResult("conjugation-orbit", not problems, "; ".join(problems) or detail)


def _check_conjugation_law(m: MubSet, rng, tol: float) -> CheckResult:
    field = m.field
    q = m.q
    labels = [FaceLabel.facet([field.zero] * (q + 1))]
    for _ in range(3):
        labels.append(_random_label(field, rng, size=q + 1))
    worst = 0.0
    for x in field.elements:
        sx = shift_op(field, x)
        for z in field.elements:
            u = sx @ clock_op(field, z)
            for lab in labels:
                lhs = u @ face_operator(m, lab).matrix @ u.conj().T
                rhs = face_operator(m, conjugate_label(lab, x, z)).matrix
                worst = max(worst, float(np.abs(lhs - rhs).max()))
    return CheckResult(
        "conjugation-law",
        worst < tol,
        f"label transport vs matrix conjugation, all {q * q} shifts, max deviation {worst:.3e}",
    )


def _check_parity(field: Field, m: MubSet, tol: float) -> CheckResult:
    dev = parity_deviation(field, m)
    return CheckResult(
        "parity", dev < tol, f"zero-label operator vs k -> -k permutation, deviation {dev:.3e}"
    )


def _check_wigner_roundtrip(m: MubSet, rng, tol: float) -> CheckResult:
    q = m.q
    dw = DiscreteWigner(m)
    worst_sum = worst_rt = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(100):
            g = rng.standard_normal((q, q)) + 1j * rng.standard_normal((q, q))
            h = (g + g.conj().T) / 2
            w = dw.values(h)
            worst_sum = max(worst_sum, abs(w.sum() - h.trace().real))
            worst_rt = max(worst_rt, float(np.abs(dw.reconstruct(w) - h).max()))
    ops = dw.ops.reshape(q * q, q, q)
    gram = np.einsum("aij,bji->ab", ops, ops)
    worst_gram = float(np.abs(gram - q * np.eye(q * q)).max())
    ok = worst_sum < tol and worst_rt < tol and worst_gram < tol
    return CheckResult(
        "wigner-roundtrip",
        ok,
        f"sum rule dev {worst_sum:.3e}, reconstruction dev {worst_rt:.3e}, "
        f"phase-point Gram vs qI dev {worst_gram:.3e}",
    )


def _check_positivity(field: Field, m: MubSet, rng, tol: float) -> CheckResult:
    q = field.q
    dw = DiscreteWigner(m)
    problems = []
    worst_mub = 0.0
    for b in range(q + 1):
        for v in range(q):
            psi = m.vector(b, v)
            worst_mub = max(worst_mub, dw.negativity(np.outer(psi, psi.conj())))
    if worst_mub > tol:
        problems.append(f"some basis state has negativity {worst_mub:.3e}")
    survey = positivity_survey(field, samples=1000, seed=int(rng.integers(0, 2**31)))
    if q == 2:
        if survey.nonnegative_nonmub == 0:
            problems.append("no nonnegative non-basis pure state found at q=2")
        detail = (
            f"all {q * (q + 1)} basis states nonnegative (max {worst_mub:.3e}); "
            f"{survey.negative} negative and {survey.nonnegative_nonmub} nonnegative "
            f"non-basis states out of {survey.samples} Haar samples"
        )
    else:
        if survey.negative + survey.near_mub != survey.samples:
            problems.append(
                f"{survey.nonnegative_nonmub} nonnegative non-basis states at odd prime q"
            )
        detail = (
            f"all {q * (q + 1)} basis states nonnegative (max {worst_mub:.3e}); "
            f"{survey.negative}/{survey.samples} Haar samples negative"
        )
    return CheckResult("positivity", not problems, "; ".join(problems) or detail)


def _check_polytope(field: Field, m: MubSet, simplex: LinearCode, rng, tol: float) -> CheckResult:
    q = field.q
    problems = []
    rep = polytope_minimum(m, np.eye(q) / q)
    if abs(rep.minimum - 1.0 / q) > tol or not rep.member:
        problems.append("maximally mixed state minimum != 1/q")
    psi = m.vector(1, 0)
    rep = polytope_minimum(m, np.outer(psi, psi.conj()))
    if abs(rep.minimum) > tol or not rep.member:
        problems.append("basis state not on the boundary")
    worst = 0.0
    if q <= 4:
        for _ in range(100 if q <= 3 else 10):
            v = random_pure_state(q, seed=int(rng.integers(0, 2**31)))
            rho = np.outer(v, v.conj())
            fast = polytope_minimum(m, rho)
            brute = polytope_minimum_exhaustive(m, rho)
            worst = max(worst, abs(fast.minimum - brute.minimum))
            if fast.member != brute.member:
                problems.append("membership disagrees with brute force")
                break
        if worst > tol:
            problems.append(f"fast vs brute minimum deviates by {worst:.3e}")
    coset_note = ""
    if q <= 3:
        leaders = coset_table(simplex).leaders
        dws = [DiscreteWigner(m, FaceLabel.facet(w.symbols)) for w in leaders]
        for _ in range(20):
            v = random_pure_state(q, seed=int(rng.integers(0, 2**31)))
            rho = np.outer(v, v.conj())
            coset_min = min(q * dw.values(rho).min() for dw in dws)
            rep = polytope_minimum(m, rho)
            if abs(coset_min - rep.minimum) > tol:
                problems.append("coset-wise minimum disagrees with polytope minimum")
                break
            if (coset_min >= -tol) != rep.member:
                problems.append("coset nonnegativity disagrees with membership")
                break
        coset_note = f", coset intersection over {len(dws)} tables agrees"
    detail = f"per-basis minimum vs brute force (dev {worst:.3e}){coset_note}"
    return CheckResult("polytope", not problems, "; ".join(problems) or detail)


def run(q: int, seed: int = 0, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Run every applicable invariant check for dimension q."""
    field = field_of_order(q)
    m = MubSet.build(field)
    simplex = simplex_code(field)
    hamming = hamming_code(field)
    rng = np.random.default_rng(seed)
    checks = [
        _check_mub(m, tol),
        _check_two_design(m, tol),
        _check_codes(field, simplex, hamming),
        _check_overlap_dictionary(m, rng, tol),
        _check_trace_identities(m, rng, tol),
        _check_distances(m, hamming, rng, tol),
        _check_purity(m, simplex, rng, tol),
        _check_orbit(m, simplex),
    ]
    if field.p != 2:
        checks.append(_check_conjugation_law(m, rng, tol))
        checks.append(_check_parity(field, m, tol))
    checks.append(_check_wigner_roundtrip(m, rng, tol))
    if field.n == 1:
        checks.append(_check_positivity(field, m, rng, tol))
    checks.append(_check_polytope(field, m, simplex, rng, tol))
    return checks
