"""Acceptance gate: one pass/fail line per criterion.

Each test records its verdict line (shown in the terminal summary and on
stdout) and then asserts the verdict, so a criterion that does not hold
fails here rather than being hidden.
"""

import cmath
import math
import time

import numpy as np

from conftest import ACCEPTANCE_LINES
from twisted_elliptic.analytic import (
    E2k_classical,
    cot_coefficient_B,
    dedekind_eta,
    eisenstein_E_lattice,
    eisenstein_E_qexp,
    g_twisted,
    taylor_coefficients,
    theta,
    weierstrass_p,
    lattice_distance,
)
from twisted_elliptic.characters import (
    AlgebraicValue,
    character_by_name,
    enumerate_characters,
    gauss_sum,
    induce,
    restrict,
)
from twisted_elliptic.verify import VerifyConfig, lookup, verify_record

CHARS = {"(n/5)": "kronecker:5", "chi8": "kronecker:8", "chi12": "kronecker:12"}


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# -- 1. exact q-expansions -----------------------------------------------------------

EXACT_IDS = [
    "d5.item2", "d5.item3a", "d5.item3b", "d5.item5", "d5.item6a", "d5.item6b",
    "d8.item1", "d8.item2a", "d8.item2b",
    "d8.companion-item1", "d8.companion-item2a", "d8.companion-item2b",
    "d10.item1", "d10.item2a", "d10.item2b",
    "d10.companion-item1", "d10.companion-item2a", "d10.companion-item2b",
    "d12.item2", "d12.item3a", "d12.item3b", "d12.item5", "d12.item6a", "d12.item6b",
    "qform.d-24", "qform.d-15", "qform.d-20",
]  # fmt: skip
MUST_PASS = ["d5.item2", "d5.item5", "d8.item1", "qform.d-24", "qform.d-15", "qform.d-20"]


def test_criterion_1_exact_expansions():
    cfg = VerifyConfig(order=200)
    reports = {}
    slowest = 0.0
    for rid in EXACT_IDS:
        t0 = time.perf_counter()
        reports[rid] = verify_record(lookup(rid), cfg)
        slowest = max(slowest, time.perf_counter() - t0)
    assert all(r.order == 200 for r in reports.values())
    failed = [rid for rid, r in reports.items() if not r.passed]
    unwitnessed = [rid for rid in failed if not reports[rid].witness or not {"exponent", "lhs", "rhs"} <= set(reports[rid].witness)]
    must_fail = [rid for rid in MUST_PASS if not reports[rid].passed]
    for rid in failed:
        w = reports[rid].witness
        print(f"  {rid}: first mismatch at q^{w['exponent']}: {w['lhs']} vs {w['rhs']}")
    ok = not unwitnessed and not must_fail and slowest < 30
    detail = (
        f"{len(EXACT_IDS) - len(failed)}/{len(EXACT_IDS)} hold to order 200, slowest {slowest:.1f}s; "
        f"as printed failures (all witnessed): {', '.join(failed) or 'none'}; "
        f"required but failing: {', '.join(must_fail) or 'none'}"
    )
    assert record(1, ok, detail), detail


# -- 2. pointwise identities ------------------------------------------------------------

POINTWISE_IDS = [
    "g.sine-form", "companion.cot-form", "companion.primitive", "companion.quadratic",
    "g.shift-sum", "companion.shift-sum", "theta1.four-variable",
    "d8.g-product", "d8.companion-product", "d10.g-product", "d10.companion-product",
    "d12.item1", "d12.item4", "d5.item1", "d5.item4",
]  # fmt: skip


def test_criterion_2_pointwise_identities():
    cfg = VerifyConfig(samples=20, seed=0)
    t0 = time.perf_counter()
    reports = [verify_record(lookup(rid), cfg) for rid in POINTWISE_IDS]
    elapsed = time.perf_counter() - t0
    bad = []
    for rep in reports:
        assert rep.samples >= 20 and rep.tolerance <= 1e-8
        if not rep.passed:
            bad.append(f"{rep.id} ({rep.max_rel_err:.1e})")
            print(f"  {rep.id}: max rel err {rep.max_rel_err:.3e} at {rep.witness['point']}")
    ok = not bad and elapsed < 60
    detail = f"{len(reports) - len(bad)}/{len(reports)} within tolerance at 20 points in {elapsed:.1f}s; failing: {', '.join(bad) or 'none'}"
    assert record(2, ok, detail), detail


# -- 3. modular transformations -----------------------------------------------------------


def test_criterion_3_modular_laws():
    cfg = VerifyConfig(lattice_cutoff=300, gamma0_matrices=10, gamma1_matrices=5, tolerance=1e-5)
    ids = ["modular.E.gamma0", "modular.E.gamma1", "modular.F.gamma0", "modular.F.gamma1"]
    worst = 0.0
    bad = []
    for rid in ids:
        rec = lookup(rid)
        assert {(chi.modulus, w) for _, chi, w in rec.params["cases"]} == {(N, w) for N in (5, 8, 12) for w in (4, 6)}
        rep = verify_record(rec, cfg)
        worst = max(worst, rep.max_rel_err)
        for case in rep.cases:
            assert len(case["matrices"]) == (10 if rec.params["group"] == "gamma0" else 5)
        if not rep.passed:
            bad.append(rid)
    ok = not bad
    detail = f"E and F over Gamma0 (10 matrices) and Gamma1 (5), weights 4 and 6, M=300: worst rel err {worst:.1e}; failing: {', '.join(bad) or 'none'}"
    assert record(3, ok, detail), detail


# -- 4. internal consistency oracles ------------------------------------------------------


def _points(rng, n, guard=0.1):
    out = []
    while len(out) < n:
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.5))
        z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.6, 0.6))
        if lattice_distance(z, tau) >= guard:
            out.append((z, tau))
    return out


def test_criterion_4_internal_oracles():
    rng = np.random.default_rng(2024)
    errs = {}

    pts = _points(rng, 100)
    errs["theta series/product"] = (max(rel(theta(j, z, t, "series"), theta(j, z, t, "product")) for z, t in pts for j in (1, 2, 3, 4)), 1e-12)

    pts = _points(rng, 20)
    errs["wp theta/lattice M=400"] = (max(rel(weierstrass_p(z, t), weierstrass_p(z, t, "lattice", cutoff=400)) for z, t in pts), 1e-4)

    taus = [t for _, t in _points(rng, 4)]
    e_err = 0.0
    for t in taus:
        for k in (2, 3):
            e_err = max(e_err, rel(E2k_classical(k, t), E2k_classical(k, t, "lattice", cutoff=300)))
        for name in CHARS.values():
            for w in (4, 6):
                chi = character_by_name(name)
                e_err = max(e_err, rel(eisenstein_E_lattice(chi, w, t, M=300), eisenstein_E_qexp(chi, w, t)))
    errs["E_2k lattice/q-expansion"] = (e_err, 1e-6)

    taus = [t for _, t in _points(rng, 50)]
    eta_err = max(
        max(rel(dedekind_eta(-1 / t), cmath.sqrt(-1j * t) * dedekind_eta(t)), rel(dedekind_eta(t + 1), cmath.exp(1j * math.pi / 12) * dedekind_eta(t)))
        for t in taus
    )
    errs["eta transformation"] = (eta_err, 1e-12)

    errs["B_l derivative/L-value"] = (
        max(rel(cot_coefficient_B(character_by_name(n), l, "derivative"), cot_coefficient_B(character_by_name(n), l, "Lvalue")) for n in CHARS.values() for l in (1, 3)),
        1e-9,
    )

    t_err = 0.0
    for name in CHARS.values():
        chi = character_by_name(name)
        for t in taus[:3]:
            c = taylor_coefficients(lambda z: g_twisted(z, t, chi), 4, radius=0.4)
            for k in (0, 1):
                t_err = max(t_err, rel(c[2 * k + 1], -eisenstein_E_qexp(chi, 2 * k + 2, t)))
    errs["Taylor fit of g vs -E_{2k+2}"] = (t_err, 1e-6)

    bad = [k for k, (e, tol) in errs.items() if not e <= tol]
    for k, (e, tol) in errs.items():
        print(f"  {k}: {e:.2e} (tol {tol:.0e})")
    detail = "; ".join(f"{k} {e:.1e}" for k, (e, _) in errs.items())
    assert record(4, not bad, detail + (f"; failing: {', '.join(bad)}" if bad else "")), bad


# -- 5. character algebra ----------------------------------------------------------------

# the psi10 Gauss sums g_0, ..., g_9 as printed, in units of sqrt5
PRINTED_PSI10_TABLE = [0, 1, -1, -1, 1, 0, -1, -1, 1, 1]


def test_criterion_5_character_algebra():
    problems = []
    for N in range(1, 51):
        chars = enumerate_characters(N)
        units = [a for a in range(N) if math.gcd(a, N) == 1]
        for chi in chars:
            if any(chi.value(a * b) != chi.value(a) * chi.value(b) for a in range(N) for b in range(N)):
                problems.append(f"multiplicativity mod {N}")
            if induce(restrict(chi), N) != chi or N % chi.conductor:
                problems.append(f"conductor round trip mod {N}")
        for i, chi in enumerate(chars):
            for j, psi in enumerate(chars):
                s = sum((chi.value(a) * psi.value(a).conjugate() for a in units), AlgebraicValue.zero())
                if s != (len(units) if i == j else 0):
                    problems.append(f"orthogonality mod {N}")
    for N in range(1, 25):
        for chi in enumerate_characters(N):
            if chi.is_primitive:
                g1 = gauss_sum(chi, 1)
                if any(gauss_sum(chi, n) != chi.value(n).conjugate() * g1 for n in range(N)):
                    problems.append(f"Gauss primitivity mod {N}")

    psi = character_by_name("psi10")
    root5 = AlgebraicValue.sqrt_discriminant(5)
    table_mismatch = [n for n in range(10) if gauss_sum(psi, n) != root5 * PRINTED_PSI10_TABLE[n]]
    for n in table_mismatch:
        print(f"  g_{n}(psi10): computed {gauss_sum(psi, n)}, printed {PRINTED_PSI10_TABLE[n]}*sqrt(5)")
    algebra = "algebra for N<=50 and Gauss primitivity for N<=24 " + ("hold" if not problems else "broken: " + ", ".join(sorted(set(problems))))
    table = "psi10 table matches" if not table_mismatch else f"psi10 printed table differs at n = {', '.join(map(str, table_mismatch))}"
    ok = not problems and not table_mismatch
    assert record(5, ok, f"{algebra}; {table}"), table
