"""Running catalog records: exact comparison, random sampling, modular checks."""

from __future__ import annotations

import fnmatch
import math
import time
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from ..analytic import eisenstein_E_lattice, eisenstein_F_lattice
from ..characters import DirichletCharacter
from ..qseries import compare_series
from .records import KINDS, IdentityRecord, SampleDomain, VerificationReport, record_rng


@dataclass(frozen=True)
class VerifyConfig:
    order: int | None = None
    samples: int = 20
    seed: int = 0
    tolerance: float | None = None
    lattice_cutoff: int = 300
    gamma0_matrices: int = 10
    gamma1_matrices: int = 5
    exclusion: float = 0.05

    def to_json(self) -> dict:
        return asdict(self)


DEFAULT_VERIFY = VerifyConfig()


def relative_error(a: complex, b: complex) -> float:
    big = max(abs(a), abs(b))
    if big == 0:
        return 0.0
    return abs(a - b) / big


def verify_exact(record: IdentityRecord, T: int | None = None, config: VerifyConfig = DEFAULT_VERIFY) -> VerificationReport:
    """Expand every side of every case to order T and compare exactly."""
    if record.kind != "exact_qseries":
        raise ValueError(f"{record.id} is a {record.kind} record, not exact_qseries")
    T = T or config.order or record.order
    start = time.perf_counter()
    cases = []
    witness = None
    for case in record.cases:
        series = [side(T) for side in case.sides]
        mismatch = None
        for idx, other in enumerate(series[1:], start=1):
            mismatch = compare_series(series[0], other, T)
            if mismatch is not None:
                mismatch_json = {"case": case.label, "side": idx, **mismatch.to_json()}
                break
        if mismatch is None:
            cases.append({"label": case.label, "status": "pass"})
        else:
            cases.append({"label": case.label, "status": "fail", "witness": mismatch_json})
            witness = witness or mismatch_json
    status = "pass" if witness is None else "fail"
    return VerificationReport(
        id=record.id,
        kind=record.kind,
        status=status,
        seed=config.seed,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        witness=witness,
        order=T,
        as_printed=record.as_printed,
        cases=cases,
        config=config.to_json(),
    )


def verify_pointwise(
    record: IdentityRecord, n_samples: int | None = None, tolerance: float | None = None, config: VerifyConfig = DEFAULT_VERIFY
) -> VerificationReport:
    """Evaluate all sides at seeded random points; pass iff the worst relative error is within tolerance."""
    if record.kind not in ("pointwise_z", "limit_q0"):
        raise ValueError(f"{record.id} is a {record.kind} record, not pointwise")
    n = config.samples if n_samples is None else n_samples
    tol = tolerance or config.tolerance or record.tolerance
    rng = record_rng(config.seed, record.id)
    start = time.perf_counter()
    points = [record.domain.draw(rng, config.exclusion) for _ in range(n)]
    worst = 0.0
    witness = None
    cases = []
    for case in record.cases:
        case_worst = 0.0
        case_witness = None
        for p in points:
            vals = [complex(side(p)) for side in case.sides]
            for v in vals[1:]:
                err = relative_error(vals[0], v)
                if not math.isfinite(err):
                    err = math.inf
                if case_witness is None or err > case_worst:
                    case_worst = err
                    case_witness = {
                        "case": case.label,
                        "point": p.to_json(),
                        "lhs": [vals[0].real, vals[0].imag],
                        "rhs": [v.real, v.imag],
                        "rel_err": err,
                    }
        ok = case_worst <= tol
        cases.append({"label": case.label, "status": "pass" if ok else "fail", "max_rel_err": case_worst})
        if case_witness is not None and (witness is None or case_worst > worst):
            witness = case_witness
        worst = max(worst, case_worst)
    status = "pass" if worst <= tol else "fail"
    if n == 0:
        status = "skipped"
    return VerificationReport(
        id=record.id,
        kind=record.kind,
        status=status,
        seed=config.seed,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        witness=witness,
        max_rel_err=worst,
        samples=n,
        tolerance=tol,
        as_printed=record.as_printed,
        cases=cases,
        points=[p.to_json() for p in points],
        config=config.to_json(),
    )


# ---------------------------------------------------------------------------
# modular transformations


def random_congruence_matrix(
    rng: np.random.Generator, N: int, group: str = "gamma0", bound: int = 50, max_tries: int = 100_000
) -> tuple[int, int, int, int]:
    """Rejection-sample (a, b, c, d) with ad - bc = 1, N | c, c != 0, all |entries| <= bound.

    For group 'gamma1' additionally a = d = 1 (mod N).
    """
    if group not in ("gamma0", "gamma1"):
        raise ValueError("group must be 'gamma0' or 'gamma1'")
    cmax = bound // N
    if cmax < 1:
        raise ValueError("no nonzero multiple of N fits within the entry bound")
    for _ in range(max_tries):
        c = N * int(rng.integers(1, cmax + 1)) * (1 if rng.uniform() < 0.5 else -1)
        d = int(rng.integers(-bound, bound + 1))
        if math.gcd(c, d) != 1:
            continue
        a0 = pow(d, -1, abs(c))  # a d = 1 (mod c)
        first = -bound + (a0 + bound) % abs(c)
        choices = list(range(first, bound + 1, abs(c)))
        rng.shuffle(choices)
        for a in choices:
            if (a * d - 1) % c:
                continue
            b = (a * d - 1) // c
            if abs(b) > bound:
                continue
            if group == "gamma1" and (a % N != 1 % N or d % N != 1 % N):
                continue
            return a, b, c, d
    raise RuntimeError(f"could not generate a {group}({N}) matrix within |entries| <= {bound}")


def verify_modular(
    chi: DirichletCharacter,
    weight: int,
    group: str = "gamma0",
    which: str = "E",
    n_matrices: int = 10,
    tolerance: float = 1e-5,
    seed: int = 0,
    cutoff: int = 300,
    label: str | None = None,
    domain: SampleDomain = SampleDomain(),
) -> VerificationReport:
    """Ratio test of the transformation law under random Gamma_0(N) or Gamma_1(N) matrices.

    The measured multiplier E(g tau) / ((c tau + d)^{2k} E(tau)) is compared
    with the predicted conj(chi(a)) for E and chi(a) for F (1 on Gamma_1).
    """
    if which not in ("E", "F"):
        raise ValueError("which must be 'E' or 'F'")
    N = chi.modulus
    f = eisenstein_E_lattice if which == "E" else eisenstein_F_lattice
    rid = label or f"modular.{which}.{group}.N{N}.w{weight}"
    rng = record_rng(seed, rid)
    start = time.perf_counter()
    worst = 0.0
    witness = None
    rows = []
    for _ in range(n_matrices):
        a, b, c, d = random_congruence_matrix(rng, N, group)
        tau = complex(rng.uniform(*domain.tau_real), rng.uniform(*domain.tau_imag))
        gtau = (a * tau + b) / (c * tau + d)
        lhs = f(chi, weight, gtau, M=cutoff)
        base = (c * tau + d) ** weight * f(chi, weight, tau, M=cutoff)
        measured = lhs / base
        chia = chi(a)
        predicted = chia.conjugate() if which == "E" else chia
        err = max(abs(measured - predicted) / abs(predicted), relative_error(lhs, predicted * base))
        rows.append({"matrix": [a, b, c, d], "tau": [tau.real, tau.imag], "multiplier": [measured.real, measured.imag], "predicted": [predicted.real, predicted.imag], "rel_err": err})
        if err >= worst:
            worst = err
            witness = rows[-1]
    status = "pass" if worst <= tolerance else "fail"
    return VerificationReport(
        id=rid,
        kind="modular",
        status=status,
        seed=seed,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        witness=witness if status == "fail" else None,
        max_rel_err=worst,
        samples=n_matrices,
        tolerance=tolerance,
        cases=rows,
        config={"group": group, "which": which, "weight": weight, "cutoff": cutoff, "modulus": N},
    )


def _verify_modular_record(record: IdentityRecord, config: VerifyConfig) -> VerificationReport:
    start = time.perf_counter()
    tol = config.tolerance or record.tolerance
    group = record.params["group"]
    n = config.gamma0_matrices if group == "gamma0" else config.gamma1_matrices
    cases = []
    worst = 0.0
    witness = None
    for label, chi, weight in record.params["cases"]:
        rep = verify_modular(
            chi, weight, group, record.params["which"], n, tol, config.seed, config.lattice_cutoff, f"{record.id}[{label}]"
        )
        cases.append({"label": label, "status": rep.status, "max_rel_err": rep.max_rel_err, "matrices": rep.cases})
        if rep.max_rel_err >= worst:
            worst = rep.max_rel_err
            if rep.status == "fail":
                witness = {"case": label, **rep.witness}
    status = "pass" if worst <= tol else "fail"
    return VerificationReport(
        id=record.id,
        kind=record.kind,
        status=status,
        seed=config.seed,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        witness=witness,
        max_rel_err=worst,
        samples=n,
        tolerance=tol,
        as_printed=record.as_printed,
        cases=cases,
        config=config.to_json(),
    )


def verify_record(record: IdentityRecord, config: VerifyConfig = DEFAULT_VERIFY) -> VerificationReport:
    if record.kind == "exact_qseries":
        return verify_exact(record, config=config)
    if record.kind == "modular":
        return _verify_modular_record(record, config)
    return verify_pointwise(record, config=config)


@dataclass
class SuiteResult:
    reports: list[VerificationReport]

    @property
    def exit_status(self) -> int:
        return 1 if any(r.status == "fail" for r in self.reports) else 0

    def summary(self) -> dict:
        per_kind: dict[str, dict[str, int]] = {k: {"pass": 0, "fail": 0, "skipped": 0} for k in KINDS}
        for r in self.reports:
            per_kind[r.kind][r.status] += 1
        return {
            "total": len(self.reports),
            "passed": sum(r.status == "pass" for r in self.reports),
            "failed": sum(r.status == "fail" for r in self.reports),
            "skipped": sum(r.status == "skipped" for r in self.reports),
            "per_kind": per_kind,
        }

    def to_json(self, timing: bool = True) -> dict:
        return {"summary": self.summary(), "reports": [r.to_json(timing) for r in self.reports]}

    def table(self) -> str:
        lines = [f"{'id':34} {'kind':13} {'status':7} detail"]
        for r in self.reports:
            if r.kind == "exact_qseries":
                if r.witness:
                    w = r.witness
                    detail = f"order {r.order}; first mismatch at q^{w['exponent']} [{w['case']}]: {w['lhs']} vs {w['rhs']}"
                else:
                    detail = f"order {r.order}"
            else:
                detail = f"max rel err {r.max_rel_err:.2e} (tol {r.tolerance:.0e}, n={r.samples})"
            flag = " [as-printed]" if r.as_printed and r.status == "fail" else ""
            lines.append(f"{r.id:34} {r.kind:13} {r.status:7} {detail}{flag}")
        s = self.summary()
        lines.append(f"{s['total']} records: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped")
        return "\n".join(lines)


def select(records: Iterable[IdentityRecord], pattern: str | None) -> list[IdentityRecord]:
    if not pattern:
        return list(records)
    pats = [p.strip() for p in pattern.split(",") if p.strip()]
    return [r for r in records if any(fnmatch.fnmatchcase(r.id, p) for p in pats)]


def run_suite(pattern: str | None = None, config: VerifyConfig = DEFAULT_VERIFY, records: Iterable[IdentityRecord] | None = None) -> SuiteResult:
    """Verify every record whose id matches the glob pattern(s), ordered by id."""
    if records is None:
        from .catalog import catalog

        records = catalog()
    chosen = sorted(select(records, pattern), key=lambda r: r.id)
    return SuiteResult([verify_record(r, config) for r in chosen])
