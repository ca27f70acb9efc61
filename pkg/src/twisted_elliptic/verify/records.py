"""Catalog entries, sampling domains and verification reports."""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

KINDS = ("exact_qseries", "pointwise_z", "modular", "limit_q0")


@dataclass(frozen=True)
class SamplePoint:
    """A random evaluation point: z (or several z's) and tau."""

    z: complex
    tau: complex
    extra: tuple[complex, ...] = ()

    @property
    def zs(self) -> tuple[complex, ...]:
        return (self.z,) + self.extra

    def to_json(self) -> dict:
        out = {"z": [self.z.real, self.z.imag], "tau": [self.tau.real, self.tau.imag]}
        if self.extra:
            out["extra"] = [[w.real, w.imag] for w in self.extra]
        return out


@dataclass(frozen=True)
class SampleDomain:
    """Where random points are drawn.

    z is uniform in a disc of radius z_radius (optionally restricted to a band
    of imaginary parts); tau has Im in tau_imag and Re in tau_real.  Each
    (step, offset) in ``avoid`` excludes a neighbourhood of offset + step*Z.
    ``guard`` is an extra predicate a point must satisfy.
    """

    z_radius: float = 1.0
    z_imag: tuple[float, float] | None = None
    n_z: int = 1
    tau_imag: tuple[float, float] = (0.8, 1.5)
    tau_real: tuple[float, float] = (-0.5, 0.5)
    avoid: tuple[tuple[float, float], ...] = ()
    guard: Callable[[SamplePoint], bool] | None = None

    def _draw_z(self, rng: np.random.Generator) -> complex:
        if self.z_imag is not None:
            lo, hi = self.z_imag
            return complex(rng.uniform(-self.z_radius, self.z_radius), rng.uniform(lo, hi))
        r = self.z_radius * math.sqrt(rng.uniform())
        phi = rng.uniform(0, 2 * math.pi)
        return complex(r * math.cos(phi), r * math.sin(phi))

    def _clear(self, z: complex, rho: float) -> bool:
        for step, offset in self.avoid:
            k = round((z.real - offset) / step)
            if abs(z - (offset + k * step)) < rho:
                return False
        return True

    def draw(self, rng: np.random.Generator, rho: float, max_tries: int = 10_000) -> SamplePoint:
        for _ in range(max_tries):
            tau = complex(rng.uniform(*self.tau_real), rng.uniform(*self.tau_imag))
            zs = [self._draw_z(rng) for _ in range(self.n_z)]
            if not all(self._clear(z, rho) for z in zs):
                continue
            p = SamplePoint(zs[0], tau, tuple(zs[1:]))
            if self.guard is None or self.guard(p):
                return p
        raise RuntimeError("could not draw a sample point clear of the excluded set")


@dataclass(frozen=True)
class Case:
    """One instance of an identity: two or more sides that must agree.

    For exact records each side maps an order T to a FormalSeries; for
    pointwise records each side maps a SamplePoint to a complex number.
    """

    label: str
    sides: tuple[Callable, ...]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    kind: str
    statement: str
    cases: tuple[Case, ...] = ()
    tolerance: float = 1e-9
    order: int = 200
    domain: SampleDomain = SampleDomain()
    as_printed: bool = False
    note: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    def summary(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "statement": self.statement,
            "cases": [c.label for c in self.cases],
            "tolerance": self.tolerance,
            "order": self.order,
            "as_printed": self.as_printed,
            "note": self.note,
        }


def record_rng(seed: int, record_id: str) -> np.random.Generator:
    """Per-record generator, independent of catalog order."""
    return np.random.default_rng([seed, zlib.crc32(record_id.encode())])


@dataclass
class VerificationReport:
    id: str
    kind: str
    status: str
    seed: int
    elapsed_ms: float = 0.0
    witness: dict | None = None
    max_rel_err: float | None = None
    samples: int | None = None
    order: int | None = None
    tolerance: float | None = None
    as_printed: bool = False
    cases: list[dict] = field(default_factory=list)
    points: list[dict] | None = None
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "kind": self.kind, "status": self.status}
        if self.as_printed:
            out["flag"] = "as-printed"
        for key in ("witness", "max_rel_err", "samples", "order", "tolerance"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out["cases"] = self.cases
        if self.points is not None:
            out["points"] = self.points
        out["seed"] = self.seed
        out["config"] = self.config
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out
