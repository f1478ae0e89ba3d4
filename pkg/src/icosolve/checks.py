"""Seeded property sweeps over the invariant forms and the hypergeometric layer."""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field

from .errors import IcosolveError
from .hypergeo import IDENTITY_RADIUS, Y_of_J, gauss_2f1, identity_residuals
from .invariants import EPSILON, J_of, syzygy_residual
from .numeric import DEFAULT_TOLERANCES, Tolerances

SYZYGY_LIMIT = 1e-10
INVARIANCE_LIMIT = 1e-8
IDENTITY_LIMIT = 1e-8
CONTIGUITY_LIMIT = 1e-10
LOOP_LIMIT = 1e-8


@dataclass
class SweepReport:
    name: str
    limit: float
    points: int = 0
    failures: int = 0
    worst: float = 0.0
    errors: list = field(default_factory=list)

    def record(self, value: float):
        self.points += 1
        if not value < self.limit:
            self.failures += 1
        if value > self.worst or math.isnan(value):
            self.worst = value

    def error(self, exc: Exception):
        self.points += 1
        self.failures += 1
        self.errors.append(f"{type(exc).__name__}: {exc}")

    @property
    def passed(self) -> bool:
        return self.points > 0 and self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "limit": self.limit,
            "points": self.points,
            "failures": self.failures,
            "worst": self.worst,
            "passed": self.passed,
            "errors": list(self.errors),
        }


def _disk_point(rng: random.Random, radius: float, inner: float = 0.0) -> complex:
    # uniform in the annulus inner <= |z| <= radius
    r = math.sqrt(rng.uniform(inner * inner, radius * radius))
    return cmath.rect(r, rng.uniform(-math.pi, math.pi))


def sweep_syzygy(rng, points, tol=DEFAULT_TOLERANCES):
    report = SweepReport("syzygy", SYZYGY_LIMIT)
    for _ in range(points):
        report.record(syzygy_residual(_disk_point(rng, 2.0)))
    return report


def sweep_J_invariance(rng, points, tol=DEFAULT_TOLERANCES):
    """J is unchanged by the rotations ``z -> eps z`` and ``z -> -1/z``."""
    report = SweepReport("J_invariance", INVARIANCE_LIMIT)
    for _ in range(points):
        z = _disk_point(rng, 2.0, 0.5)
        try:
            J = J_of(z, 1, tol)
            moved = (J_of(EPSILON * z, 1, tol), J_of(-1 / z, 1, tol))
        except IcosolveError as exc:
            report.error(exc)
            continue
        report.record(max(abs(m - J) for m in moved) / max(1.0, abs(J)))
    return report


def sweep_identities(rng, points, tol=DEFAULT_TOLERANCES):
    report = SweepReport("identities", IDENTITY_LIMIT)
    for _ in range(points):
        x = _disk_point(rng, IDENTITY_RADIUS)
        try:
            report.record(max(identity_residuals(x, tol)))
        except IcosolveError as exc:
            report.error(exc)
    return report


def contiguity_residual(a, b, c, z, tol=DEFAULT_TOLERANCES) -> float:
    """Relative defect of ``c(1-z)F - c F(a-1) + (c-b) z F(c+1) = 0``."""
    terms = (
        c * (1 - z) * gauss_2f1(a, b, c, z, tol),
        -c * gauss_2f1(a - 1, b, c, z, tol),
        (c - b) * z * gauss_2f1(a, b, c + 1, z, tol),
    )
    return abs(sum(terms)) / max(abs(t) for t in terms)


def sweep_contiguity(rng, points, tol=DEFAULT_TOLERANCES):
    report = SweepReport("contiguity", CONTIGUITY_LIMIT)
    for _ in range(points):
        a = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
        b = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
        c = complex(rng.uniform(0.5, 2), rng.uniform(-0.5, 0.5))
        z = _disk_point(rng, 3.0)
        try:
            report.record(contiguity_residual(a, b, c, z, tol))
        except IcosolveError as exc:
            report.error(exc)
    return report


def sweep_loop_closure(rng, points, tol=DEFAULT_TOLERANCES):
    """``J_of(Y_of_J(J)) == J`` for ``|J|`` in [1.5, 50]."""
    report = SweepReport("loop_closure", LOOP_LIMIT)
    for _ in range(points):
        J = cmath.rect(rng.uniform(1.5, 50), rng.uniform(-math.pi, math.pi))
        try:
            report.record(abs(J_of(Y_of_J(J, tol), 1, tol) - J) / abs(J))
        except IcosolveError as exc:
            report.error(exc)
    return report


SWEEPS = (sweep_syzygy, sweep_J_invariance, sweep_identities, sweep_contiguity, sweep_loop_closure)


def run_sweeps(seed: int = 42, points: int = 200, tol: Tolerances = DEFAULT_TOLERANCES) -> list:
    """Every sweep gets its own generator seeded from ``seed``, so changing
    ``points`` for one run never shifts the samples of another."""
    if points < 1:
        raise ValueError("points must be at least 1")
    return [sweep(random.Random(f"{seed}:{sweep.__name__}"), points, tol) for sweep in SWEEPS]
