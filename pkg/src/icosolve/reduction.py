"""Tschirnhaus reduction of a monic quintic to principal form, and the
inverse lift of roots.

The principal coefficients are obtained by pure coefficient arithmetic:
power sums of the depressed roots (Newton's identities) are pushed
through ``y = z^2 - a z - b`` and turned back into coefficients.  No
root of the input is ever computed.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import DegenerateReduction, LiftAmbiguity, LiftCollision
from .numeric import DEFAULT_TOLERANCES, Tolerances, as_complex, coefficient_scale, polyval


# Smallest |p| (relative to the coefficient scale) for which the
# quadratic step is attempted.
CONDITIONING_FLOOR = 1e-5


@dataclass(frozen=True)
class GeneralQuintic:
    """Monic ``x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0``."""

    c4: complex
    c3: complex
    c2: complex
    c1: complex
    c0: complex

    def __post_init__(self):
        for name in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, as_complex(getattr(self, name), name))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[complex]) -> "GeneralQuintic":
        """From ``[1, c4, c3, c2, c1, c0]`` or ``[c4, ..., c0]``; a non-unit lead is divided out."""
        coeffs = [complex(c) for c in coeffs]
        if len(coeffs) == 6:
            lead = coeffs.pop(0)
            if lead == 0:
                raise ValueError("leading coefficient is zero: not a quintic")
            coeffs = [c / lead for c in coeffs]
        if len(coeffs) != 5:
            raise ValueError(f"expected 5 or 6 coefficients, got {len(coeffs)}")
        return cls(*coeffs)

    def coefficients(self) -> list:
        return [1 + 0j, self.c4, self.c3, self.c2, self.c1, self.c0]

    def __call__(self, x: complex) -> complex:
        return polyval(self.coefficients(), x)


@dataclass(frozen=True)
class DepressedQuintic:
    """``z^5 + p z^3 + q z^2 + r z + s``."""

    p: complex
    q: complex
    r_coef: complex
    s_coef: complex

    def coefficients(self) -> list:
        return [1 + 0j, 0j, self.p, self.q, self.r_coef, self.s_coef]

    def __call__(self, z: complex) -> complex:
        return polyval(self.coefficients(), z)


@dataclass(frozen=True)
class PrincipalQuintic:
    """``y^5 + 5 alpha y^2 + 5 beta y + gamma``."""

    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_complex(getattr(self, name), name))

    def coefficients(self) -> list:
        return [1 + 0j, 0j, 0j, 5 * self.alpha, 5 * self.beta, self.gamma]

    def __call__(self, y: complex) -> complex:
        y2 = y * y
        return y2 * y2 * y + 5 * self.alpha * y2 + 5 * self.beta * y + self.gamma

    @property
    def scale(self) -> float:
        return coefficient_scale((self.alpha, self.beta, self.gamma))


@dataclass(frozen=True)
class TschirnhausRecord:
    """Everything needed to map principal roots back: ``y = z^2 - a z - b``, ``z = x + shift``.

    ``identity`` marks a depressed quintic that was already principal;
    then ``y = z`` and ``a``, ``b``, ``delta`` are unused.
    """

    shift: complex
    a: complex
    b: complex
    delta: complex
    delta_branch: int = 1
    identity: bool = False


def taylor_shift(coeffs: Sequence[complex], h: complex) -> list:
    """Coefficients of ``P(t + h)`` given those of ``P(t)`` (highest first)."""
    out = [complex(c) for c in coeffs]
    n = len(out) - 1
    # repeated synthetic division by (t - h)
    for i in range(n):
        for j in range(1, n - i + 1):
            out[j] += h * out[j - 1]
    return out


def depress(g: GeneralQuintic) -> tuple:
    """Remove the quartic term with ``z = x + c4/5``; returns ``(DepressedQuintic, shift)``."""
    shift = g.c4 / 5
    c = taylor_shift(g.coefficients(), -shift)
    return DepressedQuintic(c[2], c[3], c[4], c[5]), shift


def power_sums(coeffs: Sequence[complex], kmax: int) -> list:
    """Power sums ``P_0..P_kmax`` of the roots of a monic polynomial (Newton's identities)."""
    n = len(coeffs) - 1
    c = [complex(x) for x in coeffs]
    P = [complex(n)]
    for k in range(1, kmax + 1):
        acc = sum((c[i] * P[k - i] for i in range(1, min(k - 1, n) + 1)), 0j)
        if k <= n:
            acc += k * c[k]
        P.append(-acc)
    return P


def coefficients_from_power_sums(P: Sequence[complex], n: int) -> list:
    """Monic coefficients (highest first) of the degree-``n`` polynomial with power sums ``P``."""
    c = [1 + 0j]
    for k in range(1, n + 1):
        acc = P[k]
        for i in range(1, k):
            acc += c[i] * P[k - i]
        c.append(-acc / k)
    return c


def _transported_power_sums(P, a, b, kmax):
    # sum_i (z_i^2 - a z_i - b)^k expanded by the trinomial theorem
    S = [P[0]]
    for k in range(1, kmax + 1):
        total = 0j
        for i in range(k + 1):
            for j in range(k - i + 1):
                m = k - i - j
                weight = factorial(k) // (factorial(i) * factorial(j) * factorial(m))
                total += weight * (-a) ** j * (-b) ** m * P[2 * i + j]
        S.append(total)
    return S


def delta_squared(d: DepressedQuintic) -> complex:
    p, q, r = d.p, d.q, d.r_coef
    return 9 * q * q / (4 * p * p) + 3 * p / 5 - 2 * r / p


def principalize(
    d: DepressedQuintic, tol: Tolerances = DEFAULT_TOLERANCES, delta_branch: int = 1
) -> tuple:
    """Quadratic Tschirnhaus step to ``y^5 + 5 alpha y^2 + 5 beta y + gamma``.

    A quintic with ``p`` at rounding level is returned as is.  Below
    ``CONDITIONING_FLOOR`` (relative) the step is refused with
    :class:`DegenerateReduction`: its error grows like ``1/p^2``.

    ``b = -2p/5`` and ``a = 3q/(2p) + delta_branch * delta`` make the first
    two power sums of the images vanish.  Returns ``(PrincipalQuintic,
    TschirnhausRecord)``; the record's shift is 0 (set by the caller).
    """
    if delta_branch not in (1, -1):
        raise ValueError("delta_branch must be +1 or -1")
    p, q = d.p, d.q
    scale = coefficient_scale(d.coefficients())
    if abs(p) <= tol.degeneracy_tol * scale:
        # no cubic term: already principal, the identity map will do
        record = TschirnhausRecord(0j, 0j, 0j, 0j, delta_branch, identity=True)
        return PrincipalQuintic(q / 5, d.r_coef / 5, d.s_coef), record
    if abs(p) <= CONDITIONING_FLOOR * scale:
        raise DegenerateReduction(
            f"|p| = {abs(p):.3g} is too small for the quadratic Tschirnhaus step "
            "(the transformed coefficients lose about 2*log10(1/|p|) digits)"
        )

    delta = cmath.sqrt(delta_squared(d))
    a = 3 * q / (2 * p) + delta_branch * delta
    b = -2 * p / 5
    P = power_sums(d.coefficients(), 10)
    S = _transported_power_sums(P, a, b, 5)
    y = coefficients_from_power_sums(S, 5)
    principal = PrincipalQuintic(y[3] / 5, y[4] / 5, y[5])
    return principal, TschirnhausRecord(0j, a, b, delta, delta_branch)


def lift_roots(
    rec: TschirnhausRecord,
    principal_roots: Sequence[complex],
    d: DepressedQuintic,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list:
    """Map principal roots back to roots of the original quintic.

    Each ``y`` gives two candidates ``z`` from ``z^2 - a z - (b + y) = 0``;
    the one with the smaller ``|d(z)|`` wins, and ``x = z - shift``.
    """
    dscale = coefficient_scale(d.coefficients())
    if rec.identity:
        return [complex(y) - rec.shift for y in principal_roots]
    a, b = rec.a, rec.b
    zs = []
    for y in principal_roots:
        root = cmath.sqrt(a * a + 4 * (b + y))
        candidates = ((a + root) / 2, (a - root) / 2)
        residuals = [abs(d(z)) for z in candidates]
        best = min(range(2), key=residuals.__getitem__)
        if residuals[best] >= tol.residual_tol * dscale:
            raise LiftAmbiguity(
                f"neither lift of y = {y} is a root of the depressed quintic "
                f"(residuals {residuals[0]:.3g}, {residuals[1]:.3g})"
            )
        zs.append(candidates[best])

    # the five lifts must rebuild d itself, not a multiset with repeats
    rebuilt = [1 + 0j]
    for z in zs:
        rebuilt = [c - z * prev for c, prev in zip(rebuilt + [0j], [0j] + rebuilt)]
    mismatch = max(abs(x - y) for x, y in zip(rebuilt, d.coefficients()))
    if mismatch > 1e-6 * dscale:
        raise LiftCollision(f"lifted roots do not form the root multiset of d (coefficient mismatch {mismatch:.3g})")
    return [z - rec.shift for z in zs]


def discriminant(pq: PrincipalQuintic) -> complex:
    """Discriminant of ``y^5 + 5 alpha y^2 + 5 beta y + gamma``."""
    a, b, c = pq.alpha, pq.beta, pq.gamma
    a2 = a * a
    b2 = b * b
    return 3125 * (
        108 * a2 * a2 * a * c
        - 135 * a2 * a2 * b2
        + 90 * a2 * b * c * c
        - 320 * a * b2 * b * c
        + 256 * b2 * b2 * b
        + c * c * c * c
    )


def reciprocal_transform(g: GeneralQuintic, tau: complex) -> GeneralQuintic:
    """Monic quintic whose roots are ``1/(x_i - tau)`` for the roots ``x_i`` of ``g``."""
    shifted = taylor_shift(g.coefficients(), tau)  # g(t + tau)
    reversed_coeffs = shifted[::-1]  # u^5 g(tau + 1/u)
    if abs(reversed_coeffs[0]) == 0:
        raise DegenerateReduction(f"tau = {tau} is a root of g; pick another pre-shift")
    return GeneralQuintic.from_coefficients(reversed_coeffs)


__all__ = [
    "GeneralQuintic", "DepressedQuintic", "PrincipalQuintic", "TschirnhausRecord",
    "taylor_shift", "depress", "power_sums", "coefficients_from_power_sums",
    "delta_squared", "principalize", "lift_roots", "discriminant", "reciprocal_transform",
]
