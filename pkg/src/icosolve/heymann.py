"""Heymann resolvent chain: principal coefficients -> (r, s, p, q, h1, h2, J).

Roots ``y`` are sought as ``y = p*eta1 + q*eta2`` where ``eta1, eta2``
solve the eta-resolvents ``h*eta^5 - 10 eta^2 + 15 eta - 6 = 0`` with
``h1 + h2 = 1``.  Both roots of the central quadratic are exposed;
choosing between them is the solver's business.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import BranchInconsistency, DegenerateCoefficients
from .numeric import DEFAULT_TOLERANCES, Tolerances


@dataclass(frozen=True)
class ResolventData:
    r: complex
    s: complex
    p: complex
    q: complex
    h1: complex
    h2: complex
    J: complex


def quadratic_coefficients(alpha, beta, gamma) -> tuple:
    """``(A, B, C)`` of ``A u^2 + B u + C = 0`` in ``u = 12 r``."""
    a2 = alpha * alpha
    A = a2 * a2 + alpha * beta * gamma - beta * beta * beta
    B = -(2 * a2 * alpha * gamma + 11 * a2 * beta * beta + beta * gamma * gamma)
    c = alpha * gamma - 8 * beta * beta
    return A, B, c * c


def normalized_discriminant(alpha, beta, gamma) -> complex:
    """Discriminant of the central quadratic after dividing it through by beta.

    Equals ``Delta / 3125`` identically; the raw ``B^2 - 4AC`` carries an
    extra factor ``beta^2``.
    """
    A, B, C = quadratic_coefficients(alpha, beta, gamma)
    return (B * B - 4 * A * C) / (beta * beta)


def resolvent_r(alpha, beta, gamma, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple:
    """Roots ``r`` of the central quadratic, larger ``|12 r|`` first.

    Uses the cancellation-free form: the larger root from the quadratic
    formula with the sign matched to ``B``, the smaller from Vieta.  When
    the leading coefficient vanishes (as it does for Euler-form
    coefficients) the single root of the remaining linear equation is
    returned as a 1-tuple.
    """
    A, B, C = quadratic_coefficients(alpha, beta, gamma)
    if abs(A) <= tol.degeneracy_tol:
        if abs(B) <= tol.degeneracy_tol:
            raise DegenerateCoefficients("central quadratic degenerates to a constant")
        return (-C / B / 12,)
    D = cmath.sqrt(B * B - 4 * A * C)
    if (B.conjugate() * D).real >= 0:
        big = -(B + D) / 2
    else:
        big = -(B - D) / 2
    if big == 0:
        return (0j, 0j)
    return (big / A / 12, C / big / 12)


def s_from_r(alpha, beta, gamma, r, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Solve ``12 alpha r + 6 beta s - gamma = 0`` for ``s``."""
    if abs(beta) <= tol.degeneracy_tol:
        raise DegenerateCoefficients("beta ~ 0: s is undetermined and J degenerates")
    return (gamma - 12 * alpha * r) / (6 * beta)


def pq_from_rs(r, s, sqrt_sign: int = 1) -> tuple:
    """Invert ``r = (p - q)^2``, ``s = p + q``."""
    if sqrt_sign not in (1, -1):
        raise ValueError("sqrt_sign must be +1 or -1")
    root = sqrt_sign * cmath.sqrt(r)
    return (s + root) / 2, (s - root) / 2


def h_params(p, q, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple:
    """``(h1, h2)`` from the smooth r, s formulas with ``sqrt(r) := p - q``.

    The shared square root makes the pairing with ``(p, q)`` structural;
    ``h1 + h2 = 1`` certifies it.
    """
    s = p + q
    root = p - q
    den1 = 6 * alpha * (s + 3 * root) - 8 * beta
    den2 = 6 * alpha * (s - 3 * root) - 8 * beta
    if abs(den1) <= tol.degeneracy_tol or abs(den2) <= tol.degeneracy_tol:
        raise DegenerateCoefficients("vanishing denominator in the h1/h2 formulas")
    h1 = -9 * (s + root) ** 3 * root / den1
    h2 = 9 * (s - root) ** 3 * root / den2
    defect = abs(h1 + h2 - 1)
    if defect > 1e-6:
        raise BranchInconsistency(f"h1 + h2 - 1 = {defect:.3g}: sqrt(r) is paired with the wrong (p, q)")
    return h1, h2


def h_params_direct(p, q, alpha, beta) -> tuple:
    """The same pair written directly in ``p, q`` (cross-check only)."""
    h1 = -18 * p ** 3 * (p - q) / (3 * alpha * (2 * p - q) - 2 * beta)
    h2 = -18 * q ** 3 * (p - q) / (3 * alpha * (p - 2 * q) + 2 * beta)
    return h1, h2


def J_param(p, q, alpha, beta, gamma, r, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Icosahedral parameter ``J = 4 h1 h2`` through the product relation."""
    den = 12 * (alpha * gamma - beta * beta) * r - gamma * gamma
    if abs(den) <= tol.degeneracy_tol:
        raise DegenerateCoefficients("vanishing denominator in the h1*h2 product relation")
    pq = p * q
    return 4 * 432 * beta * pq * pq * pq / den


def forward_map(p, q, h1, h2) -> tuple:
    """``(p, q, h1, h2) -> (alpha, beta, gamma)``, the coefficients the resolvent chain inverts."""
    if h1 == 0 or h2 == 0:
        raise ZeroDivisionError("h1 and h2 must be non-zero")
    u = p ** 3 / h1
    v = q ** 3 / h2
    alpha = -2 * (u + v)
    beta = 3 * (u * (p - 2 * q) - v * (2 * p - q))
    gamma = -6 * (u * (p * p - 5 * p * q + 10 * q * q) + v * (10 * p * p - 5 * p * q + q * q))
    return alpha, beta, gamma


def simultaneous_resolvent_MNPQR(p, q, h1, h2, alpha, beta, gamma) -> tuple:
    """Coefficients of ``M eta1^2 + N eta2^2 + P eta1 + Q eta2 + R``."""
    hh = h1 * h2
    p2, q2 = p * p, q * q
    p3, q3 = p2 * p, q2 * q
    p4, q4 = p2 * p2, q2 * q2
    M = 5 * p2 * (2 * h2 * p3 + 2 * h1 * q3 + alpha * hh)
    N = 5 * q2 * (2 * h1 * q3 + 2 * h2 * p3 + alpha * hh)
    P = 5 * p * (-3 * h2 * p4 + 10 * h2 * p3 * q + 6 * h1 * p * q3 + h1 * q4 + 2 * alpha * hh * q + beta * hh)
    Q = 5 * q * (-3 * h1 * q4 + 10 * h1 * q3 * p + 6 * h2 * q * p3 + h2 * p4 + 2 * alpha * hh * p + beta * hh)
    R = 6 * (
        h2 * p4 * p - 5 * h2 * p4 * q + 10 * h2 * q2 * p3 + 10 * h1 * p2 * q3 - 5 * h1 * p * q4 + h1 * q4 * q
    ) + gamma * hh
    return M, N, P, Q, R


def eta_resolvent(h, eta) -> complex:
    """``h eta^5 - 10 eta^2 + 15 eta - 6``."""
    e2 = eta * eta
    return h * e2 * e2 * eta - 10 * e2 + 15 * eta - 6


def resolve_chain(alpha, beta, gamma, r, tol: Tolerances = DEFAULT_TOLERANCES) -> ResolventData:
    """Run ``r -> s -> (p, q) -> (h1, h2) -> J`` for one root of the central quadratic.

    ``J`` comes from the product relation and is cross-checked against
    ``4 h1 h2``.
    """
    s = s_from_r(alpha, beta, gamma, r, tol)
    p, q = pq_from_rs(r, s, 1)
    h1, h2 = h_params(p, q, alpha, beta, tol)
    J = J_param(p, q, alpha, beta, gamma, r, tol)
    direct = 4 * h1 * h2
    if abs(J - direct) > 1e-6 * max(1.0, abs(J)):
        raise BranchInconsistency(f"J = {J} disagrees with 4 h1 h2 = {direct}")
    return ResolventData(r, s, p, q, h1, h2, J)
