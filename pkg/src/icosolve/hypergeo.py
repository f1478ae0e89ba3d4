"""Gauss hypergeometric function for complex argument, and the inverse Y(J)
of the icosahedral covering.

Evaluation strategy for ``2F1(a, b; c; z)`` (principal branch, cut on
``[1, inf)``):

* ``|z| <= 0.6``: the defining power series;
* Pfaff transformation when ``|z/(z-1)| <= 0.6``;
* connection formula around 1 when ``|1-z| <= 0.6`` (needs ``c-a-b``
  non-integer);
* connection formula around infinity when ``|z| >= 1.4`` (needs ``a-b``
  non-integer);
* anywhere else (the band around ``|z| = 1`` near ``exp(+-i*pi/3)``),
  Taylor re-expansion of the hypergeometric ODE stepped along the ray
  from ``z/(2|z|)`` to ``z``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import mpmath

from .errors import NearSingularJ, PoleError, SeriesDivergence, UnreachableRegion
from .numeric import DEFAULT_TOLERANCES, Tolerances, as_complex, principal_nth_root, principal_power

SERIES_RADIUS = 0.6
INVERSION_RADIUS = 1.4

# Parameter triples of the two solutions at J = infinity.
Z_PARAMS = (11 / 60, 31 / 60, 6 / 5)
W_PARAMS = (-1 / 60, 19 / 60, 4 / 5)
# Parameters of the hypergeometric ODE satisfied by those solutions.
ODE_PARAMS = (11 / 60, -1 / 60, 2 / 3)

FIFTH_ROOT_1728 = 1728.0 ** 0.2

# Lanczos-type coefficients (g = 671/128, 14 terms); |rel err| ~ 1e-15.
_LANCZOS_G = 5.24218750000000000
_LANCZOS = (
    57.1562356658629235, -59.5979603554754912, 14.1360979747417471,
    -0.491913816097620199, 0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5,
)


def _is_nonpositive_integer(x: complex) -> bool:
    x = complex(x)
    return x.imag == 0 and x.real <= 0 and x.real == math.floor(x.real)


def _is_integer(x: complex, eps: float = 1e-12) -> bool:
    x = complex(x)
    return abs(x.imag) < eps and abs(x.real - round(x.real)) < eps


def _log_gamma_right(z: complex) -> complex:
    # valid for Re z >= 0.5
    tmp = z + _LANCZOS_G
    tmp = (z + 0.5) * cmath.log(tmp) - tmp
    ser = 0.999999999999997092
    y = z
    for c in _LANCZOS:
        y += 1
        ser += c / y
    return tmp + cmath.log(2.5066282746310005 * ser / z)


def gamma(z: complex) -> complex:
    """Complex gamma function; raises :class:`PoleError` at 0, -1, -2, ..."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1 - z))
    return cmath.exp(_log_gamma_right(z))


def rgamma(z: complex) -> complex:
    """1/gamma(z), zero at the poles."""
    if _is_nonpositive_integer(z):
        return 0j
    return 1 / gamma(z)


@dataclass(frozen=True)
class HypParams:
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_complex(getattr(self, name), name))
        if _is_nonpositive_integer(self.c):
            raise ValueError(f"c = {self.c} is a non-positive integer; the series is undefined")


def _series(a, b, c, z, tol: Tolerances, derivative=False):
    """Partial sums of the defining series (and optionally its derivative)."""
    coef = 1 + 0j
    zn = 1 + 0j  # z**n
    total = 1 + 0j
    dtotal = 0j
    for n in range(tol.max_series_terms):
        coef = coef * (a + n) * (b + n) / ((n + 1) * (c + n))
        dterm = (n + 1) * coef * zn
        dtotal += dterm
        zn = zn * z
        term = coef * zn
        total += term
        if coef == 0:
            return total, dtotal
        done = abs(term) <= tol.series_tol * abs(total)
        if derivative:
            done = done and abs(dterm) <= tol.series_tol * max(abs(dtotal), 1e-300)
        if done and n >= 2:
            return total, dtotal
    raise SeriesDivergence(
        f"2F1 series at z={z} not converged after {tol.max_series_terms} terms"
    )


def _taylor_step(a, b, c, z0, h, F, dF, tol: Tolerances):
    """Advance (F, F') from z0 to z0 + h with the ODE's local Taylor series.

    Coefficients follow from z(1-z)F'' + [c-(a+b+1)z]F' - abF = 0
    rewritten around z0; |h| must stay well inside min(|z0|, |1-z0|).
    """
    A0 = z0 * (1 - z0)
    A1 = 1 - 2 * z0
    B0 = c - (a + b + 1) * z0
    B1 = -(a + b + 1)
    C = -a * b
    c_prev, c_cur = F, dF  # c_k, c_{k+1}
    hk = h  # h**(k+1)
    value = F + dF * h
    deriv = dF
    small = 0
    for k in range(tol.max_series_terms):
        c_next = -((A1 * k + B0) * (k + 1) * c_cur + (-k * (k - 1) + B1 * k + C) * c_prev) / (
            A0 * (k + 2) * (k + 1)
        )
        deriv += (k + 2) * c_next * hk
        hk = hk * h
        term = c_next * hk
        value += term
        if abs(term) <= tol.series_tol * abs(value) and abs((k + 2) * term) <= tol.series_tol * abs(deriv * h):
            small += 1
            if small >= 2:
                return value, deriv
        else:
            small = 0
        c_prev, c_cur = c_cur, c_next
    raise SeriesDivergence(f"ODE Taylor step from {z0} by {h} did not converge")


def _continue_along_ray(a, b, c, z, tol: Tolerances):
    if z.imag == 0 and z.real >= 1:
        raise UnreachableRegion(f"z = {z} lies on the branch cut [1, inf)")
    cur = 0.5 * z / abs(z)
    F, dF = _series(a, b, c, cur, tol, derivative=True)
    while True:
        remaining = z - cur
        if remaining == 0:
            return F
        reach = 0.5 * min(abs(cur), abs(1 - cur))
        last = abs(remaining) <= reach
        h = remaining if last else remaining * (reach / abs(remaining))
        F, dF = _taylor_step(a, b, c, cur, h, F, dF, tol)
        cur = z if last else cur + h


def _pfaff(a, b, c, z, tol):
    return principal_power(1 - z, -a) * _hyp(a, c - b, c, z / (z - 1), tol, "direct")


def _around_one(a, b, c, z, tol):
    s = c - a - b
    if _is_integer(s):
        raise UnreachableRegion(f"c-a-b = {s} is an integer; the 1-z connection formula needs log terms")
    w = 1 - z
    if w == 0 and s.real <= 0:
        raise UnreachableRegion(f"2F1 diverges at z=1 when Re(c-a-b) = {s.real} <= 0")
    gc = gamma(c)
    first = gc * gamma(s) * rgamma(c - a) * rgamma(c - b)
    second = gc * gamma(-s) * rgamma(a) * rgamma(b)
    value = first * _hyp(a, b, 1 - s, w, tol, "direct") if first != 0 else 0j
    if second != 0 and w != 0:
        value += second * principal_power(w, s) * _hyp(c - a, c - b, 1 + s, w, tol, "direct")
    return value


def _around_infinity(a, b, c, z, tol):
    d = a - b
    if _is_integer(d):
        raise UnreachableRegion(f"a-b = {d} is an integer; the 1/z connection formula needs log terms")
    u = 1 / z
    gc = gamma(c)
    first = gc * gamma(-d) * rgamma(b) * rgamma(c - a)
    second = gc * gamma(d) * rgamma(a) * rgamma(c - b)
    value = 0j
    if first != 0:
        value += first * principal_power(-z, -a) * _hyp(a, a - c + 1, 1 + d, u, tol, None)
    if second != 0:
        value += second * principal_power(-z, -b) * _hyp(b, b - c + 1, 1 - d, u, tol, None)
    return value


_METHODS = {
    "direct": lambda a, b, c, z, tol: _series(a, b, c, z, tol)[0],
    "pfaff": _pfaff,
    "one_minus": _around_one,
    "inverse": _around_infinity,
    "taylor": _continue_along_ray,
}


def choose_method(a, b, c, z) -> str:
    """Name of the evaluation strategy :func:`gauss_2f1` would use."""
    if abs(z) <= SERIES_RADIUS:
        return "direct"
    if z != 1 and abs(z / (z - 1)) <= SERIES_RADIUS:
        return "pfaff"
    if abs(1 - z) <= SERIES_RADIUS and not _is_integer(c - a - b):
        return "one_minus"
    if abs(z) >= INVERSION_RADIUS and not _is_integer(a - b):
        return "inverse"
    return "taylor"


def _hyp(a, b, c, z, tol, method):
    if z == 0:
        return 1 + 0j
    if method is None:
        method = choose_method(a, b, c, z)
    return _METHODS[method](a, b, c, z, tol)


def gauss_2f1(a, b, c, z, tol: Tolerances = DEFAULT_TOLERANCES, method: str | None = None) -> complex:
    """Principal-branch value of ``2F1(a, b; c; z)``.

    ``method`` forces one strategy (``"direct"``, ``"pfaff"``,
    ``"one_minus"``, ``"inverse"``, ``"taylor"``); by default the
    cheapest applicable one is chosen.
    """
    params = HypParams(a, b, c)
    z = as_complex(z, "z")
    if method is not None and method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(_METHODS)}")
    return _hyp(params.a, params.b, params.c, z, tol, method)


def identity_polynomial(x: complex) -> complex:
    """``1 - 228x + 494x^2 + 228x^3 + x^4``."""
    return 1 + x * (-228 + x * (494 + x * (228 + x)))


def phi1(x: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Rational map ``1728 x (x^2 - 11x - 1)^5 / (1 - 228x + 494x^2 + 228x^3 + x^4)^3``."""
    x = as_complex(x, "x")
    p = identity_polynomial(x)
    den = p * p * p
    if abs(den) <= tol.degeneracy_tol:
        raise PoleError(f"phi1 has a pole near x = {x}")
    q = x * x - 11 * x - 1
    q2 = q * q
    return 1728 * x * q2 * q2 * q / den


# Radius of the disk around x = 0 on which both identities hold with
# principal branches (checked on rings out to this radius).
IDENTITY_RADIUS = 0.0015


def identity_residuals(x: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple:
    """Relative defects of the two algebraic transformations at ``phi1(x)``.

    Both hold on the sheet reached continuously from ``x = 0``; with
    principal branches that is only a small disk (about ``|x| < 0.0015``)
    because ``phi1`` has a pole at ``x ~ 0.00443``.
    """
    x = as_complex(x, "x")
    z = phi1(x, tol)
    p = identity_polynomial(x)
    lhs_z = gauss_2f1(*Z_PARAMS, z, tol)
    rhs_z = principal_power(p, 11 / 20) / (1 + 11 * x - x * x)
    lhs_w = gauss_2f1(*W_PARAMS, z, tol)
    rhs_w = principal_power(p, -1 / 20)
    return abs(lhs_z - rhs_z) / abs(rhs_z), abs(lhs_w - rhs_w) / abs(rhs_w)


def _fundamental_pair(J, tol):
    u = 1 / J
    return gauss_2f1(*Z_PARAMS, u, tol), gauss_2f1(*W_PARAMS, u, tol)


def s_of_J(J: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Ratio z(J)/w(J) of the fundamental solutions at infinity."""
    J = as_complex(J, "J")
    if J == 0:
        raise NearSingularJ("s(J) is infinite at J = 0")
    fz, fw = _fundamental_pair(J, tol)
    den = principal_nth_root(J, 5) * fw
    if den == 0:
        raise PoleError(f"w(J) vanishes at J = {J}")
    return fz / den


def Y_of_J(J: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """A solution Y of the icosahedral equation ``H^3/(1728 f^5)(Y, 1) = J``."""
    J = as_complex(J, "J")
    if abs(J) < tol.degeneracy_tol:
        raise NearSingularJ(f"J = {J} is at the branch point 0")
    if abs(J - 1) < tol.degeneracy_tol:
        warnings.warn(f"J = {J} is at the branch point 1; Y lies on the edge-midpoint orbit", stacklevel=2)
    fz, fw = _fundamental_pair(J, tol)
    den = principal_nth_root(1728 * J, 5) * fw
    if den == 0:
        raise PoleError(f"w(J) vanishes at J = {J}")
    return fz / den


_EXTENDED_DPS = 32


def _z_solution(J, tol):
    return principal_power(J, -Z_PARAMS[0]) * gauss_2f1(*Z_PARAMS, 1 / J, tol)


def _z_solution_extended(J):
    # Same series routine, run in 32-digit arithmetic.
    with mpmath.workdps(_EXTENDED_DPS):
        a, b, c = (mpmath.mpf(11) / 60, mpmath.mpf(31) / 60, mpmath.mpf(6) / 5)
        J = mpmath.mpc(J)
        tol = Tolerances(series_tol=1e-30, max_series_terms=4000)
        return mpmath.power(J, -a) * _series(a, b, c, 1 / J, tol)[0]


def ode_residual(J: complex, h: float, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Central-difference residual of the hypergeometric ODE for z(J).

    z(J) = J^(-11/60) 2F1(11/60, 31/60; 6/5; 1/J) with ODE parameters
    a = 11/60, b = -1/60, c = 2/3.  The result is normalized by the sum of
    the three term magnitudes, so it measures the O(h^2) truncation.

    In double precision the second difference carries noise of order
    1e-16/h^2, as large as the truncation itself at h = 1e-3.  When 1/J
    is inside the series disk the samples are therefore taken in 32-digit
    arithmetic; elsewhere the double-precision noise floor applies.
    """
    J = as_complex(J, "J")
    if not 1e-4 <= h <= 1e-2:
        raise ValueError(f"step h = {h} outside [1e-4, 1e-2]")
    if min(abs(J), abs(J - 1)) < 10 * h:
        raise ValueError(f"J = {J} is within 10h of a singular point")
    extended = all(abs(1 / (J + d)) <= SERIES_RADIUS for d in (-h, 0, h))
    if extended:
        with mpmath.workdps(_EXTENDED_DPS):
            zm, z0, zp = (_z_solution_extended(mpmath.mpc(J) + d) for d in (-mpmath.mpf(h), 0, mpmath.mpf(h)))
            a, b, c = mpmath.mpf(11) / 60, mpmath.mpf(-1) / 60, mpmath.mpf(2) / 3
            J = mpmath.mpc(J)
            h = mpmath.mpf(h)
            d1 = (zp - zm) / (2 * h)
            d2 = (zp - 2 * z0 + zm) / (h * h)
            t2 = J * (1 - J) * d2
            t1 = (c - (a + b + 1) * J) * d1
            t0 = -a * b * z0
            return float(abs(t2 + t1 + t0) / (abs(t2) + abs(t1) + abs(t0)))
    a, b, c = ODE_PARAMS
    zm = _z_solution(J - h, tol)
    z0 = _z_solution(J, tol)
    zp = _z_solution(J + h, tol)
    d1 = (zp - zm) / (2 * h)
    d2 = (zp - 2 * z0 + zm) / (h * h)
    t2 = J * (1 - J) * d2
    t1 = (c - (a + b + 1) * J) * d1
    t0 = -a * b * z0
    return abs(t2 + t1 + t0) / (abs(t2) + abs(t1) + abs(t0))
