"""Icosahedral invariant forms f, H, T, the octahedral forms t_nu and J.

Forms are evaluated in homogeneous coordinates ``(z, w)``; ``w`` defaults
to 1 for the inhomogeneous case.  Degree-30 forms overflow quickly, so
inputs are restricted to ``max(|z|, |w|) <= FORM_DOMAIN_LIMIT``.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

from .errors import FormRangeError, VertexSingularity
from .numeric import DEFAULT_TOLERANCES, Tolerances, as_complex

FORM_DOMAIN_LIMIT = 10.0

# EPSILON_POWERS[k] == exp(2*pi*i*k/5)
EPSILON_POWERS = tuple(cmath.exp(2j * math.pi * k / 5) for k in range(5))
EPSILON = EPSILON_POWERS[1]


class FormPoint(NamedTuple):
    z: complex
    w: complex = 1 + 0j


def _check_point(z, w):
    z = as_complex(z, "z")
    w = as_complex(w, "w")
    if z == 0 and w == 0:
        raise ValueError("(z, w) = (0, 0) is not a point of the projective line")
    if max(abs(z), abs(w)) > FORM_DOMAIN_LIMIT:
        raise FormRangeError(
            f"max(|z|, |w|) = {max(abs(z), abs(w)):.3g} exceeds {FORM_DOMAIN_LIMIT}; "
            "rescale the homogeneous pair first"
        )
    return z, w


def _fifth_powers(z, w):
    z2 = z * z
    w2 = w * w
    return z2 * z2 * z, w2 * w2 * w


def form_f(z: complex, w: complex = 1) -> complex:
    """Vertex form ``zw(z^10 + 11 z^5 w^5 - w^10)`` (degree 12)."""
    z, w = _check_point(z, w)
    a, b = _fifth_powers(z, w)
    return z * w * (a * (a + 11 * b) - b * b)


def form_H(z: complex, w: complex = 1) -> complex:
    """Face-centre form (degree 20), the Hessian of f up to a constant."""
    z, w = _check_point(z, w)
    a, b = _fifth_powers(z, w)
    a2, b2 = a * a, b * b
    return -(a2 * a2 + b2 * b2) + 228 * a * b * (a2 - b2) - 494 * a2 * b2


def form_T(z: complex, w: complex = 1) -> complex:
    """Edge-midpoint form (degree 30)."""
    z, w = _check_point(z, w)
    a, b = _fifth_powers(z, w)
    a2, b2 = a * a, b * b
    ab = a * b
    return (a2 * a2 * a2 + b2 * b2 * b2) + 522 * ab * (a2 * a2 - b2 * b2) - 10005 * a2 * b2 * (a2 + b2)


def syzygy_residual(z: complex, w: complex = 1) -> float:
    """``|T^2 - 1728 f^5 + H^3|`` relative to the largest of the three terms.

    Scaling by ``|T^2|`` alone would blow up on the edge-midpoint orbit,
    where ``T = 0`` and the other two terms cancel.
    """
    f = form_f(z, w)
    H = form_H(z, w)
    T = form_T(z, w)
    T2 = T * T
    f2 = f * f
    f5 = 1728 * f2 * f2 * f
    H3 = H * H * H
    return abs(T2 - f5 + H3) / max(1.0, abs(T2), abs(f5), abs(H3))


def form_t_nu(z: complex, nu: int, w: complex = 1) -> complex:
    """Octahedral form t_nu; ``nu = 0`` is the classical form t."""
    if nu not in range(5):
        raise ValueError(f"nu must be one of 0..4, got {nu!r}")
    z, w = _check_point(z, w)
    e = EPSILON_POWERS
    z2, w2 = z * z, w * w
    z4, w4 = z2 * z2, w2 * w2
    return (
        e[3 * nu % 5] * z4 * z2
        + 2 * e[2 * nu % 5] * z4 * z * w
        - 5 * e[nu] * z4 * w2
        - 5 * e[4 * nu % 5] * z2 * w4
        - 2 * e[3 * nu % 5] * z * w4 * w
        + e[2 * nu % 5] * w4 * w2
    )


def t_values(z: complex, w: complex = 1) -> tuple:
    return tuple(form_t_nu(z, nu, w) for nu in range(5))


def J_of(z: complex, w: complex = 1, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Icosahedral covering map ``H^3 / (1728 f^5)``."""
    f = form_f(z, w)
    if abs(f) <= tol.degeneracy_tol:
        raise VertexSingularity(f"f({z}, {w}) = {f} vanishes: J is infinite on the vertex orbit")
    H = form_H(z, w)
    f2 = f * f
    return H * H * H / (1728 * f2 * f2 * f)
