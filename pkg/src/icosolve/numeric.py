"""Shared complex-number conventions.

All values are plain Python ``complex``.  The principal branch
``Arg in (-pi, pi]`` is used for every root and power; any other branch
is reached by explicit enumeration in :mod:`icosolve.solver`.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ComplexParseError


@dataclass(frozen=True)
class Tolerances:
    series_tol: float = 1e-14
    residual_tol: float = 1e-8
    degeneracy_tol: float = 1e-12
    max_series_terms: int = 2000

    def __post_init__(self):
        for name in ("series_tol", "residual_tol", "degeneracy_tol"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")
        if int(self.max_series_terms) != self.max_series_terms or self.max_series_terms < 1:
            raise ValueError(f"max_series_terms must be a positive integer, got {self.max_series_terms!r}")


DEFAULT_TOLERANCES = Tolerances()


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def as_complex(value, name: str = "value") -> complex:
    """Coerce to ``complex`` and refuse NaN/Inf."""
    z = complex(value)
    if not is_finite(z):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


def principal_arg(z: complex) -> float:
    """Argument in (-pi, pi]; a negative-zero imaginary part does not flip it to -pi."""
    theta = cmath.phase(z)
    if theta == -math.pi:
        theta = math.pi
    return theta


def principal_nth_root(z: complex, n: int) -> complex:
    """Principal n-th root: modulus ``|z|**(1/n)``, argument ``Arg(z)/n``."""
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    z = as_complex(z, "z")
    if z == 0:
        return 0j
    if n == 1:
        return z
    return cmath.rect(abs(z) ** (1.0 / n), principal_arg(z) / n)


def principal_power(z: complex, exponent: float) -> complex:
    """``z**exponent`` on the principal branch (``0**e`` is 0 for Re e > 0)."""
    z = complex(z)
    if z == 0:
        if exponent == 0:
            return 1 + 0j
        if complex(exponent).real > 0:
            return 0j
        raise ZeroDivisionError("0 raised to a non-positive power")
    log_z = complex(math.log(abs(z)), principal_arg(z))
    return cmath.exp(exponent * log_z)


def polyval(coeffs: Sequence[complex], z: complex) -> complex:
    """Horner evaluation, coefficients highest degree first."""
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def coefficient_scale(values: Iterable[complex]) -> float:
    return max([1.0] + [abs(v) for v in values])


# Literal grammar:  [sign] real [sign imag 'i']  |  [sign] imag 'i'
# where an imaginary magnitude may be omitted ("i", "-i", "2-i").
_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def parse_complex(text: str) -> complex:
    """Parse a complex literal such as ``"1-i"``, ``"-2.4"`` or ``"3.1e-2i"``."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ComplexParseError("empty complex literal", text, 1)

    pos = 0
    parts: list[tuple[float, bool]] = []  # (value, is_imaginary)
    while pos < len(s):
        sign = 1.0
        if s[pos] in "+-":
            sign = -1.0 if s[pos] == "-" else 1.0
            pos += 1
        elif parts:
            raise ComplexParseError("expected '+' or '-'", text, offset + pos + 1)
        m = _NUMBER.match(s, pos)
        if m:
            magnitude = float(m.group())
            pos = m.end()
        else:
            magnitude = None
        imaginary = pos < len(s) and s[pos] in "ij"
        if imaginary:
            pos += 1
            if magnitude is None:
                magnitude = 1.0
        elif magnitude is None:
            raise ComplexParseError("expected a number or 'i'", text, offset + pos + 1)
        parts.append((sign * magnitude, imaginary))
        if len(parts) > 2:
            raise ComplexParseError("too many terms", text, offset + pos + 1)

    if len(parts) == 2 and (parts[0][1] or not parts[1][1]):
        raise ComplexParseError("expected 'real+imag i' ordering", text, offset + len(s))
    re_part = next((v for v, imag in parts if not imag), 0.0)
    im_part = next((v for v, imag in parts if imag), 0.0)
    return complex(re_part, im_part)


def format_complex(z: complex) -> str:
    """Canonical literal; ``parse_complex(format_complex(z)) == z`` exactly."""
    z = as_complex(z)
    re_text = repr(z.real)
    im_text = repr(abs(z.imag))
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{re_text}{sign}{im_text}i"
