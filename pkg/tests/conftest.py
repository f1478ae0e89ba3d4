import cmath
import math
import random

import pytest

# Published worked example: y^5 + 5i y^2 - 12 y + (1 - i).
EXAMPLE = (1j, -2.4, 1 - 1j)
EXAMPLE_ROOTS = (
    0.0895118 - 0.0828539j,
    -0.0120031 + 2.20094j,
    -0.0430531 - 1.43083j,
    -1.90456 - 0.333135j,
    1.87011 - 0.354121j,
)
EXAMPLE_J = -0.324158 - 2.04659j
EXAMPLE_Y = 0.178352 + 0.0718131j


def disk_point(rng, radius):
    return cmath.rect(radius * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))


def random_principal(rng, radius=2.0):
    """Coefficients in the disk, with the usual degeneracies filtered out."""
    from icosolve.reduction import PrincipalQuintic, discriminant

    while True:
        a, b, c = (disk_point(rng, radius) for _ in range(3))
        pq = PrincipalQuintic(a, b, c)
        if abs(c) <= 1e-3 or abs(b) <= 1e-3:
            continue
        if abs(a ** 4 + a * b * c - b ** 3) <= 1e-6 or abs(discriminant(pq)) <= 1e-6:
            continue
        return pq


@pytest.fixture
def rng():
    return random.Random(20240601)
