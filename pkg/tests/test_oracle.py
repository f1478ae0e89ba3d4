import cmath
import math
import random

import pytest
from hypothesis import given, strategies as st

from icosolve.errors import NoConvergence
from icosolve.oracle import aberth_roots, match_root_sets, poly_from_roots

from conftest import EXAMPLE_ROOTS, disk_point

points = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)


def test_roots_of_unity():
    res = aberth_roots([1, 0, 0, 0, 0, -1])
    assert res.converged
    unity = [cmath.exp(2j * math.pi * k / 5) for k in range(5)]
    assert match_root_sets(res.values, unity) < 1e-13


def test_example_quintic():
    res = aberth_roots([1, 0, 0, 5j, -12, 1 - 1j])
    assert match_root_sets(res.values, EXAMPLE_ROOTS) < 1e-5


def test_double_root():
    res = aberth_roots(poly_from_roots([1, 1, 2, 3, 4]))
    assert match_root_sets(res.values, [1, 1, 2, 3, 4]) < 1e-6


def test_reconstruction_for_separated_roots():
    rng = random.Random(71)
    done = 0
    while done < 50:
        roots = [disk_point(rng, 2) for _ in range(5)]
        if min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:]) < 1e-3:
            continue
        coeffs = poly_from_roots(roots)
        res = aberth_roots(coeffs)
        assert res.converged
        rebuilt = poly_from_roots(res.values)
        scale = max(abs(c) for c in coeffs)
        assert max(abs(a - b) for a, b in zip(rebuilt, coeffs)) < 1e-10 * scale
        done += 1


def test_converged_means_small_residual():
    rng = random.Random(73)
    for _ in range(30):
        coeffs = [1] + [disk_point(rng, 3) for _ in range(5)]
        res = aberth_roots(coeffs)
        scale = max(1, max(abs(c) for c in coeffs))
        if res.converged:
            for v in res.values:
                assert abs(sum(c * v ** (5 - i) for i, c in enumerate(coeffs))) < 1e-8 * scale * 10


def test_input_validation():
    with pytest.raises(ValueError):
        aberth_roots([2, 1])
    with pytest.raises(ValueError):
        aberth_roots([1])
    assert aberth_roots([1, -3]).values == (3,)


def test_no_convergence_carries_partial_state(monkeypatch):
    import icosolve.oracle as oracle

    monkeypatch.setattr(oracle, "MAX_ITERATIONS", 1)
    with pytest.raises(NoConvergence) as info:
        oracle.aberth_roots([1, 0, 0, 5j, -12, 1 - 1j])
    assert len(info.value.values) == 5 and info.value.iterations == 1


def test_match_examples():
    a = [1, 2j, -3, 4 + 1j, 0.5]
    assert match_root_sets(a, a) == 0
    b = list(a)
    b[2] += 1e-7
    assert abs(match_root_sets(a, b) - 1e-7) < 1e-12
    assert match_root_sets(a, a[::-1]) == 0
    with pytest.raises(ValueError):
        match_root_sets(a, a[:4])


def test_match_is_bottleneck_not_greedy():
    # greedy nearest-first pairing gives 2.0; the optimal pairing gives 1.1
    a = [0, 1]
    b = [1.1, 2]
    assert abs(match_root_sets(a, b) - 1.1) < 1e-15


@given(st.lists(points, min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_match_permutation_invariant_and_symmetric(values, r):
    shuffled = list(values)
    r.shuffle(shuffled)
    assert match_root_sets(values, shuffled) == 0
    other = [v + 0.1 for v in values]
    assert match_root_sets(values, other) == match_root_sets(other, values)
