"""Quintic roots through the icosahedral parameter, with residual-certified
branch selection.

The formulas leave two discrete choices open: which root of the
central quadratic to use, and the sign of ``sqrt(3 r f(Y))``.  All four
combinations are evaluated in a fixed order and the first whose roots
pass the residual gate is returned.  Flipping ``sqrt(r)`` only swaps
``(p, q)`` and ``(h1, h2)``; the fifth-root branch of ``1728 J`` only
relabels the ``t_nu``; neither needs enumerating.
"""

from __future__ import annotations

import cmath
import dataclasses
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BranchSelectionFailed,
    DegenerateCoefficients,
    DegenerateReduction,
    DenominatorCollapse,
    IcosolveError,
    NearSingularJ,
)
from .heymann import ResolventData, resolve_chain, resolvent_r
from .hypergeo import Y_of_J
from .invariants import J_of, form_f, t_values
from .numeric import DEFAULT_TOLERANCES, Tolerances, coefficient_scale
from .oracle import aberth_roots, match_root_sets
from .reduction import (
    GeneralQuintic,
    PrincipalQuintic,
    TschirnhausRecord,
    depress,
    discriminant,
    lift_roots,
    principalize,
    reciprocal_transform,
)

PRE_SHIFT = 0.5


@dataclass(frozen=True)
class BranchChoice:
    r_index: int
    sqrt3rf_sign: int


BRANCH_ORDER = tuple(BranchChoice(i, sign) for i in (0, 1) for sign in (1, -1))


@dataclass(frozen=True)
class SolveResult:
    roots: tuple
    Y: complex
    J: complex
    resolvent: ResolventData
    residuals: tuple
    branch: BranchChoice
    principal: PrincipalQuintic
    roots_by_nu: tuple
    f_Y: complex
    t_nu: tuple
    loop_closure: float
    attempts: tuple = ()
    oracle_max_distance: Optional[float] = None
    reduction: Optional[TschirnhausRecord] = None
    principal_roots: Optional[tuple] = None
    pre_transform: Optional[complex] = None


def _sorted_roots(values):
    return tuple(sorted(values, key=lambda z: (z.real, z.imag)))


def roots_from_Y(Y, r, s, sign: int, tol: Tolerances = DEFAULT_TOLERANCES) -> list:
    """The five ``y_nu = -(6 s f + 2 t_nu sqrt(3 r f)) / (t_nu^2 - 3 f)`` at ``(Y, 1)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    f = form_f(Y)
    root = sign * cmath.sqrt(3 * r * f)
    roots = []
    for t in t_values(Y):
        den = t * t - 3 * f
        if abs(den) <= tol.degeneracy_tol:
            raise DenominatorCollapse(f"t_nu^2 - 3f = {den} vanishes at Y = {Y}")
        roots.append(-(6 * s * f + 2 * t * root) / den)
    return roots


def _check_J(J, tol):
    if abs(J) < tol.degeneracy_tol or abs(J - 1) < tol.degeneracy_tol:
        raise NearSingularJ(f"J = {J} is at a branch point of the icosahedral covering")


def solve_principal(
    pq: PrincipalQuintic, tol: Tolerances = DEFAULT_TOLERANCES, oracle_check: bool = False
) -> SolveResult:
    """Roots of ``y^5 + 5 alpha y^2 + 5 beta y + gamma`` via the icosahedral equation.

    Raises :class:`BranchSelectionFailed` (with one diagnostic record per
    branch in ``attempts``) when no branch passes the residual gate, and
    :class:`NearSingularJ` when every branch stalls on a branch point.
    """
    alpha, beta, gamma = pq.alpha, pq.beta, pq.gamma
    if abs(gamma) <= tol.degeneracy_tol:
        raise DegenerateCoefficients("gamma ~ 0: y = 0 is a root; deflate to a quartic instead")
    if abs(discriminant(pq) / 3125) <= tol.degeneracy_tol:
        raise DegenerateCoefficients("discriminant ~ 0: repeated roots are not supported")

    scale = pq.scale
    gate = tol.residual_tol * scale
    r_roots = resolvent_r(alpha, beta, gamma, tol)

    chains = {}
    for index, r in enumerate(r_roots):
        try:
            chain = resolve_chain(alpha, beta, gamma, r, tol)
            _check_J(chain.J, tol)
            Y = Y_of_J(chain.J, tol)
            chains[index] = (chain, Y, None)
        except IcosolveError as exc:
            chains[index] = (None, None, exc)

    attempts = []
    candidates = []
    for choice in BRANCH_ORDER:
        record = {"r_index": choice.r_index, "sqrt3rf_sign": choice.sqrt3rf_sign}
        if choice.r_index >= len(r_roots):
            record.update(passed=False, error="no such root (central quadratic is linear)")
            attempts.append(record)
            continue
        chain, Y, exc = chains[choice.r_index]
        if exc is not None:
            record.update(passed=False, error=f"{type(exc).__name__}: {exc}")
            attempts.append(record)
            continue
        try:
            roots = roots_from_Y(Y, chain.r, chain.s, choice.sqrt3rf_sign, tol)
        except IcosolveError as exc:
            record.update(passed=False, error=f"{type(exc).__name__}: {exc}")
            attempts.append(record)
            continue
        residuals = [abs(pq(y)) for y in roots]
        worst = max(residuals)
        passed = worst < gate
        record.update(passed=passed, max_residual=worst, J=chain.J, Y=Y)
        attempts.append(record)
        if passed:
            candidates.append((choice, chain, Y, roots, residuals))

    if not candidates:
        errors = [chains[i][2] for i in chains]
        if errors and all(isinstance(e, NearSingularJ) for e in errors):
            raise errors[0]
        raise BranchSelectionFailed(
            f"no branch choice passed the residual gate {gate:.3g}", attempts
        )

    choice, chain, Y, roots, residuals = candidates[0]
    # Every other passing branch must describe the same root multiset.
    agreement = [match_root_sets(roots, other[3]) for other in candidates[1:]]
    for record in attempts:
        if record.get("passed"):
            record["selected"] = (record["r_index"], record["sqrt3rf_sign"]) == (
                choice.r_index, choice.sqrt3rf_sign)
    if agreement:
        attempts.append({"passing_branches_agreement": max(agreement)})

    f_Y = form_f(Y)
    loop_closure = abs(J_of(Y, 1, tol) - chain.J) / abs(chain.J)
    result = SolveResult(
        roots=_sorted_roots(roots),
        Y=Y,
        J=chain.J,
        resolvent=chain,
        residuals=tuple(abs(pq(y)) for y in _sorted_roots(roots)),
        branch=choice,
        principal=pq,
        roots_by_nu=tuple(roots),
        f_Y=f_Y,
        t_nu=t_values(Y),
        loop_closure=loop_closure,
        attempts=tuple(attempts),
    )
    if oracle_check:
        oracle = aberth_roots(pq.coefficients(), tol)
        result = dataclasses.replace(result, oracle_max_distance=match_root_sets(result.roots, oracle.values))
    return result


def solve_general(
    g: GeneralQuintic, tol: Tolerances = DEFAULT_TOLERANCES, oracle_check: bool = False
) -> SolveResult:
    """Roots of a monic quintic: depress, principalize, solve, lift back.

    If the quadratic Tschirnhaus step degenerates (``p ~ 0``), the
    problem is retried once on the quintic with roots ``1/(x - 1/2)``;
    translation alone cannot help because depression undoes it.
    """
    try:
        return _solve_general_once(g, tol, oracle_check)
    except DegenerateReduction:
        pass
    tau = PRE_SHIFT
    inner = _solve_general_once(reciprocal_transform(g, tau), tol, False)
    roots = _sorted_roots(tau + 1 / u for u in inner.roots)
    result = dataclasses.replace(
        inner,
        roots=roots,
        residuals=tuple(abs(g(x)) for x in roots),
        pre_transform=tau,
        oracle_max_distance=None,
    )
    if oracle_check:
        oracle = aberth_roots(g.coefficients(), tol)
        result = dataclasses.replace(result, oracle_max_distance=match_root_sets(roots, oracle.values))
    return result


def _solve_general_once(g, tol, oracle_check):
    d, shift = depress(g)
    pq, rec = principalize(d, tol)
    rec = dataclasses.replace(rec, shift=shift)
    principal = solve_principal(pq, tol)
    roots = _sorted_roots(lift_roots(rec, principal.roots, d, tol))
    result = dataclasses.replace(
        principal,
        roots=roots,
        residuals=tuple(abs(g(x)) for x in roots),
        reduction=rec,
        principal_roots=principal.roots,
    )
    if oracle_check:
        oracle = aberth_roots(g.coefficients(), tol)
        result = dataclasses.replace(result, oracle_max_distance=match_root_sets(roots, oracle.values))
    return result


def general_scale(g: GeneralQuintic) -> float:
    return coefficient_scale(g.coefficients())
