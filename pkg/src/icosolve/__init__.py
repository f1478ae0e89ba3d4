"""Roots of quintic equations through the icosahedral equation and Gauss
hypergeometric functions, checked against an independent root finder."""

__version__ = "0.1.0"

from .errors import (
    BranchInconsistency,
    BranchSelectionFailed,
    ComplexParseError,
    DegenerateCoefficients,
    DegenerateReduction,
    DenominatorCollapse,
    FormRangeError,
    IcosolveError,
    LiftAmbiguity,
    LiftCollision,
    NearSingularJ,
    NoConvergence,
    PoleError,
    SeriesDivergence,
    UnreachableRegion,
    VertexSingularity,
)
from .heymann import ResolventData, resolve_chain, resolvent_r
from .hypergeo import Y_of_J, gauss_2f1, ode_residual, s_of_J
from .invariants import J_of, form_H, form_T, form_f, form_t_nu, syzygy_residual, t_values
from .numeric import DEFAULT_TOLERANCES, Tolerances, format_complex, parse_complex
from .oracle import aberth_roots, match_root_sets
from .reduction import GeneralQuintic, PrincipalQuintic, depress, discriminant, lift_roots, principalize
from .solver import BranchChoice, SolveResult, roots_from_Y, solve_general, solve_principal
