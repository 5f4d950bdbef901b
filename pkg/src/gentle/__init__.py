"""Exact surface-model invariants of homologically smooth graded gentle algebras.

The pipeline: a validated algebra (``algebra``) yields its forbidden and
permitted threads and combinatorial boundary components (``threads``); the
forbidden threads assemble into a ribbon graph whose thickening is the
surface model (``ribbon``); spanning-tree homology and the intersection
pairing (``homology``) support winding numbers of simple cycles and the Z/4
quadratic refinement (``linefield``); Arf machinery over GF(2) lives in
``quadforms``; the annuli-glued surfaces of chain and ring stacky curves in
``stacky``; the derived-equivalence decision procedures in ``decider``; the
input language and command line in ``dsl`` and ``cli``.
"""

from .algebra import (
    GradedGentleAlgebra,
    InvalidGentleError,
    Quiver,
    koszul_dual,
    random_gentle,
    validate_gentle,
)
from .decider import DecisionReport, compare_algebras, compare_by_aag, compare_fd_by_aag
from .linefield import OrbitInvariants, analyze, orbit_invariants
from .stacky import StackyCurveSpec, decide_stacky, glued_invariants, stacky_arf
from .threads import aag_invariants, boundary_components, enumerate_threads, is_proper, is_smooth

__all__ = [
    "GradedGentleAlgebra",
    "InvalidGentleError",
    "Quiver",
    "validate_gentle",
    "koszul_dual",
    "random_gentle",
    "enumerate_threads",
    "boundary_components",
    "aag_invariants",
    "is_smooth",
    "is_proper",
    "analyze",
    "orbit_invariants",
    "OrbitInvariants",
    "compare_algebras",
    "compare_by_aag",
    "compare_fd_by_aag",
    "DecisionReport",
    "StackyCurveSpec",
    "glued_invariants",
    "stacky_arf",
    "decide_stacky",
]
