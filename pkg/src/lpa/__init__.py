"""Exact computer algebra for Leavitt and Cohn path algebras of finite
directed graphs over commutative unital coefficient rings."""

from .algebra import Element, LeavittAlgebra, Monomial
from .core import (DIAGONAL, NON_NORMAL, NORMAL_DOWN, NORMAL_UP,
                   DecompositionReport, classify_generator, core_project,
                   corner_project, corner_to_laurent, cycle_power,
                   diagonal_commutant_witness, disc_decomposition, in_core,
                   is_normal, laurent_to_corner)
from .errors import (ExprError, GraphError, LpaError, MismatchError,
                     SystemError_, UndecidedError)
from .exprs import format_element, parse_expr, parse_path
from .graphs import (CommutativeShape, CycleInfo, Graph, Path, all_paths,
                     condition_L, cycles, distinguished_paths,
                     no_exit_cycle_at, parse_graph, shape_classify,
                     sink_split, vertex_classes)
from .rings import (IntegerRing, LaurentPoly, LaurentRing, ModRing,
                    RationalRing, Ring, laurent_conjugate, ring_make)
from .trailmodule import (ModuleVector, act, averaged_act,
                          check_expectation_square, diagonal_scalar,
                          prefix_project, trail_project, vec)
from .trails import (CONTINUOUS, DISCRETE_PERIODIC, FINITE, NOT_APERIODIC,
                     ContinuousTrail, FiniteTrail, PeriodicTrail, classify,
                     diagonal_chain, enumerate_discrete, essential_head,
                     find_trail_from, head, is_essentially_aperiodic,
                     parse_trail, seed, trail_equal)
from .uniqueness import (CKSystem, MatrixTarget, ReductionCertificate,
                         UniquenessReport, check_conditions, ck_validate,
                         cohn_check, cohn_embed, cohn_factor_eval,
                         distinguished_vertices, hom_apply, is_graded_system,
                         make_system, parse_system, reduce_search)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
