"""Exact decision and verification toolkit for vertex-coloured graph
homomorphisms: a ground-truth list-homomorphism solver, polynomial-time
strategies, core computation, hardness-gadget builders, and brute-force
verifiers, all runnable at desk scale."""

from .graphs import (Bipartition, Colour, Digraph, InputError,
                     PreconditionError, TropicalGraph, VertexMap,
                     bipartition, connected_components, cycle_graph, dgraph,
                     path_graph, plain, split_colours, split_instance,
                     tgraph, validate_hom)
from .solver import (Enumeration, SolveOutcome, ac_reduce, colour_lists,
                     enumerate_homs, solve_digraph_hom, solve_list_hom,
                     solve_retraction, solve_trop_hom)
from .cores import CoreResult, core, find_proper_retract, is_core, iso_check
from .poly import (FeatureSet, ReducedInstance, StrategyReport, TwoSatFormula,
                   colour_class_pairs, detect_features, dispatch_solve,
                   forcing_vertices, reduce_by_features, solve_2sat,
                   solve_all_forcing, solve_by_colour_pairs, solve_via_pairs,
                   two_sat)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
