"""Exact standard and positive semidefinite zero forcing on small graphs."""

from .graphs import (Claw, Graph, bits, complete_graph, components,
                     cycle_graph, enumerate_graphs, find_claws,
                     format_edge_list, from_edge_list, graph_from_edge_mask,
                     has_claw, induced_subgraph, is_claw_free, is_connected,
                     mask_of, parse_edge_list, parse_graph6, path_graph,
                     reach, star_graph, to_graph6)
from .forcing import (Chronology, ChronologyError, ColorState, Force, Rule,
                      apply_step, check_chronology, chronological_list,
                      closure, closure_mask, expansion_sequence, is_forcing_set,
                      make_chronology, restrict_chronology, valid_forces)
from .bundles import (ComponentHistory, PathBundle, build_bundle,
                      component_history, terminus)
from .solver import SolverReport, all_minimum_sets, forcing_number
from .reconnection import (MinimalityRefutation, ReconnectionStep,
                           boundary_set, connected_complement_set,
                           connected_complement_trace, find_pivot,
                           first_saturation_time, improve_component)
from .verifier import (CorpusSummary, EqualityReport, MirrorReport,
                       check_equality, is_zz_perfect_direct, mirror_check,
                       run_corpus, run_corpus_enumerated)

__all__ = [name for name in dir() if not name.startswith("_")]
