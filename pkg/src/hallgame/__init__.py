"""Game-theoretic assignments for bipartite matching and balanced hypergraphs."""

from .assign import (Assignment, AugmentedGraph, MatchingCert, Stats, ViolatorCert, augment,
                     check_step_invariants, compute_assignment, extract_certificate,
                     tightness_instance, verify_assignment)
from .errors import (HallGameError, InputError, InternalInvariantError, ParseError,
                     SizeBoundError)
from .game import (PlayState, Strategy, legal_moves, minimax_value, play_match,
                   strategy_from_assignment)
from .graph import BipartiteGraph, Graph, neighborhood, parse_bipartite, parse_graph
from .hungarian import WeightedBipartiteGraph, max_weight_matching
from .hypergraph import (AugmentedHypergraph, HyperAssignment, Hypergraph, augment_hypergraph,
                         hyper_minimax, hyper_strategy_from_assignment, is_balanced_bruteforce,
                         verify_hyper_assignment)
from .kernel import BACKEND
from .oracle import hall_violator_bruteforce, max_matching

__all__ = [
    "Assignment", "AugmentedGraph", "AugmentedHypergraph", "BACKEND", "BipartiteGraph", "Graph",
    "HallGameError", "HyperAssignment", "Hypergraph", "InputError", "InternalInvariantError",
    "MatchingCert", "ParseError", "PlayState", "SizeBoundError", "Stats", "Strategy",
    "ViolatorCert", "WeightedBipartiteGraph", "augment", "augment_hypergraph",
    "check_step_invariants", "compute_assignment", "extract_certificate",
    "hall_violator_bruteforce", "hyper_minimax", "hyper_strategy_from_assignment",
    "is_balanced_bruteforce", "legal_moves", "max_matching", "max_weight_matching",
    "minimax_value", "neighborhood", "parse_bipartite", "parse_graph", "play_match",
    "strategy_from_assignment", "tightness_instance", "verify_assignment",
    "verify_hyper_assignment",
]
