"""Real-time heuristic grid search with depression avoidance."""

from .cost import Cost, INFINITE, ZERO, STRAIGHT, DIAGONAL
from .grid import (BeliefMap, Cell, GridMap, MapFormatError, manhattan,
                   octile, parse_map, parse_scen, random_case, random_grid,
                   rooms_grid, sense)
from .kernel import (EpisodeProbe, EpisodeStats, HeuristicStore,
                     LookaheadWorkspace, Outcome, TrialResult, bounded_astar,
                     extract_path, run_search)
from .algorithms import (ALGORITHMS, AlgorithmSpec, get_algorithm, run_trials,
                         solve)

__all__ = [
    "ALGORITHMS", "AlgorithmSpec", "BeliefMap", "Cell", "Cost", "DIAGONAL",
    "EpisodeProbe", "EpisodeStats", "GridMap", "HeuristicStore", "INFINITE",
    "LookaheadWorkspace", "MapFormatError", "Outcome", "STRAIGHT",
    "TrialResult", "ZERO", "bounded_astar", "extract_path", "get_algorithm",
    "manhattan", "octile", "parse_map", "parse_scen", "random_case",
    "random_grid", "rooms_grid", "run_search", "run_trials", "sense", "solve",
]
