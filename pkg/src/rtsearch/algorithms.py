"""The six named algorithms and convergence-trial sequences.

Each algorithm is an update rule paired with a selection policy; only the
six published pairings are constructible.  LRTA* is the first algorithm
run with a lookahead of 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .grid import BeliefMap, Cell, GridMap, default_heuristic
from .kernel import HeuristicStore, Outcome, TrialResult, run_search
from .selection import select_best, select_best_unmarked, select_least_delta
from .updates import (update_lss, update_lss_marking, update_rtaa,
                      update_rtaa_marking)

_ALLOWED_PAIRS = {
    ("lss-lrta", update_lss, select_best),
    ("alss-lrta", update_lss_marking, select_best_unmarked),
    ("dalss-lrta", update_lss, select_least_delta),
    ("rtaa", update_rtaa, select_best),
    ("artaa", update_rtaa_marking, select_best_unmarked),
    ("dartaa", update_rtaa, select_least_delta),
}


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    update: Callable
    select: Callable

    def __post_init__(self):
        if (self.name, self.update, self.select) not in _ALLOWED_PAIRS:
            raise ValueError(
                f"{self.name!r} with this update/selection pairing is not "
                "one of the six supported algorithms")


ALGORITHMS = {
    name: AlgorithmSpec(name, update, select)
    for name, update, select in sorted(_ALLOWED_PAIRS, key=lambda t: t[0])
}

LSS_LRTA = ALGORITHMS["lss-lrta"]
ALSS_LRTA = ALGORITHMS["alss-lrta"]
DALSS_LRTA = ALGORITHMS["dalss-lrta"]
RTAA = ALGORITHMS["rtaa"]
ARTAA = ALGORITHMS["artaa"]
DARTAA = ALGORITHMS["dartaa"]


def get_algorithm(name: str) -> AlgorithmSpec:
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}"
        ) from None


def solve(truth: GridMap, start: Cell, goals: Iterable[Cell],
          spec: AlgorithmSpec, k: int, **kwargs) -> TrialResult:
    """One search trial from a fresh belief and heuristic."""
    return run_search(truth, start, goals, spec, k, **kwargs)


def run_trials(truth: GridMap, start: Cell, goals: Iterable[Cell],
               spec: AlgorithmSpec, k: int, max_trials: int = 500, *,
               tie: Iterable[str] | None = None,
               resnapshot_h0: bool = True,
               on_episode=None) -> tuple[list[TrialResult], bool]:
    """Repeated trials from `start`, reusing the learned heuristic and belief.

    The agent is teleported back to the start each trial.  By default the
    h0 snapshot (and with it the depression marks) is re-taken at every
    trial start; pass resnapshot_h0=False to keep the original input
    heuristic as the snapshot throughout.  Converged means a whole trial
    changed no h value; by then the trial's cost is optimal in the
    revealed graph.
    """
    goal_set = frozenset(goals)
    belief = BeliefMap(truth)
    store = HeuristicStore(default_heuristic(truth, goal_set))
    results: list[TrialResult] = []
    for _ in range(max_trials):
        store.begin_trial(resnapshot=resnapshot_h0)
        result = run_search(truth, start, goal_set, spec, k, store=store,
                            belief=belief, tie=tie, on_episode=on_episode)
        results.append(result)
        if result.outcome is not Outcome.SOLVED:
            return results, False
        if not store.dirty:
            return results, True
    return results, False
