"""Next-state selection policies over the lookahead frontier.

All three pick by f ascending with the kernel's global tie-break (larger g
first, then the episode cell order).  The avoidance policies pop the
frontier heap destructively; that is safe because selection is the heap's
last consumer in an episode, and their pops are counted as percolations.
"""

from __future__ import annotations

from .kernel import HeuristicStore, LookaheadWorkspace
from .grid import Cell


def select_best(ws: LookaheadWorkspace, store: HeuristicStore) -> Cell:
    """Minimum-f frontier state; O(1) peek, the frontier is not consumed."""
    if ws.best_open is None:
        raise ValueError("selection requires a nonempty frontier")
    return ws.best_open


def select_best_unmarked(ws: LookaheadWorkspace, store: HeuristicStore) -> Cell:
    """Minimum-f unmarked frontier state, falling back to the overall best.

    Pops in f-order, so the first unmarked pop is the unmarked argmin.
    """
    heap = ws.open_heap
    if not heap:
        raise ValueError("selection requires a nonempty frontier")
    first = None
    while heap:
        cell = heap.pop()[3]
        if first is None:
            first = cell
        if not store.is_marked(cell):
            return cell
    return first


def select_least_delta(ws: LookaheadWorkspace, store: HeuristicStore) -> Cell:
    """Best-f state among those whose h has changed the least since trial start.

    Pops in f-order keeping the first state of each strictly smaller
    h - h0, and stops as soon as an unchanged state is found.
    """
    heap = ws.open_heap
    if not heap:
        raise ValueError("selection requires a nonempty frontier")
    best = None
    delta_min = None
    while heap and delta_min != 0:
        cell = heap.pop()[3]
        d = store.delta_key(cell)
        if delta_min is None or d < delta_min:
            best = cell
            delta_min = d
    return best
