"""Heuristic update rules: the modified-Dijkstra sweep and the f-based rule.

Both come in a plain and a marking flavor; marking sets the depression
flag on every extracted (sweep) or rewritten (f-based) state whose current
h exceeds its trial-start snapshot.  Sweep extractions count as expansions
and its heap sifts as percolations, both folded into the episode's stats.
"""

from __future__ import annotations

from .cost import INFINITE
from .heap import Heap
from .kernel import HeuristicStore, LookaheadWorkspace, UpdateStats


def _sweep(ws: LookaheadWorkspace, store: HeuristicStore, mark: bool,
           mark_closed_only: bool = False) -> UpdateStats:
    """Dijkstra over the search frontier, re-keyed by h, relaxing into the interior.

    Settles every interior state at the value
    min over frontier states b of (interior-path cost to b) + h(b),
    which is the maximum ceiling consistency allows.  `mark_closed_only`
    restricts marking to interior states (the alternative reading of the
    marking rule); the default marks any extracted state.
    """
    if not ws.open_cells:
        raise ValueError("update requires a nonempty frontier")
    order_fn = ws.order_fn
    closed = ws.closed
    remaining = set(closed)
    h = store.h
    h0 = store.h0
    belief = ws.belief
    queue = Heap()
    for c in ws.open_cells:
        queue.push((h(c).key, order_fn(c), c))

    new_h = {}  # settled or tentative values for interior cells; missing = infinite
    newly_marked = []
    expansions = 0
    while remaining and queue:
        _, _, s = queue.pop()
        expansions += 1
        in_interior = s in closed
        h_s = new_h[s] if in_interior else h(s)
        if mark and not (mark_closed_only and not in_interior):
            if h_s.key > h0(s).key and store.mark(s):
                newly_marked.append(s)
        remaining.discard(s)
        h_s_key = h_s.key
        for t, cost in belief.successors(s):
            if t not in remaining:
                continue
            cand = cost + h_s
            cur = new_h.get(t)
            if cur is None or cand.key < cur.key:
                new_h[t] = cand
                entry = (cand.key, order_fn(t), t)
                if t in queue:
                    queue.decrease(entry)
                else:
                    queue.push(entry)

    for s, value in new_h.items():
        store.set_h(s, value)
    for s in remaining:  # unreachable from the frontier; only synthetic inputs
        store.set_h(s, INFINITE)
    return UpdateStats(expansions, queue.percolations, tuple(newly_marked))


def update_lss(ws: LookaheadWorkspace, store: HeuristicStore) -> UpdateStats:
    return _sweep(ws, store, mark=False)


def update_lss_marking(ws: LookaheadWorkspace, store: HeuristicStore,
                       closed_only: bool = False) -> UpdateStats:
    return _sweep(ws, store, mark=True, mark_closed_only=closed_only)


def _f_rule(ws: LookaheadWorkspace, store: HeuristicStore, mark: bool) -> UpdateStats:
    if ws.best_open is None:
        raise ValueError("update requires a nonempty frontier")
    f_star = ws.g[ws.best_open] + store.h(ws.best_open)
    g = ws.g
    h0 = store.h0
    newly_marked = []
    for s in ws.expanded_order:
        nh = f_star - g[s]
        store.set_h(s, nh)
        if mark and nh.key > h0(s).key and store.mark(s):
            newly_marked.append(s)
    return UpdateStats(0, 0, tuple(newly_marked))


def update_rtaa(ws: LookaheadWorkspace, store: HeuristicStore) -> UpdateStats:
    return _f_rule(ws, store, mark=False)


def update_rtaa_marking(ws: LookaheadWorkspace, store: HeuristicStore) -> UpdateStats:
    return _f_rule(ws, store, mark=True)
