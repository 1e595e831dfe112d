"""Independent verification machinery: depression checkers and update oracles.

Everything here is deliberately implemented along a different path than the
search kernel (textbook heapq Dijkstra over explicit adjacency instead of
the instrumented A* machinery), so agreement between the two is meaningful
evidence of correctness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .cost import Cost, INFINITE, ZERO
from .grid import BeliefMap, Cell, GridMap
from .kernel import LookaheadWorkspace


Successors = Callable[[Cell], list[tuple[Cell, Cost]]]


def dijkstra_distances(successors: Successors,
                       sources: Mapping[Cell, Cost] | Iterable[Cell],
                       allowed: frozenset | set | None = None) -> dict[Cell, Cost]:
    """Textbook multi-source Dijkstra; missing cells are unreachable.

    `sources` may carry initial distances; `allowed` restricts the nodes
    that get expanded (targets outside it still receive a distance).
    """
    if not isinstance(sources, Mapping):
        sources = {s: ZERO for s in sources}
    dist: dict[Cell, Cost] = {}
    heap = []
    counter = 0
    for s, d in sources.items():
        heap.append((d.key, counter, s, d))
        counter += 1
    heapq.heapify(heap)
    while heap:
        key, _, s, d = heapq.heappop(heap)
        if s in dist:
            continue
        dist[s] = d
        if allowed is not None and s not in allowed:
            continue
        for t, cost in successors(s):
            if t in dist:
                continue
            nd = d + cost
            counter += 1
            heapq.heappush(heap, (nd.key, counter, t, nd))
    return dist


def truth_distances(grid: GridMap, targets: Iterable[Cell]) -> dict[Cell, Cost]:
    """Cheapest cost from every cell to the nearest target in the truth graph."""
    return dijkstra_distances(grid.successors, list(targets))


def optimal_cost(graph: GridMap | BeliefMap, start: Cell,
                 goals: Iterable[Cell]) -> Cost:
    """Cheapest start-to-goal cost in the given graph; INFINITE if none."""
    dist = dijkstra_distances(graph.successors, list(goals))
    return dist.get(start, INFINITE)


@dataclass(frozen=True)
class Region:
    """A connected set of cells plus its computed one-step border."""
    cells: frozenset
    border: frozenset


def make_region(cells: Iterable[Cell], belief: BeliefMap) -> Region:
    """Build a Region, computing the border from the current belief arcs."""
    cell_set = frozenset(cells)
    if not cell_set:
        raise ValueError("a region must be nonempty")
    seed = next(iter(cell_set))
    component = _component(seed, cell_set, belief)
    if component != cell_set:
        raise ValueError("region cells are not connected under the move rule")
    border = set()
    for s in cell_set:
        for t, _ in belief.successors(s):
            if t not in cell_set:
                border.add(t)
    return Region(cell_set, frozenset(border))


def _component(seed: Cell, universe: frozenset | set, belief: BeliefMap) -> frozenset:
    seen = {seed}
    stack = [seed]
    while stack:
        s = stack.pop()
        for t, _ in belief.successors(s):
            if t in universe and t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def restricted_cost(region: Region, s: Cell, t: Cell, belief: BeliefMap) -> Cost:
    """Cheapest path cost from s to t whose intermediate states all lie in the region."""
    if s not in region.cells:
        raise ValueError("the source must lie inside the region")
    if t not in region.border:
        raise ValueError("the target must lie on the region border")
    dist = dijkstra_distances(belief.successors, [s], allowed=region.cells)
    return dist.get(t, INFINITE)


def _interior_exit_costs(region: Region, s: Cell, belief: BeliefMap) -> dict[Cell, Cost]:
    """Distances from s to every border cell, traversing the region only."""
    dist = dijkstra_distances(belief.successors, [s], allowed=region.cells)
    return {b: dist[b] for b in region.border if b in dist}


def is_cost_sensitive_depression(region: Region, h: Callable[[Cell], Cost],
                                 belief: BeliefMap) -> bool:
    """Whether every interior h is strictly below every exit cost plus border h."""
    for s in region.cells:
        hs = h(s)
        for b, k_cost in _interior_exit_costs(region, s, belief).items():
            if not hs.key < (k_cost + h(b)).key:
                return False
    return True


def is_ishida_depression(region: Region, h: Callable[[Cell], Cost]) -> bool:
    """Whether no border h is below any interior h."""
    interior_max = max(h(s).key for s in region.cells)
    return all(h(b).key >= interior_max for b in region.border)


def max_ishida_region(seed: Cell, h: Callable[[Cell], Cost],
                      belief: BeliefMap) -> Region:
    """Grow a maximal border-dominated region from a seed, deterministically.

    Border cells are absorbed smallest-h first (ties row-major) while the
    border-domination condition keeps holding.
    """
    width = belief.grid.width
    cells = {seed}
    while True:
        region = make_region(cells, belief)
        if not is_ishida_depression(region, h):
            raise ValueError("the seed itself is not border-dominated")
        candidates = sorted(region.border,
                            key=lambda c: (h(c).key, c.y * width + c.x))
        grown = False
        for b in candidates:
            trial = make_region(cells | {b}, belief)
            if is_ishida_depression(trial, h):
                cells.add(b)
                grown = True
                break
        if not grown:
            return region


def prop1_oracle(ws: LookaheadWorkspace, store=None,
                 h_fn: Callable[[Cell], Cost] | None = None) -> dict[Cell, Cost]:
    """Expected post-update interior h values, via Dijkstra on the proof graph.

    The graph's nodes are the frontier plus the interior; a virtual source
    reaches each frontier state at its (pre-update) h, and interior arcs
    are the reversed belief arcs except those joining two frontier states.
    Pass the pre-update heuristic as `h_fn` when the store has already been
    updated.
    """
    h = h_fn if h_fn is not None else store.h
    closed = ws.closed
    if not closed:
        return {}
    if not ws.open_cells:
        raise ValueError("the oracle needs a nonempty frontier")
    open_cells = ws.open_cells
    nodes = open_cells | closed
    belief = ws.belief

    dist: dict[Cell, Cost] = {}
    heap = []
    counter = 0
    for s in open_cells:
        hv = h(s)
        heap.append((hv.key, counter, s, hv))
        counter += 1
    heapq.heapify(heap)
    while heap:
        _, _, s, d = heapq.heappop(heap)
        if s in dist:
            continue
        dist[s] = d
        s_open = s in open_cells
        for t, cost in belief.successors(s):
            if t not in nodes or t in dist:
                continue
            if s_open and t in open_cells:
                continue
            nd = d + cost
            counter += 1
            heapq.heappush(heap, (nd.key, counter, t, nd))
    return {c: dist.get(c, INFINITE) for c in closed}


def increased_component(s: Cell, ws: LookaheadWorkspace,
                        pre_h: Mapping[Cell, Cost],
                        post_h: Mapping[Cell, Cost]) -> frozenset:
    """Connected interior cells around s whose h grew during the episode."""
    increased = {c for c in ws.closed if post_h[c].key > pre_h[c].key}
    if s not in increased:
        return frozenset()
    return _component(s, increased, ws.belief)


def verify_theorem5(pre_h: Mapping[Cell, Cost], post_h: Mapping[Cell, Cost],
                    ws: LookaheadWorkspace, marked: Iterable[Cell]) -> bool:
    """Check that every newly marked state sits in a pre-update cost-sensitive depression.

    The candidate region is the maximal connected component of interior
    states whose h increased this episode.
    """
    belief = ws.belief

    def h_before(c: Cell) -> Cost:
        return pre_h[c]

    for s in marked:
        component = increased_component(s, ws, pre_h, post_h)
        if not component:
            return False
        region = make_region(component, belief)
        for b in region.border:
            if b not in pre_h:
                return False  # border must be frontier or interior, both snapshotted
        if not is_cost_sensitive_depression(region, h_before, belief):
            return False
    return True
