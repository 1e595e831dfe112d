"""The episode engine: bounded A* lookahead and the lookahead-update-act loop.

Tie-breaking is total and deterministic everywhere: f ascending, then g
descending, then a per-episode cell order (row-major by default, or a
movement-direction priority around the episode's start cell for the
constructed fixtures).  Every heap percolation of the lookahead, selection
and update phases is counted into the episode's stats, as is every state
extraction the update phase performs.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, NamedTuple, Optional

from .cost import Cost, ZERO, STRAIGHT, DIAGONAL
from .grid import BeliefMap, Cell, GridMap, default_heuristic, sense
from .heap import Heap

DIRECTIONS = {
    "up": (0, -1),
    "down": (0, 1),
    "left": (-1, 0),
    "right": (1, 0),
}


def direction_order(priorities: Iterable[str], grid: GridMap) -> Callable[[Cell], Callable[[Cell], int]]:
    """Tie order preferring moves from the episode origin in the given direction order.

    Non-adjacent cells fall back behind all adjacent ones, in row-major
    order, so the order stays a total one over all cells.
    """
    offsets = {}
    for rank, name in enumerate(priorities):
        try:
            offsets[DIRECTIONS[name]] = rank
        except KeyError:
            raise ValueError(f"unknown direction {name!r}") from None
    width = grid.width
    fallback = len(offsets)
    span = width * grid.height

    def bind(origin: Cell) -> Callable[[Cell], int]:
        ox, oy = origin

        def order(cell: Cell) -> int:
            rank = offsets.get((cell.x - ox, cell.y - oy), fallback)
            return rank * span + cell.y * width + cell.x

        return order

    return bind


def row_major_order(grid: GridMap) -> Callable[[Cell], Callable[[Cell], int]]:
    width = grid.width

    def bind(origin: Cell) -> Callable[[Cell], int]:
        def order(cell: Cell) -> int:
            return cell.y * width + cell.x

        return order

    return bind


class HeuristicStore:
    """Learned heuristic values over a base heuristic, with trial snapshots.

    h(s) falls back to the trial-start snapshot h0(s), which falls back to
    the base heuristic; only learned values are stored.  `marks` holds the
    cells flagged as belonging to a heuristic depression.
    """

    __slots__ = ("_base", "_h", "_h0", "marks", "dirty")

    def __init__(self, base: Callable[[Cell], Cost]):
        self._base = base
        self._h: dict[Cell, Cost] = {}
        self._h0: dict[Cell, Cost] = {}
        self.marks: set[Cell] = set()
        self.dirty = False

    def h(self, s: Cell) -> Cost:
        v = self._h.get(s)
        return v if v is not None else self.h0(s)

    def h0(self, s: Cell) -> Cost:
        v = self._h0.get(s)
        return v if v is not None else self._base(s)

    def set_h(self, s: Cell, value: Cost) -> None:
        if value.key != self.h(s).key:
            self._h[s] = value
            self.dirty = True

    def delta_key(self, s: Cell) -> int:
        """Comparison key of h(s) - h0(s); nonnegative while learning is monotone."""
        return self.h(s).key - self.h0(s).key

    def mark(self, s: Cell) -> bool:
        """Set the depression mark on s; returns True if it flipped."""
        if s in self.marks:
            return False
        self.marks.add(s)
        return True

    def is_marked(self, s: Cell) -> bool:
        return s in self.marks

    def begin_trial(self, resnapshot: bool = True) -> None:
        """Start a trial: re-snapshot h0 (optional), clear marks and the dirty flag."""
        if resnapshot:
            self._h0 = dict(self._h)
        self.marks.clear()
        self.dirty = False

    def learned(self) -> dict[Cell, Cost]:
        return dict(self._h)


class LookaheadWorkspace:
    """One episode's A* state.

    After bounded_astar returns, `open_cells` and `best_open` are frozen at
    their termination values; destructive selectors may drain `open_heap`
    without affecting the update phase, which works from the frozen set.
    """

    __slots__ = ("g", "back", "open_heap", "open_cells", "closed",
                 "expanded_order", "expansions", "best_open", "order_fn",
                 "belief")

    def __init__(self, belief: BeliefMap, order_fn: Callable[[Cell], int]):
        self.g: dict[Cell, Cost] = {}
        self.back: dict[Cell, Cell] = {}
        self.open_heap = Heap()
        self.open_cells: set[Cell] = set()
        self.closed: set[Cell] = set()
        self.expanded_order: list[Cell] = []
        self.expansions = 0
        self.best_open: Optional[Cell] = None
        self.order_fn = order_fn
        self.belief = belief

    @property
    def percolations(self) -> int:
        return self.open_heap.percolations


def bounded_astar(belief: BeliefMap, start: Cell, goals: frozenset | set,
                  store: HeuristicStore, k: int,
                  order_fn: Callable[[Cell], int] | None = None) -> LookaheadWorkspace:
    """A* from start, expanding at most k states.

    Stops as soon as the minimum-f open state is a goal (goals are never
    expanded).  Improving an open state's g removes and reinserts it.
    """
    if k < 1:
        raise ValueError("lookahead k must be >= 1")
    if start in belief.known_blocked:
        raise ValueError("start is known to be blocked")
    grid = belief.grid
    width = grid.width
    if order_fn is None:
        order_fn = lambda c: c.y * width + c.x
    ws = LookaheadWorkspace(belief, order_fn)
    h = store.h
    g = ws.g
    back = ws.back
    heap = ws.open_heap
    closed = ws.closed
    expanded = ws.expanded_order
    blocked = belief.known_blocked
    neighbor_table = grid.neighbors
    entries = heap._entries
    positions = heap._pos

    g[start] = ZERO
    heap.push((h(start).key, 0, order_fn(start), start))
    expansions = 0
    while entries:
        s = entries[0][3]
        if s in goals or expansions >= k:
            break
        heap.pop()
        closed.add(s)
        expanded.append(s)
        gs = g[s]
        for t, cost, g1, g2 in neighbor_table[s.y * width + s.x]:
            if t in blocked:
                continue
            if g1 is not None and (g1 in blocked or g2 in blocked):
                continue
            ng = gs + cost
            old = g.get(t)
            if old is None or ng.key < old.key:
                g[t] = ng
                back[t] = s
                if t in positions:
                    heap.remove(t)
                heap.push((ng.key + h(t).key, -ng.key, order_fn(t), t))
        expansions += 1

    ws.expansions = expansions
    ws.open_cells = set(positions)
    ws.best_open = entries[0][3] if entries else None
    return ws


def extract_path(ws: LookaheadWorkspace, start: Cell, target: Cell) -> list[Cell]:
    """Path start..target along the A* tree; its cost equals g(target)."""
    if target not in ws.g:
        raise ValueError(f"{target} was not reached by the lookahead")
    path = [target]
    back = ws.back
    s = target
    while s != start:
        s = back.get(s)
        if s is None:
            raise ValueError(f"no back-pointer chain from {target} to {start}")
        path.append(s)
    path.reverse()
    return path


def arc_cost(u: Cell, v: Cell) -> Cost:
    return DIAGONAL if (u.x != v.x and u.y != v.y) else STRAIGHT


class EpisodeStats(NamedTuple):
    expansions: int
    percolations: int
    planning_time: float
    moves: int


class UpdateStats(NamedTuple):
    expansions: int
    percolations: int
    newly_marked: tuple


class Outcome(Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no-solution"


@dataclass
class TrialResult:
    outcome: Outcome
    solution_cost: Cost
    trajectory: list[Cell]
    stats: list[EpisodeStats]
    store: HeuristicStore
    belief: BeliefMap

    @property
    def episodes(self) -> int:
        return len(self.stats)

    @property
    def total_time(self) -> float:
        return sum(s.planning_time for s in self.stats)

    @property
    def expansions(self) -> int:
        return sum(s.expansions for s in self.stats)

    @property
    def percolations(self) -> int:
        return sum(s.percolations for s in self.stats)

    @property
    def moves(self) -> int:
        return sum(s.moves for s in self.stats)


@dataclass
class EpisodeProbe:
    """Snapshot handed to run_search's observer after each planning episode."""
    index: int
    origin: Cell
    ws: LookaheadWorkspace
    s_next: Cell
    pre_h: dict[Cell, Cost]
    post_h: dict[Cell, Cost]
    newly_marked: frozenset
    store: HeuristicStore
    belief: BeliefMap
    goals: frozenset


def _reachable(belief: BeliefMap, frm: Cell, goals: frozenset) -> bool:
    """Whether some goal is reachable from `frm` in the current belief graph.

    The belief graph has a superset of the truth graph's arcs, so a
    negative answer proves the instance unsolvable.
    """
    if frm in goals:
        return True
    grid = belief.grid
    width = grid.width
    blocked = belief.known_blocked
    neighbor_table = grid.neighbors
    seen = {frm}
    queue = deque((frm,))
    while queue:
        s = queue.popleft()
        for t, _, g1, g2 in neighbor_table[s.y * width + s.x]:
            if t in seen or t in blocked:
                continue
            if g1 is not None and (g1 in blocked or g2 in blocked):
                continue
            if t in goals:
                return True
            seen.add(t)
            queue.append(t)
    return False


def run_search(truth: GridMap, start: Cell, goals: Iterable[Cell], algo,
               k: int, *,
               store: HeuristicStore | None = None,
               belief: BeliefMap | None = None,
               tie: Iterable[str] | None = None,
               on_episode: Callable[[EpisodeProbe], None] | None = None) -> TrialResult:
    """Run the lookahead-update-act loop until a goal is reached.

    Returns a NO_SOLUTION result when the frontier empties or when the
    belief graph provably disconnects the agent from every goal (checked
    with a backoff-scheduled breadth-first sweep, which never fires on
    solvable instances and performs no heap work).
    """
    goal_set = frozenset(goals)
    if not goal_set:
        raise ValueError("at least one goal is required")
    if start in truth.blocked:
        raise ValueError("start is blocked in the ground truth")
    if belief is None:
        belief = BeliefMap(truth)
    if store is None:
        store = HeuristicStore(default_heuristic(truth, goal_set))
    bind_order = direction_order(tie, truth) if tie else row_major_order(truth)

    perf = time.perf_counter
    current = start
    trajectory = [start]
    stats: list[EpisodeStats] = []
    cost = ZERO
    sense(truth, belief, start)
    belief_dirty = True
    next_check = 0
    episode = 0

    if current in goal_set:
        return TrialResult(Outcome.SOLVED, cost, trajectory, stats, store, belief)

    while True:
        if belief_dirty and episode >= next_check:
            if not _reachable(belief, current, goal_set):
                return TrialResult(Outcome.NO_SOLUTION, cost, trajectory,
                                   stats, store, belief)
            belief_dirty = False
            next_check = 2 * episode + 2

        t0 = perf()
        ws = bounded_astar(belief, current, goal_set, store, k,
                           bind_order(current))
        if not ws.open_heap:
            return TrialResult(Outcome.NO_SOLUTION, cost, trajectory,
                               stats, store, belief)
        pre_h = None
        if on_episode is not None:
            pre_h = {c: store.h(c) for c in ws.open_cells}
            pre_h.update((c, store.h(c)) for c in ws.closed)
        s_next = algo.select(ws, store)
        upd = algo.update(ws, store)
        t1 = perf()

        if on_episode is not None:
            post_h = {c: store.h(c) for c in pre_h}
            on_episode(EpisodeProbe(episode, current, ws, s_next, pre_h,
                                    post_h, frozenset(upd.newly_marked),
                                    store, belief, goal_set))

        path = extract_path(ws, current, s_next)
        moves = 0
        i = 0
        last = len(path) - 1
        while i < last:
            nxt = path[i + 1]
            cost = cost + arc_cost(current, nxt)
            current = nxt
            trajectory.append(nxt)
            moves += 1
            i += 1
            if sense(truth, belief, nxt):
                belief_dirty = True
                broken = False
                for j in range(i, last):
                    if not belief.arc_open(path[j], path[j + 1]):
                        broken = True
                        break
                if broken:
                    break

        stats.append(EpisodeStats(ws.expansions + upd.expansions,
                                  ws.open_heap.percolations + upd.percolations,
                                  t1 - t0, moves))
        episode += 1
        if current in goal_set:
            return TrialResult(Outcome.SOLVED, cost, trajectory, stats,
                               store, belief)
