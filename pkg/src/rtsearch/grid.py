"""Grid worlds: ground-truth maps, the agent's belief, sensing and heuristics.

The agent plans on a BeliefMap that starts obstacle-free and only ever
gains obstacles through sensing, so belief arc costs only increase (to
infinity).  Diagonal moves are allowed only when both adjacent cardinal
cells are unblocked, in truth and in belief alike, and 'T' terrain counts
as blocked.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, NamedTuple

from .cost import Cost, DIAGONAL, STRAIGHT


class Cell(NamedTuple):
    x: int
    y: int


class MapFormatError(ValueError):
    """Raised for malformed map or scenario files; carries the line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


_CARDINAL = ((1, 0), (-1, 0), (0, 1), (0, -1))
_DIAGONAL = ((1, 1), (1, -1), (-1, 1), (-1, -1))

PASSABLE_CHARS = frozenset(".G")
BLOCKED_CHARS = frozenset("@OT")
REJECTED_CHARS = frozenset("SW")


class GridMap:
    """Immutable ground-truth grid with a precomputed neighbor table.

    Cells are addressed as (x, y) with x the column and y the row, both
    0-based.  `connectivity` is 4 or 8.  The neighbor table stores, per
    cell, tuples (neighbor, cost, guard1, guard2) where the guards are the
    two cardinal cells a diagonal move must keep clear (None for cardinal
    moves).
    """

    def __init__(self, width: int, height: int, blocked: Iterable[Cell] = (),
                 connectivity: int = 8):
        if connectivity not in (4, 8):
            raise ValueError("connectivity must be 4 or 8")
        if width < 1 or height < 1:
            raise ValueError("grid dimensions must be positive")
        self.width = width
        self.height = height
        self.connectivity = connectivity
        self.cells = [Cell(x, y) for y in range(height) for x in range(width)]
        self.blocked = set()
        for c in map(Cell._make, blocked):
            if not (0 <= c.x < width and 0 <= c.y < height):
                raise ValueError(f"blocked cell {c} outside the grid")
            self.blocked.add(self.cells[c.y * width + c.x])
        self.neighbors = self._build_neighbor_table()

    def _build_neighbor_table(self):
        table = []
        width, height = self.width, self.height
        cells = self.cells
        for cell in cells:
            x, y = cell
            entry = []
            for dx, dy in _CARDINAL:
                nx, ny = x + dx, y + dy
                if 0 <= nx < width and 0 <= ny < height:
                    entry.append((cells[ny * width + nx], STRAIGHT, None, None))
            if self.connectivity == 8:
                for dx, dy in _DIAGONAL:
                    nx, ny = x + dx, y + dy
                    if 0 <= nx < width and 0 <= ny < height:
                        g1 = cells[y * width + nx]
                        g2 = cells[ny * width + x]
                        entry.append((cells[ny * width + nx], DIAGONAL, g1, g2))
            table.append(tuple(entry))
        return table

    def cell(self, x: int, y: int) -> Cell:
        return self.cells[y * self.width + x]

    def in_bounds(self, c: Cell) -> bool:
        return 0 <= c.x < self.width and 0 <= c.y < self.height

    def index(self, c: Cell) -> int:
        """Row-major index; the package-wide deterministic cell order."""
        return c.y * self.width + c.x

    def is_blocked(self, c: Cell) -> bool:
        return c in self.blocked

    def free_cells(self) -> list[Cell]:
        return [c for c in self.cells if c not in self.blocked]

    def successors(self, s: Cell) -> list[tuple[Cell, Cost]]:
        """Truth-graph successors of s with exact arc costs."""
        return _filtered(self.neighbors[s.y * self.width + s.x], self.blocked, s)

    def geometric_neighbors(self, s: Cell) -> list[Cell]:
        """The sensing neighborhood: adjacent cells regardless of blocking."""
        return [t for t, _, _, _ in self.neighbors[s.y * self.width + s.x]]


def _filtered(entry, blocked, s) -> list[tuple[Cell, Cost]]:
    if s in blocked:
        return []
    out = []
    for t, cost, g1, g2 in entry:
        if t in blocked:
            continue
        if g1 is not None and (g1 in blocked or g2 in blocked):
            continue
        out.append((t, cost))
    return out


class BeliefMap:
    """The agent's free-space-assumption view of a GridMap's geometry.

    known_blocked only grows, and sensing never invents obstacles, so the
    belief arc set shrinks monotonically toward the truth graph's.
    """

    def __init__(self, grid: GridMap):
        self.grid = grid
        self.known_blocked: set[Cell] = set()

    def successors(self, s: Cell) -> list[tuple[Cell, Cost]]:
        g = self.grid
        return _filtered(g.neighbors[s.y * g.width + s.x], self.known_blocked, s)

    def arc_open(self, u: Cell, v: Cell) -> bool:
        """Whether the arc u->v is currently traversable in the belief."""
        blocked = self.known_blocked
        if u in blocked or v in blocked:
            return False
        dx, dy = v.x - u.x, v.y - u.y
        if dx != 0 and dy != 0:
            if Cell(u.x + dx, u.y) in blocked or Cell(u.x, u.y + dy) in blocked:
                return False
        return True


def sense(truth: GridMap, belief: BeliefMap, s: Cell) -> set[Cell]:
    """Reveal truth-blocked cells adjacent to s; returns the newly discovered set."""
    known = belief.known_blocked
    truth_blocked = truth.blocked
    delta = set()
    for t in truth.geometric_neighbors(s):
        if t in truth_blocked and t not in known:
            known.add(t)
            delta.add(t)
    return delta


def octile(a: Cell, b: Cell) -> Cost:
    dx = abs(a.x - b.x)
    dy = abs(a.y - b.y)
    if dx < dy:
        dx, dy = dy, dx
    return Cost(dx - dy, dy)


def manhattan(a: Cell, b: Cell) -> Cost:
    return Cost(abs(a.x - b.x) + abs(a.y - b.y), 0)


def heuristic_to(goals: Iterable[Cell], metric: Callable[[Cell, Cell], Cost]) -> Callable[[Cell], Cost]:
    """Memoized min-over-goals heuristic; returned Cost objects are shared."""
    goal_list = list(goals)
    if not goal_list:
        raise ValueError("at least one goal is required")
    cache: dict[Cell, Cost] = {}

    def h(s: Cell) -> Cost:
        v = cache.get(s)
        if v is None:
            v = min((metric(s, g) for g in goal_list), key=lambda c: c.key)
            cache[s] = v
        return v

    return h


def default_heuristic(grid: GridMap, goals: Iterable[Cell]) -> Callable[[Cell], Cost]:
    metric = octile if grid.connectivity == 8 else manhattan
    return heuristic_to(goals, metric)


def random_case(truth: GridMap, seed: int) -> tuple[Cell, Cell]:
    """Deterministic start/goal draw; solvability is not guaranteed."""
    free = truth.free_cells()
    if len(free) < 2:
        raise ValueError("need at least 2 unblocked cells to draw a case")
    rng = random.Random(seed)
    start, goal = rng.sample(free, 2)
    return start, goal


def parse_map(text: str, connectivity: int = 8) -> GridMap:
    """Parse a MovingAI octile .map file.

    Expects: 'type octile', 'height H', 'width W', 'map', then H rows of W
    characters.  '.' and 'G' are passable; '@', 'O' and 'T' are blocked;
    swamp/water ('S'/'W') are unsupported and rejected.
    """
    lines = text.splitlines()

    def need(i: int) -> str:
        if i >= len(lines):
            raise MapFormatError("unexpected end of file", i + 1)
        return lines[i].rstrip("\r\n")

    header = need(0).strip().lower().split()
    if header[:1] != ["type"] or header[1:2] != ["octile"]:
        raise MapFormatError("expected 'type octile'", 1)

    def int_field(i: int, name: str) -> int:
        parts = need(i).split()
        if len(parts) != 2 or parts[0].lower() != name:
            raise MapFormatError(f"expected '{name} <n>'", i + 1)
        try:
            value = int(parts[1])
        except ValueError:
            raise MapFormatError(f"non-integer {name}", i + 1) from None
        if value < 1:
            raise MapFormatError(f"{name} must be positive", i + 1)
        return value

    height = int_field(1, "height")
    width = int_field(2, "width")
    if need(3).strip().lower() != "map":
        raise MapFormatError("expected 'map'", 4)

    blocked = []
    for row in range(height):
        line_no = 5 + row
        raw = need(4 + row)
        if len(raw) != width:
            raise MapFormatError(
                f"row has {len(raw)} characters, expected {width}", line_no)
        for col, ch in enumerate(raw):
            if ch in PASSABLE_CHARS:
                continue
            if ch in BLOCKED_CHARS:
                blocked.append(Cell(col, row))
            elif ch in REJECTED_CHARS:
                raise MapFormatError(
                    f"terrain '{ch}' is not supported", line_no)
            else:
                raise MapFormatError(f"unknown character '{ch}'", line_no)
    for extra in range(4 + height, len(lines)):
        if lines[extra].strip():
            raise MapFormatError("trailing content after map rows", extra + 1)
    return GridMap(width, height, blocked, connectivity=connectivity)


def parse_scen(text: str) -> list[tuple[Cell, Cell]]:
    """Parse a MovingAI .scen file into (start, goal) pairs.

    The optimal-length column is ignored.
    """
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].strip().lower().startswith("version"):
        raise MapFormatError("expected a 'version' line", 1)
    cases = []
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) < 8:
            raise MapFormatError("expected at least 8 tab-separated fields", i)
        try:
            sx, sy, gx, gy = (int(p) for p in parts[4:8])
        except ValueError:
            raise MapFormatError("non-integer coordinates", i) from None
        cases.append((Cell(sx, sy), Cell(gx, gy)))
    return cases


def random_grid(width: int, height: int, density: float, seed: int,
                connectivity: int = 8) -> GridMap:
    """Grid with each cell independently blocked with probability `density`."""
    rng = random.Random(seed)
    blocked = [Cell(x, y)
               for y in range(height) for x in range(width)
               if rng.random() < density]
    return GridMap(width, height, blocked, connectivity=connectivity)


def rooms_grid(width: int, height: int, seed: int, room: int = 8,
               connectivity: int = 8) -> GridMap:
    """Room-and-corridor grid: walls every `room` cells with random doorways."""
    rng = random.Random(seed)
    blocked = set()
    for wx in range(room, width - 1, room):
        doors = {rng.randrange(height) for _ in range(max(1, height // room))}
        for y in range(height):
            if y not in doors:
                blocked.add(Cell(wx, y))
    for wy in range(room, height - 1, room):
        doors = {rng.randrange(width) for _ in range(max(1, width // room))}
        for x in range(width):
            if x not in doors:
                blocked.add(Cell(x, wy))
    return GridMap(width, height, blocked, connectivity=connectivity)
