"""Constructed 4-connected fixture families with known depression behavior.

Two parameterized families: a 3-row wall trap whose depressed region grows
with the width while the agent's escape follows a fixed pattern, and a
7-row two-wall corridor world on which the mark-and-avoid algorithms sweep
the area behind the walls under one tie order but not under another.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cost import Cost
from .grid import Cell, GridMap, heuristic_to, manhattan


@dataclass(frozen=True)
class TrapInstance:
    grid: GridMap
    start: Cell
    goal: Cell
    heuristic: Callable[[Cell], Cost]
    tie: tuple[str, ...]
    depression: frozenset = field(default_factory=frozenset)
    obstacle_adjacent: frozenset = field(default_factory=frozenset)
    right_region: frozenset = field(default_factory=frozenset)


def build_trap_instance(width: int) -> TrapInstance:
    """3 x width wall trap; the agent starts inside a depression next to the wall.

    Rows 0..2, columns 0..width-1.  A two-cell wall at column width-3
    (rows 1 and 2) separates the start at (width-4, 2) from the goal at
    (width-2, 2); the Manhattan heuristic is depressed on rows 1 and 2 to
    the left of the wall.  Ties prefer down, then left, then up, then
    right.
    """
    if width < 5:
        raise ValueError("the wall trap needs width >= 5")
    wall_x = width - 3
    blocked = [Cell(wall_x, 1), Cell(wall_x, 2)]
    grid = GridMap(width, 3, blocked, connectivity=4)
    start = grid.cell(width - 4, 2)
    goal = grid.cell(width - 2, 2)
    depression = frozenset(grid.cell(x, y)
                           for y in (1, 2) for x in range(wall_x))
    adjacent = frozenset(c for c in depression
                         if abs(c.x - wall_x) <= 1 and c.x != wall_x)
    return TrapInstance(grid, start, goal, heuristic_to([goal], manhattan),
                        ("down", "left", "up", "right"),
                        depression=depression, obstacle_adjacent=adjacent)


def corridor_instance(width: int,
                      tie: Iterable[str] = ("up", "down", "right", "left")) -> TrapInstance:
    """7 x width two-wall corridor world.

    The start (2, 4) sits in a one-cell depression: the direct route to the
    goal (0, 4) is sealed by a column wall, the short escape runs under the
    lower wall, and two long walls fence off a large open area to the
    right.  With ties up > down > right > left the plain algorithms never
    enter the right area while the mark-and-avoid ones sweep it; with ties
    up > right > down > left all of them do.
    """
    if width < 7:
        raise ValueError("the corridor family needs width >= 7")
    blocked = [Cell(1, y) for y in range(5)]
    blocked += [Cell(x, 3) for x in range(3, width)]
    blocked += [Cell(x, 5) for x in range(3, width)]
    grid = GridMap(width, 7, blocked, connectivity=4)
    start = grid.cell(2, 4)
    goal = grid.cell(0, 4)
    right_region = frozenset(c for c in grid.free_cells() if c.x >= 3)
    return TrapInstance(grid, start, goal, heuristic_to([goal], manhattan),
                        tuple(tie), right_region=right_region)


def visit_counts(trajectory: Iterable[Cell]) -> Counter:
    """How many times each cell appears on a trajectory (start included)."""
    return Counter(trajectory)
