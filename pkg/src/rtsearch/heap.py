"""Binary min-heap with position tracking and percolation accounting.

Entries are tuples whose last element is the cell and whose leading
elements are integer sort keys (unique per cell, so the cell itself is
never compared).  `percolations` counts every one-level move of a stored
element during sift-up or sift-down; the element being repositioned is
not itself counted.  All search, update and selection heaps in the
package share this implementation so the counter means the same thing
everywhere.
"""

from __future__ import annotations


class Heap:
    __slots__ = ("_entries", "_pos", "percolations")

    def __init__(self):
        self._entries: list[tuple] = []
        self._pos: dict = {}
        self.percolations = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __contains__(self, cell) -> bool:
        return cell in self._pos

    def push(self, entry: tuple) -> None:
        cell = entry[-1]
        if cell in self._pos:
            raise ValueError(f"{cell} already in heap")
        self._entries.append(entry)
        self._pos[cell] = len(self._entries) - 1
        self._sift_toward_root(len(self._entries) - 1)

    def peek(self) -> tuple:
        return self._entries[0]

    def pop(self) -> tuple:
        entries = self._entries
        top = entries[0]
        del self._pos[top[-1]]
        last = entries.pop()
        if entries:
            entries[0] = last
            self._pos[last[-1]] = 0
            self._sift_toward_leaves(0)
        return top

    def remove(self, cell) -> None:
        pos = self._pos.pop(cell)
        entries = self._entries
        last = entries.pop()
        if pos == len(entries):
            return
        entries[pos] = last
        self._pos[last[-1]] = pos
        if pos > 0 and last < entries[(pos - 1) >> 1]:
            self._sift_toward_root(pos)
        else:
            self._sift_toward_leaves(pos)

    def decrease(self, entry: tuple) -> None:
        """Replace the entry for an existing cell with a smaller-keyed one."""
        pos = self._pos[entry[-1]]
        self._entries[pos] = entry
        self._sift_toward_root(pos)

    def cells(self):
        return self._pos.keys()

    def _sift_toward_root(self, pos: int) -> None:
        entries = self._entries
        item = entries[pos]
        moves = 0
        while pos > 0:
            parent_pos = (pos - 1) >> 1
            parent = entries[parent_pos]
            if item < parent:
                entries[pos] = parent
                self._pos[parent[-1]] = pos
                pos = parent_pos
                moves += 1
                continue
            break
        entries[pos] = item
        self._pos[item[-1]] = pos
        self.percolations += moves

    def _sift_toward_leaves(self, pos: int) -> None:
        entries = self._entries
        end = len(entries)
        item = entries[pos]
        moves = 0
        child = 2 * pos + 1
        while child < end:
            right = child + 1
            if right < end and entries[right] < entries[child]:
                child = right
            if entries[child] < item:
                entries[pos] = entries[child]
                self._pos[entries[pos][-1]] = pos
                pos = child
                child = 2 * pos + 1
                moves += 1
                continue
            break
        entries[pos] = item
        self._pos[item[-1]] = pos
        self.percolations += moves
