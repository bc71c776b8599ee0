"""Bandlow-Killpatrick bijection between Dyck paths and 312-avoiding permutations.

Each square between a path and the main diagonal is filled with a simple
transposition: in row i (the strip i-1 <= y <= i) the square next to the
diagonal gets s_{i-1} and indices drop by one moving left, up to the path.
Reading the rows top to bottom, each left to right, gives a reduced word,
which is evaluated leftmost letter first.
"""

from __future__ import annotations

from collections.abc import Sequence

from .dyck import DyckPath, all_paths, area
from .perm import Perm, Word, contains, evaluate_word, length

PATTERN_312 = (3, 1, 2)


class NotAvoiding312Error(ValueError):
    pass


def segments(p: DyckPath) -> list[Word]:
    """Per-row words, top row first; empty rows give ``()``."""
    rows = []
    for i, x in enumerate(p.north_columns, 1):
        rows.append(tuple(range(x + 1, i)))
    return rows[::-1]


def reading_word(p: DyckPath) -> Word:
    return tuple(a for seg in segments(p) for a in seg)


def path_to_perm(p: DyckPath) -> Perm:
    if p.n == 0:
        return ()
    return evaluate_word(reading_word(p), p.n)


def perm_to_path(w: Sequence[int]) -> DyckPath:
    """Inverse of ``path_to_perm``.

    The top row's segment sends x+1 to n, where x is the column of the row's
    North step, so x+1 is the position of n.  Deleting n leaves the permutation
    of the remaining rows, and so on down.
    """
    w = tuple(w)
    if contains(w, PATTERN_312):
        raise NotAvoiding312Error(f"{w} contains 312")
    cur = list(w)
    cols = []
    for value in range(len(w), 0, -1):
        pos = cur.index(value)
        cols.append(pos)
        del cur[pos]
    cols.reverse()
    steps = []
    x = 0
    for c in cols:
        steps.append("E" * (c - x) + "N")
        x = c
    steps.append("E" * (len(w) - x))
    return DyckPath("".join(steps))


def perm_to_path_search(w: Sequence[int]) -> DyckPath:
    """Slow inverse by scanning paths of the right area; used as a cross-check."""
    w = tuple(w)
    if contains(w, PATTERN_312):
        raise NotAvoiding312Error(f"{w} contains 312")
    target = length(w)
    for p in all_paths(len(w)):
        if area(p) == target and path_to_perm(p) == w:
            return p
    raise AssertionError(f"no Dyck path maps to {w}")
