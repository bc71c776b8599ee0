"""Dyck paths as N/E words, and the geometry used to describe them.

A path of size n runs from (0, 0) to (n, n) with unit North and East steps
and never dips below the main diagonal y = x.  The r-th diagonal is the line
y = x + r.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

Point = tuple[int, int]


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise InvalidPathError(f"path may only contain N and E: {self.steps!r}")
        height = 0
        for s in self.steps:
            height += 1 if s == "N" else -1
            if height < 0:
                raise InvalidPathError(f"path goes below the diagonal: {self.steps}")
        if height != 0:
            raise InvalidPathError(f"unequal numbers of N and E steps: {self.steps}")

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        """Accept ``"NNEE"`` or the numeric form ``"1,1,0,0"`` (1 = N, 0 = E)."""
        text = text.strip().upper()
        if re.fullmatch(r"[NE\s,]*", text):
            return cls(re.sub(r"[\s,]", "", text))
        if re.fullmatch(r"[01\s,]*", text):
            return cls("".join("N" if c == "1" else "E" for c in re.sub(r"[\s,]", "", text)))
        raise InvalidPathError(f"cannot parse Dyck path {text!r}")

    @classmethod
    def elbow(cls, n: int) -> "DyckPath":
        return cls("N" * n + "E" * n)

    @classmethod
    def staircase(cls, n: int) -> "DyckPath":
        return cls("NE" * n)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    @cached_property
    def points(self) -> tuple[Point, ...]:
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def north_columns(self) -> tuple[int, ...]:
        """x-coordinate of the North step entering row i (rows 1..n)."""
        return tuple(x for (x, _), s in zip(self.points, self.steps) if s == "N")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return self.n


def all_paths(n: int) -> Iterator[DyckPath]:
    """Every Dyck path of size n, in lexicographic order with N < E."""
    buf = []

    def rec(up: int, down: int):
        if up == n and down == n:
            yield DyckPath("".join(buf))
            return
        if up < n:
            buf.append("N")
            yield from rec(up + 1, down)
            buf.pop()
        if down < up:
            buf.append("E")
            yield from rec(up, down + 1)
            buf.pop()

    yield from rec(0, 0)


def area(p: DyckPath) -> int:
    """Whole unit squares between the path and the main diagonal, by rows."""
    return sum(i - 1 - x for i, x in enumerate(p.north_columns, 1))


def peaks(p: DyckPath) -> list[Point]:
    return [p.points[j + 1] for j in range(len(p.steps) - 1) if p.steps[j:j + 2] == "NE"]


def max_peak_diagonal(p: DyckPath) -> int:
    """Largest r such that a peak lies on the r-th diagonal (0 for size 0)."""
    return max((y - x for x, y in peaks(p)), default=0)


def primary_dip(p: DyckPath) -> Point:
    return max(pt for pt in p.points if pt[0] == pt[1] and pt[0] < p.n)


def secondary_dip(p: DyckPath) -> Point | None:
    hits = [pt for pt in p.points if pt[1] - pt[0] == 1 and 0 < pt[1] < p.n]
    return hits[-1] if hits else None


def east_heights(p: DyckPath) -> list[int]:
    return [y for (x, y), s in zip(p.points, p.steps) if s == "E"]


def heights(p: DyckPath) -> list[int]:
    """Height of the path above each column x in 0..n-1."""
    return east_heights(p)


def path_leq(p: DyckPath, q: DyckPath) -> bool:
    """True iff ``p`` lies weakly below ``q``."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} != {q.n}")
    return all(a <= b for a, b in zip(heights(p), heights(q)))


# -- components --------------------------------------------------------------

class ComponentKind(enum.Enum):
    ELBOW = "elbow"
    LEDGE = "ledge"
    INITIAL_LEDGE = "initial-ledge"
    ISOLATED_POINT = "isolated-point"
    OTHER = "other"


@dataclass(frozen=True)
class Component:
    """A piece of the path above the r-th diagonal touching it only at its ends."""

    steps: str
    start: Point
    end: Point
    diagonal: int

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    @property
    def kind(self) -> ComponentKind:
        return classify_component(self)


def is_elbow_word(word: str) -> bool:
    k = len(word) // 2
    return k >= 1 and word == "N" * k + "E" * k


def is_ledge_word(word: str) -> bool:
    """``N^(k-1) E^a N E^b`` with a >= 1 and b >= 2."""
    m = re.fullmatch(r"(N+)(E+)N(E+)", word)
    if not m:
        return False
    k = len(m.group(1)) + 1
    return len(word) == 2 * k and len(m.group(3)) >= 2


def classify_component(c: Component) -> ComponentKind:
    if not c.steps:
        return ComponentKind.ISOLATED_POINT
    if is_elbow_word(c.steps):
        return ComponentKind.ELBOW
    if is_ledge_word(c.steps):
        if c.diagonal == 1 and c.start == (0, 1):
            return ComponentKind.INITIAL_LEDGE
        return ComponentKind.LEDGE
    return ComponentKind.OTHER


def subpath_system(p: DyckPath, r: int) -> list[Component]:
    """Components of the part of ``p`` weakly above the r-th diagonal.

    Pieces are cut at every lattice point on that diagonal; a diagonal point
    whose neighbouring steps both leave the region is an isolated point.
    """
    if not 0 <= r <= p.n:
        raise ValueError(f"diagonal {r} out of range for size {p.n}")
    pts = p.points
    comps: list[Component] = []
    cur_start = None
    cur_steps: list[str] = []
    for j, s in enumerate(p.steps):
        a, b = pts[j], pts[j + 1]
        a_in = a[1] - a[0] >= r
        b_in = b[1] - b[0] >= r
        if a_in and b_in:
            if cur_start is None:
                cur_start = a
            cur_steps.append(s)
            if b[1] - b[0] == r:
                comps.append(Component("".join(cur_steps), cur_start, b, r))
                cur_start, cur_steps = None, []
        elif a_in and a[1] - a[0] == r and (j == 0 or not _step_inside(pts, j - 1, r)):
            comps.append(Component("", a, a, r))
    last = pts[-1]
    if last[1] - last[0] == r and not _step_inside(pts, len(p.steps) - 1, r):
        comps.append(Component("", last, last, r))
    return comps


def _step_inside(pts, j: int, r: int) -> bool:
    if j < 0:
        return False
    a, b = pts[j], pts[j + 1]
    return a[1] - a[0] >= r and b[1] - b[0] >= r


def prime_components(p: DyckPath) -> list[DyckPath]:
    """Components of the main-diagonal system, as Dyck paths in their own right."""
    return [DyckPath(c.steps) for c in subpath_system(p, 0)]


# -- sphericality ------------------------------------------------------------

def _prime_is_spherical(tau: DyckPath) -> bool:
    # an isolated point (only for the empty path) is an elbow of size 0
    if not tau.steps or is_elbow_word(tau.steps) or is_ledge_word(tau.steps):
        return True
    inner = DyckPath(tau.steps[1:-1])
    parts = prime_components(inner)
    # the lowest first-diagonal component may be a ledge, all others elbows
    return all(is_elbow_word(m.steps) for m in parts[1:]) and (
        is_elbow_word(parts[0].steps) or is_ledge_word(parts[0].steps)
    )


def is_spherical_dyck(p: DyckPath) -> bool:
    """Every main-diagonal component is an elbow or a ledge, or else its
    first-diagonal components are elbows except the lowest, which may be a
    ledge hanging off the main diagonal."""
    return all(_prime_is_spherical(tau) for tau in prime_components(p))
