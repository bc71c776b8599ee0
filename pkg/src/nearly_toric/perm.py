"""Permutations of {1..n} in one-line notation, reduced words and patterns.

Conventions used throughout the package:

* A permutation is a tuple ``w`` with ``w[i-1] = w_i``, the value at ``i``.
* A word ``(a_1, ..., a_k)`` of simple transpositions is evaluated by
  applying the *leftmost* letter first, so ``w(x) = s_{a_k}(...s_{a_1}(x))``.
* ``multiply(u, v)`` is chosen so that concatenating words multiplies the
  permutations they evaluate to.  Under this product ``s_i * w`` swaps the
  entries in positions ``i`` and ``i+1`` of ``w``, which makes the left
  descent set ``{i : w_i > w_{i+1}}``.

The opposite reading, ``w = s_{a_1} o ... o s_{a_k}`` as composed functions
(rightmost letter applied first), is available through ``order=RIGHT_FIRST``.
It is the one under which the Coxeter-element sphericality test and the
25314 factor ``s_{i+2} s_{i+1} s_{i-1} s_i s_{i+1}`` hold.
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from itertools import combinations

Perm = tuple[int, ...]
Word = tuple[int, ...]

DEFAULT_MAX_VISITED = 10**6

LEFT_FIRST = "left-first"
RIGHT_FIRST = "right-first"


class InvalidPermutationError(ValueError):
    pass


class InvalidWordError(ValueError):
    pass


class SearchExhaustedError(RuntimeError):
    """The reduced-word search hit its visited-set cap before finishing."""


# -- construction and parsing ------------------------------------------------

def as_perm(seq: Iterable[int]) -> Perm:
    w = tuple(int(x) for x in seq)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse ``"2,6,3,1"``, ``"2 6 3 1"`` or the compact ``"2631"`` (n <= 9)."""
    text = text.strip()
    if not text:
        raise InvalidPermutationError("empty permutation")
    if re.fullmatch(r"\d+", text) and len(text) > 1 and len(text) <= 9:
        parts = list(text)
    else:
        parts = [p for p in re.split(r"[,\s]+", text) if p]
    try:
        return as_perm(int(p) for p in parts)
    except ValueError as exc:
        if isinstance(exc, InvalidPermutationError):
            raise
        raise InvalidPermutationError(f"cannot parse permutation {text!r}") from exc


def parse_word(text: str) -> Word:
    """Parse a space/comma separated list of transposition indices."""
    try:
        return tuple(int(p) for p in re.split(r"[,\s]+", text.strip()) if p)
    except ValueError as exc:
        raise InvalidWordError(f"cannot parse word {text!r}") from exc


def format_perm(w: Sequence[int], sep: str = " ") -> str:
    return sep.join(str(x) for x in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(w: Sequence[int]) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


# -- group structure ---------------------------------------------------------

def multiply(u: Sequence[int], v: Sequence[int]) -> Perm:
    """Product ``u * v``: the permutation evaluated by ``word(u) + word(v)``.

    As functions this is ``v o u``, i.e. ``(u * v)(x) = v(u(x))``.
    """
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} != {len(v)}")
    return tuple(v[x - 1] for x in u)


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """Function composition ``u o v``; equals ``multiply(v, u)``."""
    return multiply(v, u)


def _check_order(order: str) -> None:
    if order not in (LEFT_FIRST, RIGHT_FIRST):
        raise ValueError(f"unknown word order {order!r}")


def simple(i: int, n: int) -> Perm:
    if not 1 <= i < n:
        raise InvalidWordError(f"s_{i} is not a simple transposition of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def check_word(word: Sequence[int], n: int) -> None:
    for a in word:
        if not 1 <= a < n:
            raise InvalidWordError(f"letter {a} out of range for S_{n}")


def evaluate_word(word: Sequence[int], n: int, point: int | None = None, order: str = LEFT_FIRST):
    """Evaluate ``word`` in ``S_n``, leftmost letter first by default.

    With ``point`` given, return its image; otherwise return the one-line
    notation of the whole permutation.
    """
    _check_order(order)
    check_word(word, n)
    if order == RIGHT_FIRST:
        word = tuple(reversed(word))
    if point is not None:
        if not 1 <= point <= n:
            raise ValueError(f"point {point} outside 1..{n}")
        x = point
        for a in word:
            if x == a:
                x = a + 1
            elif x == a + 1:
                x = a
        return x
    # left multiplication by s_a swaps positions a, a+1; fold from the right
    w = list(range(1, n + 1))
    for a in reversed(word):
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def length(w: Sequence[int]) -> int:
    """Number of inversions, pairs i < j with w_i > w_j."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: Sequence[int], order: str = LEFT_FIRST) -> Word:
    """A reduced word for ``w``, peeling off the leftmost descent each step."""
    _check_order(order)
    if order == RIGHT_FIRST:
        return tuple(reversed(reduced_word(w)))
    cur = list(w)
    out = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                out.append(i + 1)
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                break
        else:
            return tuple(out)


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(evaluate_word(word, n)) == len(word)


def left_descent_set(w: Sequence[int], order: str = LEFT_FIRST) -> frozenset[int]:
    """Indices i with l(s_i w) < l(w) for the product matching ``order``.

    Left-first: positions with w_i > w_{i+1}.  Right-first: values i such
    that i+1 stands to the left of i.
    """
    _check_order(order)
    if order == RIGHT_FIRST:
        w = inverse(w)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def longest_element(indices: Iterable[int], n: int) -> Perm:
    """Longest element of the parabolic subgroup generated by ``indices``."""
    idx = set(indices)
    for i in idx:
        if not 1 <= i < n:
            raise ValueError(f"index {i} out of range for S_{n}")
    w = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in idx:
            j = i
            while j + 1 in idx:
                j += 1
            # run s_i..s_j reverses positions i..j+1
            w[i - 1:j + 1] = reversed(w[i - 1:j + 1])
            i = j + 1
        else:
            i += 1
    return tuple(w)


def support(w: Sequence[int]) -> frozenset[int]:
    """Letters appearing in (any) reduced word of ``w``."""
    out = set()
    running_max = 0
    for i, x in enumerate(w[:-1], 1):
        running_max = max(running_max, x)
        if running_max > i:
            out.add(i)
    return frozenset(out)


def is_coxeter_of_support(w: Sequence[int]) -> bool:
    """True iff some reduced word of ``w`` uses no letter twice."""
    return length(w) == len(support(w))


def commuting_factorization(w: Sequence[int]) -> list[Perm]:
    """Split ``w`` into commuting factors, one per maximal interval of its support."""
    n = len(w)
    supp = sorted(support(w))
    if not supp:
        return [tuple(w)]
    runs = []
    start = prev = supp[0]
    for i in supp[1:]:
        if i != prev + 1:
            runs.append((start, prev))
            start = i
        prev = i
    runs.append((start, prev))
    factors = []
    for a, b in runs:
        f = list(range(1, n + 1))
        f[a - 1:b + 1] = w[a - 1:b + 1]
        factors.append(tuple(f))
    return factors


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Bruhat order via the sorted-prefix (tableau) criterion."""
    if len(u) != len(w):
        raise ValueError(f"size mismatch: {len(u)} != {len(w)}")
    for i in range(1, len(u)):
        for a, b in zip(sorted(u[:i]), sorted(w[:i])):
            if a > b:
                return False
    return True


# -- patterns ----------------------------------------------------------------

def standardize(values: Sequence[int]) -> Perm:
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, pos in enumerate(order, 1):
        out[pos] = rank
    return tuple(out)


def count_pattern(w: Sequence[int], p: Sequence[int]) -> int:
    """Number of occurrences of the classical pattern ``p`` in ``w``.

    Backtracks over positions, pruning a partial occurrence as soon as its
    relative order disagrees with the corresponding prefix of ``p``.
    """
    n, k = len(w), len(p)
    if k == 0:
        return 1
    if k > n:
        return 0
    # for each pattern position j, the earlier positions whose value is the
    # nearest below / above p[j]; comparing against those two suffices
    below, above = [], []
    for j in range(k):
        lo = hi = None
        for t in range(j):
            if p[t] < p[j] and (lo is None or p[t] > p[lo]):
                lo = t
            if p[t] > p[j] and (hi is None or p[t] < p[hi]):
                hi = t
        below.append(lo)
        above.append(hi)

    chosen = [0] * k

    def extend(j: int, start: int) -> int:
        if j == k:
            return 1
        total = 0
        lo, hi = below[j], above[j]
        for pos in range(start, n - (k - j) + 1):
            x = w[pos]
            if lo is not None and x < chosen[lo]:
                continue
            if hi is not None and x > chosen[hi]:
                continue
            chosen[j] = x
            total += extend(j + 1, pos + 1)
        return total

    return extend(0, 0)


def avoids_all(w: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    by_size: dict[int, set[Perm]] = {}
    for p in patterns:
        by_size.setdefault(len(p), set()).add(tuple(p))
    for k, pats in by_size.items():
        if k > len(w):
            continue
        for idx in combinations(range(len(w)), k):
            if standardize([w[i] for i in idx]) in pats:
                return False
    return True


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    return not avoids_all(w, [p])


# -- reduced-word graph ------------------------------------------------------

def braid_neighbors(word: Word) -> Iterable[Word]:
    """Words one commutation or braid move away from ``word``."""
    for j in range(len(word) - 1):
        a, b = word[j], word[j + 1]
        if abs(a - b) >= 2:
            yield word[:j] + (b, a) + word[j + 2:]
        elif j + 2 < len(word) and abs(a - b) == 1 and word[j + 2] == a:
            yield word[:j] + (b, a, b) + word[j + 3:]


def reduced_words_reachable(
    word: Sequence[int],
    predicate: Callable[[Word], bool],
    n: int | None = None,
    max_visited: int = DEFAULT_MAX_VISITED,
) -> Word | None:
    """Breadth-first search of the reduced-word graph from ``word``.

    Returns the first word (in BFS order) satisfying ``predicate``, or None
    once every reduced word of the element has been seen. Raises
    SearchExhaustedError if more than ``max_visited`` words would be needed.
    """
    start = tuple(word)
    if n is None:
        n = max(start, default=0) + 1
    if not is_reduced(start, n):
        raise InvalidWordError(f"word {start} is not reduced")
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if predicate(cur):
            return cur
        for nxt in braid_neighbors(cur):
            if nxt not in seen:
                if len(seen) >= max_visited:
                    raise SearchExhaustedError(
                        f"more than {max_visited} reduced words visited"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return None


def all_reduced_words(
    w: Sequence[int], order: str = LEFT_FIRST, max_visited: int = DEFAULT_MAX_VISITED
) -> set[Word]:
    start = reduced_word(w, order)
    found: set[Word] = set()

    def collect(word: Word) -> bool:
        found.add(word)
        return False

    reduced_words_reachable(start, collect, n=len(w), max_visited=max_visited)
    return found


def factor_positions(word: Sequence[int], factor: Sequence[int]) -> list[int]:
    k = len(factor)
    factor = tuple(factor)
    return [m for m in range(len(word) - k + 1) if tuple(word[m:m + k]) == factor]


def factor_without_other_repetition(word: Sequence[int], factor: Sequence[int]) -> int | None:
    """Start index of ``factor`` in ``word`` such that the letters outside it
    are pairwise distinct and absent from the factor, or None."""
    inside = set(factor)
    for m in factor_positions(word, factor):
        rest = list(word[:m]) + list(word[m + len(factor):])
        if len(set(rest)) == len(rest) and not inside.intersection(rest):
            return m
    return None


def has_factor_no_other_repetition(
    w: Sequence[int],
    factor: Sequence[int],
    order: str = LEFT_FIRST,
    max_visited: int = DEFAULT_MAX_VISITED,
) -> bool:
    if not factor:
        return False
    hit = reduced_words_reachable(
        reduced_word(w, order),
        lambda word: factor_without_other_repetition(word, factor) is not None,
        n=len(w),
        max_visited=max_visited,
    )
    return hit is not None
