"""The bijection Psi from M_{n+1} onto B_n, and its inverse.

Elements of M_{n+1} are exactly the permutations with a reduced word
containing ``s_{i+2} s_{i+1} s_{i-1} s_i s_{i+1}`` and no other repeated
letter; elements of B_n those with a reduced word containing
``s_i s_{i+1} s_{i-1} s_i`` and no other repeated letter.

Two versions of the forward map live here.

``SHIFT`` (the default) replaces the first factor by the second and lowers
every letter above i+2 by one.  Outside the factor the word is a set of
distinct letters, and the permutation only remembers which of two adjacent
letters comes first, so this is a bijection with an obvious inverse.

``LITERAL`` keeps letters above i+2 in place and renames the single s_n, if
present, to s_{i+2}.  The two agree when nothing sits above the factor, or
when the only letter above it is s_n = s_{i+3}.  From M_7 on ``LITERAL`` is
neither injective nor surjective: 2531647 and 2631457 both go to 341265.

Words in this module are read as composed functions (rightmost letter
applied first), since that is the reading under which 25314 = s4 s3 s1 s2 s3.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .classify import class_membership
from .perm import (
    DEFAULT_MAX_VISITED,
    RIGHT_FIRST,
    Perm,
    Word,
    all_reduced_words,
    evaluate_word,
    format_perm,
    reduced_word,
    reduced_words_reachable,
)


class NotInClassError(ValueError):
    pass


class Variant(enum.Enum):
    SHIFT = "shift"
    LITERAL = "literal"


class Case(enum.IntEnum):
    CASE1 = 1  # the factor already uses s_n
    CASE2 = 2  # s_n occurs once, outside the factor
    CASE3 = 3  # s_n does not occur


def m_factor(i: int) -> Word:
    return (i + 2, i + 1, i - 1, i, i + 1)


def b_factor(i: int) -> Word:
    return (i, i + 1, i - 1, i)


@dataclass(frozen=True)
class PsiWitness:
    """A reduced word of v in M_{n+1} exhibiting the 25314 factor.

    ``factor_position`` and ``d`` are 1-based letter positions in ``word``.
    """

    word: Word
    factor_position: int
    pivot_i: int
    case: Case
    d: int | None = None

    def to_dict(self) -> dict:
        return {
            "word": list(self.word),
            "factor_position": self.factor_position,
            "pivot_i": self.pivot_i,
            "case": int(self.case),
            "d": self.d,
        }


def _locate(word: Word, factor_of, lo: int, hi: int) -> tuple[int, int] | None:
    """First (m, i) such that ``factor_of(i)`` sits at index m and every other
    letter of ``word`` is distinct and avoids the factor's letters."""
    for i in range(lo, hi + 1):
        f = factor_of(i)
        k = len(f)
        for m in range(len(word) - k + 1):
            if word[m:m + k] != f:
                continue
            rest = word[:m] + word[m + k:]
            if len(set(rest)) == len(rest) and not set(f).intersection(rest):
                return m, i
    return None


def _m_locate(word: Word, size: int):
    return _locate(word, m_factor, 2, size - 3)


def _b_locate(word: Word, size: int):
    return _locate(word, b_factor, 2, size - 2)


def _witness_from(word: Word, m: int, i: int, size: int) -> PsiWitness:
    top = size - 1  # the letter s_n when size = n + 1
    if i + 2 == top:
        return PsiWitness(word, m + 1, i, Case.CASE1)
    if top in word:
        return PsiWitness(word, m + 1, i, Case.CASE2, word.index(top) + 1)
    return PsiWitness(word, m + 1, i, Case.CASE3)


def find_witness(v: Sequence[int], max_visited: int = DEFAULT_MAX_VISITED) -> PsiWitness:
    v = tuple(v)
    if not class_membership(v)[2]:
        raise NotInClassError(f"{format_perm(v)} is not in M_{len(v)}")
    size = len(v)
    word = reduced_words_reachable(
        reduced_word(v, RIGHT_FIRST),
        lambda wd: _m_locate(wd, size) is not None,
        n=size,
        max_visited=max_visited,
    )
    if word is None:
        raise AssertionError(f"no 25314 witness word for {format_perm(v)}")
    m, i = _m_locate(word, size)
    return _witness_from(word, m, i, size)


def all_witnesses(v: Sequence[int]) -> list[PsiWitness]:
    """Every (word, position) witness of v; used to check pivot uniqueness."""
    v = tuple(v)
    size = len(v)
    out = []
    for word in sorted(all_reduced_words(v, RIGHT_FIRST)):
        for i in range(2, size - 2):
            for m in range(len(word) - 4):
                if word[m:m + 5] == m_factor(i):
                    rest = word[:m] + word[m + 5:]
                    if len(set(rest)) == len(rest) and not set(m_factor(i)).intersection(rest):
                        out.append(_witness_from(word, m, i, size))
    return out


def psi_word(witness: PsiWitness, variant: Variant = Variant.SHIFT) -> Word:
    i = witness.pivot_i
    m = witness.factor_position - 1
    word = list(witness.word)
    if variant is Variant.SHIFT:
        word = [a - 1 if a > i + 2 else a for a in word]
    elif witness.case is Case.CASE2:
        word[witness.d - 1] = i + 2
    word[m:m + 5] = b_factor(i)
    return tuple(word)


def psi(v: Sequence[int], variant: Variant = Variant.SHIFT,
        max_visited: int = DEFAULT_MAX_VISITED) -> Perm:
    """Image of v in M_{n+1}, an element of B_n.

    >>> psi((2, 6, 3, 1, 4, 7, 8, 5), Variant.LITERAL)
    (3, 6, 1, 2, 4, 7, 5)
    >>> psi((2, 6, 3, 1, 4, 7, 8, 5))
    (3, 5, 1, 2, 6, 7, 4)
    """
    return psi_with_witness(v, variant, max_visited)[0]


def psi_with_witness(v: Sequence[int], variant: Variant = Variant.SHIFT,
                     max_visited: int = DEFAULT_MAX_VISITED) -> tuple[Perm, PsiWitness]:
    witness = find_witness(v, max_visited)
    n = len(tuple(v)) - 1
    return evaluate_word(psi_word(witness, variant), n, order=RIGHT_FIRST), witness


def find_b_witness(w: Sequence[int], max_visited: int = DEFAULT_MAX_VISITED) -> tuple[Word, int, int]:
    """A reduced word of w in B_n with the 3412 factor, as (word, m, i) with m 0-based."""
    w = tuple(w)
    if not class_membership(w)[1]:
        raise NotInClassError(f"{format_perm(w)} is not in B_{len(w)}")
    size = len(w)
    word = reduced_words_reachable(
        reduced_word(w, RIGHT_FIRST),
        lambda wd: _b_locate(wd, size) is not None,
        n=size,
        max_visited=max_visited,
    )
    if word is None:
        raise AssertionError(f"no 3412 witness word for {format_perm(w)}")
    m, i = _b_locate(word, size)
    return word, m, i


def psi_inverse_word(word: Word, m: int, i: int, n: int,
                     variant: Variant = Variant.SHIFT) -> Word:
    out = list(word)
    if variant is Variant.SHIFT:
        out = [a + 1 if a >= i + 2 else a for a in out]
    elif i == n - 2:
        pass
    elif i + 2 in out:
        out[out.index(i + 2)] = n
    out[m:m + 4] = m_factor(i)
    return tuple(out)


def psi_inverse(w: Sequence[int], variant: Variant = Variant.SHIFT,
                max_visited: int = DEFAULT_MAX_VISITED) -> Perm:
    """Preimage of w in B_n, an element of M_{n+1}.

    With ``Variant.LITERAL`` the result need not map back to w, since that
    version of the forward map is not onto.
    """
    w = tuple(w)
    word, m, i = find_b_witness(w, max_visited)
    n = len(w)
    return evaluate_word(psi_inverse_word(word, m, i, n, variant), n + 1, order=RIGHT_FIRST)
