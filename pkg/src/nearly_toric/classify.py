"""Pattern-based classification of type A Schubert varieties X_w.

Everything here is a predicate on the one-line word of w:

* smooth: avoids 3412 and 4231;
* T-complexity one: exactly one 321 and no 3412 (smooth kind), or exactly
  one 3412 and no 321 (singular kind);
* spherical: avoids the 21 patterns in ``SPHERICAL_PATTERNS``, or, as an
  independent second test, ``w0(J(w)) o w`` is a Coxeter element;
* nearly toric: complexity one and spherical.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import asdict, dataclass

from .dyck import DyckPath, peaks
from .perm import (
    RIGHT_FIRST,
    Perm,
    avoids_all,
    compose,
    count_pattern,
    is_coxeter_of_support,
    left_descent_set,
    longest_element,
)


def _pats(*words: str) -> tuple[Perm, ...]:
    return tuple(tuple(int(c) for c in word) for word in words)


SPHERICAL_PATTERNS = _pats(
    "24531", "25314", "25341", "34512", "34521", "35412", "35421",
    "42531", "45123", "45213", "45231", "45312", "52314", "52341",
    "53124", "53142", "53412", "53421", "54123", "54213", "54231",
)
SMOOTH_SPHERICAL_PATTERNS = _pats(
    "24531", "25314", "34521", "35421", "53124", "54123", "54213", "3412", "4231",
)

P321 = (3, 2, 1)
P312 = (3, 1, 2)
P3412 = (3, 4, 1, 2)
P4231 = (4, 2, 3, 1)
P25314 = (2, 5, 3, 1, 4)


class ComplexityOne(enum.Enum):
    NO = "no"
    SMOOTH = "smooth"
    SINGULAR = "singular"


def is_smooth(w: Sequence[int]) -> bool:
    return avoids_all(w, (P3412, P4231))


def complexity_one_kind(w: Sequence[int]) -> ComplexityOne:
    c321 = count_pattern(w, P321)
    if c321 > 1:
        return ComplexityOne.NO
    c3412 = count_pattern(w, P3412)
    if c321 == 1 and c3412 == 0:
        return ComplexityOne.SMOOTH
    if c321 == 0 and c3412 == 1:
        return ComplexityOne.SINGULAR
    return ComplexityOne.NO


def is_spherical_patterns(w: Sequence[int]) -> bool:
    return avoids_all(w, SPHERICAL_PATTERNS)


def coxeter_part(w: Sequence[int]) -> Perm:
    """``w0(J(w)) o w`` with J(w) the left descents for composition of functions."""
    J = left_descent_set(w, order=RIGHT_FIRST)
    return compose(longest_element(J, len(w)), w)


def is_spherical_coxeter(w: Sequence[int]) -> bool:
    # Only this product order agrees with the pattern test; the other order,
    # w o w0(J(w)), already disagrees on 231 in S_3.
    return is_coxeter_of_support(coxeter_part(w))


def is_nearly_toric(w: Sequence[int]) -> bool:
    kind = complexity_one_kind(w)
    if kind is ComplexityOne.SINGULAR:
        return True
    if kind is ComplexityOne.SMOOTH:
        return count_pattern(w, P25314) == 0
    return False


def class_membership(w: Sequence[int]) -> tuple[bool, bool, bool]:
    """Membership in (A_n, B_n, M_n).

    A_n: one 321, no 3412.  B_n: one 3412, no 321.  M_n: A_n and contains 25314.
    """
    kind = complexity_one_kind(w)
    in_a = kind is ComplexityOne.SMOOTH
    in_b = kind is ComplexityOne.SINGULAR
    in_m = in_a and count_pattern(w, P25314) >= 1
    return in_a, in_b, in_m


def avoids_312(w: Sequence[int]) -> bool:
    return count_pattern(w, P312) == 0


def in_nt312(w: Sequence[int]) -> bool:
    return avoids_312(w) and complexity_one_kind(w) is not ComplexityOne.NO


def unique_321_peak_criterion(p: DyckPath) -> bool:
    """Exactly one peak on the third diagonal and none higher."""
    diags = [y - x for x, y in peaks(p)]
    return diags.count(3) == 1 and max(diags, default=0) <= 3


@dataclass(frozen=True)
class ClassificationRecord:
    smooth: bool
    complexity_one: ComplexityOne
    spherical_by_patterns: bool
    spherical_by_coxeter: bool
    nearly_toric: bool
    in_A: bool
    in_B: bool
    in_M: bool
    avoids_312: bool
    in_NT312: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["complexity_one"] = self.complexity_one.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationRecord":
        d = dict(d)
        d["complexity_one"] = ComplexityOne(d["complexity_one"])
        return cls(**d)


def classify(w: Sequence[int]) -> ClassificationRecord:
    w = tuple(w)
    kind = complexity_one_kind(w)
    in_a, in_b, in_m = class_membership(w)
    a312 = avoids_312(w)
    return ClassificationRecord(
        smooth=is_smooth(w),
        complexity_one=kind,
        spherical_by_patterns=is_spherical_patterns(w),
        spherical_by_coxeter=is_spherical_coxeter(w),
        nearly_toric=is_nearly_toric(w),
        in_A=in_a,
        in_B=in_b,
        in_M=in_m,
        avoids_312=a312,
        in_NT312=a312 and kind is not ComplexityOne.NO,
    )
