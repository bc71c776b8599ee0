"""Exact counts of the complexity-one classes, three ways.

* ``brute_count`` walks S_n and applies the predicates of ``classify``.
* ``closed_form`` evaluates the Fibonacci formulas.
* ``series_coefficient`` expands the rational generating functions.

``verify`` lines the three up, together with the identities that tie the
classes to each other.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

from .classify import P25314, P3412, P312
from .perm import count_pattern

log = logging.getLogger(__name__)

CLASSES = ("a", "b", "d", "r", "t", "nt312", "complexity_one_total")
DEFAULT_N_CAP = 10
HARD_N_CAP = 11
THREADS_ENV = "NEARLY_TORIC_THREADS"


class ConventionFault(ArithmeticError):
    """A closed form did not divide evenly, so the Fibonacci indexing is off."""


class SizeLimitError(ValueError):
    pass


# -- Fibonacci and closed forms ----------------------------------------------

@lru_cache(maxsize=None)
def _fib_pair(k: int, f0: int, f1: int) -> tuple[int, int]:
    a, b = f0, f1
    for _ in range(k):
        a, b = b, a + b
    return a, b


def fibonacci(k: int, *, f0: int = 0, f1: int = 1) -> int:
    """F_k with F_0 = 0, F_1 = 1 unless other seeds are given.

    >>> [fibonacci(k) for k in range(8)]
    [0, 1, 1, 2, 3, 5, 8, 13]
    """
    if k < 0:
        raise ValueError(f"negative Fibonacci index {k}")
    return _fib_pair(k, f0, f1)[0]


def _exact_fifth(x: int, what: str) -> int:
    q, rem = divmod(x, 5)
    if rem:
        raise ConventionFault(f"{what}: {x} is not divisible by 5")
    return q


def closed_form(n: int, class_name: str, *, f0: int = 0, f1: int = 1) -> int | None:
    """Closed-form count, or None outside the formula's range of validity."""
    F = lambda k: fibonacci(k, f0=f0, f1=f1)  # noqa: E731
    if class_name == "a":
        if n < 3:
            return None
        return _exact_fifth(2 * (2 * n - 5) * F(2 * n - 6) + (7 * n - 16) * F(2 * n - 5), f"a_{n}")
    if class_name == "b":
        if n < 5:
            return None
        return _exact_fifth(2 * (2 * n - 7) * F(2 * n - 8) + (7 * n - 23) * F(2 * n - 7), f"b_{n}")
    if class_name == "r":
        return (n - 2) * F(2 * n - 4) if n >= 5 else None
    if class_name == "nt312":
        return (n - 2) * 2 ** (n - 3) if n >= 3 else None
    if class_name == "d":
        return closed_form(n - 2, "a", f0=f0, f1=f1) if n >= 5 else None
    if class_name in ("t", "complexity_one_total"):
        if n < 5:
            return None
        first = "r" if class_name == "t" else "a"
        return closed_form(n, first, f0=f0, f1=f1) + closed_form(n, "b", f0=f0, f1=f1)
    raise ValueError(f"unknown class {class_name!r}")


# -- rational series -----------------------------------------------------------

def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


@dataclass(frozen=True)
class RationalSeries:
    """numerator / denominator, both as ascending integer coefficient lists."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def coefficients(self, upto: int) -> list[int]:
        """c_0..c_upto from c_k = num_k - sum_{j>=1} den_j c_{k-j}."""
        num, den = self.numerator, self.denominator
        c: list[int] = []
        for k in range(upto + 1):
            v = num[k] if k < len(num) else 0
            for j in range(1, min(k, len(den) - 1) + 1):
                v -= den[j] * c[k - j]
            c.append(v)
        return c

    def coefficient(self, k: int) -> int:
        return self.coefficients(k)[k]


def series_coeffs(s: RationalSeries, upto: int) -> list[int]:
    return s.coefficients(upto)


DEN = tuple(poly_mul([1, -3, 1], [1, -3, 1]))  # 1 - 6x + 11x^2 - 6x^3 + x^4


def _over_den(num: list[int], polynomial_part: list[int] | None = None) -> RationalSeries:
    if polynomial_part:
        num = poly_add(num, poly_mul(polynomial_part, list(DEN)))
    return RationalSeries(tuple(num), DEN)


SERIES: dict[str, RationalSeries] = {
    "a": _over_den([0, 0, 0, 1]),
    "b": _over_den([0, 0, 0, 0, 1]),
    "d": _over_den([0, 0, 0, 0, 0, 1]),
    "t": _over_den([0, 0, 0, 1, 1, -1]),
    "r": _over_den([0, 0, 0, 1, 0, -1], [0, 0, 0, -1, -6]),
    "complexity_one_total": _over_den([0, 0, 0, 1, 1], [0, 0, 0, -1]),
}
# Smallest n from which each expansion counts the class.
SERIES_FROM = {"a": 0, "b": 0, "d": 0, "t": 0, "r": 5, "complexity_one_total": 4}


def series_coefficient(n: int, class_name: str) -> int | None:
    s = SERIES.get(class_name)
    if s is None or n < SERIES_FROM[class_name]:
        return None
    return s.coefficient(n)


# -- brute force -----------------------------------------------------------------

def _count321_capped(w: tuple[int, ...], cap: int = 1) -> int:
    """Occurrences of 321, counted through the middle entry; stops past ``cap``."""
    total = 0
    n = len(w)
    for j in range(1, n - 1):
        m = w[j]
        left = sum(1 for x in w[:j] if x > m)
        if left:
            total += left * sum(1 for x in w[j + 1:] if x < m)
            if total > cap:
                return total
    return total


def _tally(perms) -> dict[str, int]:
    counts = dict.fromkeys(CLASSES, 0)
    for w in perms:
        c321 = _count321_capped(w)
        if c321 > 1:
            continue
        c3412 = count_pattern(w, P3412)
        in_a = c321 == 1 and c3412 == 0
        in_b = c321 == 0 and c3412 == 1
        if not (in_a or in_b):
            continue
        in_m = in_a and count_pattern(w, P25314) > 0
        counts["a"] += in_a
        counts["b"] += in_b
        counts["d"] += in_m
        counts["r"] += in_a and not in_m
        counts["t"] += (in_a and not in_m) or in_b
        counts["complexity_one_total"] += 1
        counts["nt312"] += count_pattern(w, P312) == 0
    return counts


def _block(args: tuple[int, int]) -> dict[str, int]:
    n, first = args
    rest = [x for x in range(1, n + 1) if x != first]
    return _tally((first,) + tail for tail in itertools.permutations(rest))


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
    return 1


def check_size(n: int, max_n_override: bool = False) -> None:
    cap = HARD_N_CAP if max_n_override else DEFAULT_N_CAP
    if n < 0:
        raise SizeLimitError(f"size must be non-negative, got {n}")
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the cap of {cap}")
    if n > DEFAULT_N_CAP:
        log.warning("enumerating S_%d: %d permutations, expect a long run", n, _factorial(n))


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def brute_counts(n: int, workers: int | None = None, max_n_override: bool = False) -> dict[str, int]:
    """Counts of every class over S_n.

    With more than one worker the first entry of the one-line word splits S_n
    into n blocks, farmed out to processes (the loop is pure Python, so
    threads would just queue on the interpreter lock).
    """
    check_size(n, max_n_override)
    workers = default_workers() if workers is None else workers
    if n == 0:
        return _tally([()])
    if workers <= 1 or n < 7:
        return _tally(itertools.permutations(range(1, n + 1)))
    total = dict.fromkeys(CLASSES, 0)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_block, [(n, f) for f in range(1, n + 1)]):
            for k, v in part.items():
                total[k] += v
    return total


def brute_count(n: int, class_name: str, workers: int | None = None,
                max_n_override: bool = False) -> int:
    if class_name not in CLASSES:
        raise ValueError(f"unknown class {class_name!r}")
    return brute_counts(n, workers, max_n_override)[class_name]


# -- verification harness ----------------------------------------------------------

@dataclass(frozen=True)
class CountReport:
    n: int
    class_name: str
    brute: int
    formula: int | None
    series: int | None
    agree: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _report(n: int, name: str, brute: int, formula, series) -> CountReport:
    values = {brute} | {v for v in (formula, series) if v is not None}
    return CountReport(n, name, brute, formula, series, len(values) == 1)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"identity": self.name, "n": self.n, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass
class Verification:
    reports: list[CountReport]
    identities: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.reports) and all(c.holds for c in self.identities)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "class", "brute", "formula", "series", "agree"])
        for r in self.reports:
            writer.writerow([r.n, r.class_name, r.brute,
                             "" if r.formula is None else r.formula,
                             "" if r.series is None else r.series,
                             str(r.agree).lower()])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.reports], indent=2)


def verify(n_max: int, workers: int | None = None, max_n_override: bool = False,
           *, f0: int = 0, f1: int = 1) -> Verification:
    """Brute force vs closed form vs series for every class and n <= n_max.

    A closed form that fails to divide by 5 is recorded as a disagreement
    rather than raised, so a bad convention shows up in the table.
    """
    check_size(n_max, max_n_override)
    brute = {n: brute_counts(n, workers, max_n_override) for n in range(n_max + 1)}
    reports = []
    for n in range(n_max + 1):
        for name in CLASSES:
            try:
                formula = closed_form(n, name, f0=f0, f1=f1)
            except ConventionFault as exc:
                log.error("%s", exc)
                reports.append(CountReport(n, name, brute[n][name], None, None, False))
                continue
            reports.append(_report(n, name, brute[n][name], formula, series_coefficient(n, name)))

    checks = []
    for n in range(n_max + 1):
        c = brute[n]
        if n + 1 <= n_max:
            checks.append(IdentityCheck("a_n = b_{n+1}", n, c["a"], brute[n + 1]["b"]))
        if n + 2 <= n_max:
            checks.append(IdentityCheck("d_{n+2} = a_n", n, brute[n + 2]["d"], c["a"]))
        if n >= 2:
            checks.append(IdentityCheck("r_n = a_n - a_{n-2}", n, c["r"], c["a"] - brute[n - 2]["a"]))
        checks.append(IdentityCheck("t_n = r_n + b_n", n, c["t"], c["r"] + c["b"]))
    return Verification(reports, checks)
