"""Lattice-path statistics for the m = 0 and m = 1 cases of the recurrence.

Paths are plain strings over ``U`` and ``D``. Distributions are computed by
exhaustive enumeration only; the point is to check the recurrence terms
independently of any formula.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ._accel import kernels
from .numbers import recurrence_terms

CONSTRAINTS = ("none", "dyck", "starts_up")
STATS = ("duu", "odd_inclines_halved", "even_inclines_halved")


class InvariantViolation(ValueError):
    pass


def is_dyck(p: str) -> bool:
    height = 0
    for s in p:
        height += 1 if s == "U" else -1
        if height < 0:
            return False
    return height == 0


def duu_count(p: str) -> int:
    return kernels.duu_count(p)


def incline_locations(p: str) -> list[int]:
    """1-based positions i where steps i and i+1 are equal."""
    return [i + 1 for i in range(len(p) - 1) if p[i] == p[i + 1]]


def incline_parity_count(p: str, parity: str) -> int:
    odd, even = kernels.incline_parity_counts(p)
    if parity == "odd":
        return odd
    if parity == "even":
        return even
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def _dyck_paths(n):
    out = []

    def grow(prefix, ups, height):
        if len(prefix) == 2 * n:
            out.append("".join(prefix))
            return
        if ups < n:
            prefix.append("U")
            grow(prefix, ups + 1, height + 1)
            prefix.pop()
        if height > 0:
            prefix.append("D")
            grow(prefix, ups, height - 1)
            prefix.pop()

    grow([], 0, 0)
    return out


def enumerate_paths(ups: int, downs: int, constraint: str = "none") -> list[str]:
    """All paths with the given step counts, in lexicographic order (U < D)."""
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    if ups < 0 or downs < 0:
        raise ValueError("step counts must be nonnegative")
    if constraint == "dyck":
        if ups != downs:
            raise ValueError("a Dyck path needs ups == downs")
        return _dyck_paths(ups)
    if constraint == "starts_up":
        if ups == 0:
            raise ValueError("no path with zero upsteps starts up")
        return ["U" + p for p in enumerate_paths(ups - 1, downs)]
    length = ups + downs
    paths = []
    for down_pos in combinations(range(length), downs):
        steps = ["U"] * length
        for i in down_pos:
            steps[i] = "D"
        paths.append("".join(steps))
    # combinations of D positions come out in reverse lexicographic path order
    paths.sort(key=lambda p: p.replace("U", "0").replace("D", "1"))
    return paths


def statistic(p: str, stat: str) -> int:
    if stat == "duu":
        return kernels.duu_count(p)
    odd, even = kernels.incline_parity_counts(p)
    if stat == "odd_inclines_halved":
        raw = odd
    elif stat == "even_inclines_halved":
        raw = even
    else:
        raise ValueError(f"unknown statistic {stat!r}")
    if raw % 2:
        raise InvariantViolation(f"path {p} has an odd number ({raw}) of such inclines")
    return raw // 2


def statistic_distribution(paths, stat: str) -> dict[int, int]:
    counts = Counter(statistic(p, stat) for p in paths)
    return dict(sorted(counts.items()))


def family_for(m: int, n: int, stat: str) -> tuple[int, int, str]:
    """(ups, downs, constraint) of the path family interpreting the recurrence."""
    if m == 0:
        return (n, n - 1, "none") if stat == "duu" else (n, n, "starts_up")
    if m == 1:
        return (n, n, "dyck")
    raise ValueError(f"path interpretations exist for m in (0, 1), got {m}")


def default_incline_stat(m: int) -> str:
    return "odd_inclines_halved" if m == 0 else "even_inclines_halved"


@dataclass
class StatCheck:
    stat: str
    family: tuple[int, int, str]
    distribution: dict[int, int]
    rows: list[tuple[int, int, Fraction, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row[3] for row in self.rows)


@dataclass
class InterpretationReport:
    m: int
    n: int
    checks: list[StatCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def check_statistic(m: int, n: int, stat: str) -> StatCheck:
    family = family_for(m, n, stat)
    dist = statistic_distribution(enumerate_paths(*family), stat)
    terms = recurrence_terms(m, n)
    rows = []
    for k in sorted(set(terms) | set(dist)):
        got = dist.get(k, 0)
        want = terms.get(k, Fraction(0))
        rows.append((k, got, want, got == want))
    return StatCheck(stat, family, dist, rows)


def verify_interpretation(m: int, n: int) -> InterpretationReport:
    """Compare brute-force distributions against the recurrence terms, per k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    checks = [check_statistic(m, n, "duu"), check_statistic(m, n, default_incline_stat(m))]
    return InterpretationReport(m, n, checks)
