"""The (r, u) coding of rooted aligned cubic trees.

A rooted n-ctree is coded by ``r``, the direction of the root edge in
multiples of 60 degrees counterclockwise from South, and ``u``, the leaf gap
sequence: ``u[i] + 2`` edges are traversed between the i-th and (i+1)-th
leaf of a counterclockwise preorder walk. An n-ctree has ``n + 2`` leaves,
so ``len(u) == n + 2`` and ``sum(u) == 2n - 2``.

The 0-ctree (a single edge) does not fit this pattern and is written with an
empty sequence, ``r:-`` in text form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from ._accel import kernels


class CodeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CodeRangeError(ValueError):
    pass


class PruneError(ValueError):
    """Raised when the first zero of a sequence cannot be pruned."""

    def __init__(self, reason: str, index: int | None = None):
        super().__init__(reason if index is None else f"{reason} (index {index})")
        self.reason = reason
        self.index = index


@dataclass(frozen=True, order=True)
class CtreeCode:
    r: int
    u: tuple[int, ...]

    @property
    def n(self) -> int:
        return max(len(self.u) - 2, 0)

    def __str__(self) -> str:
        return format_code(self)


@dataclass
class ValidationTrace:
    steps: list[tuple[int, ...]]
    valid: bool
    reason: str = ""
    index: int | None = None
    # 0-based position of the zero removed at each pruning step
    positions: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


_CODE_RE = re.compile(r"(-?\d+):(-|-?\d+(?:,-?\d+)*)\Z")


def parse_code(text: str) -> CtreeCode:
    """Parse ``r:u1,u2,...`` (or ``r:-`` for the 0-ctree).

    Only the structure is checked here; use :func:`validate` for
    combinatorial validity.
    """
    m = _CODE_RE.match(text)
    if m is None:
        pos = _first_bad_position(text)
        raise CodeSyntaxError(f"malformed code {text!r}", pos)
    r = int(m.group(1))
    if not 0 <= r <= 5:
        raise CodeRangeError(f"rotation {r} not in 0..5")
    body = m.group(2)
    if body == "-":
        return CtreeCode(r, ())
    u = tuple(int(x) for x in body.split(","))
    for i, x in enumerate(u):
        if x < 0:
            raise CodeRangeError(f"negative entry u[{i + 1}] = {x}")
    return CtreeCode(r, u)


def _first_bad_position(text: str) -> int:
    colon = text.find(":")
    if colon < 0:
        return len(text)
    if colon == 0:
        return 0
    head = text[:colon].lstrip("-")
    for i, ch in enumerate(head):
        if not ch.isdigit():
            return i
    body = text[colon + 1:]
    if body == "":
        return colon + 1
    prev = ","
    for i, ch in enumerate(body):
        ok = ch.isdigit() or (ch == "," and prev != ",") or (ch == "-" and prev == ",")
        if not ok:
            return colon + 1 + i
        prev = ch
    return len(text)


def format_code(code: CtreeCode) -> str:
    if not code.u:
        return f"{code.r}:-"
    return f"{code.r}:" + ",".join(str(x) for x in code.u)


def format_sequence(u) -> str:
    """Compact digit string, e.g. ``11210230``; entries >= 10 are comma separated."""
    if all(0 <= x <= 9 for x in u):
        return "".join(str(x) for x in u)
    return ",".join(str(x) for x in u)


def prune_first_zero(u) -> tuple[int, ...]:
    u = tuple(u)
    i = kernels.prune_index(u)
    if i == -3:
        raise PruneError("sequence too short to prune")
    if i == -1:
        raise PruneError("no zero to prune")
    if i == -2:
        first = u.index(0)
        raise PruneError("neighbor underflow", first)
    return kernels.prune_at(u, i)


def validate(u) -> ValidationTrace:
    """Check whether ``u`` is a coding sequence by repeatedly pruning its first 0."""
    u = tuple(u)
    trace = ValidationTrace(steps=[u], valid=False)
    m = len(u)
    if m < 3:
        trace.reason = "length below 3"
        return trace
    neg = [i for i, x in enumerate(u) if x < 0]
    if neg:
        trace.reason, trace.index = "negative entry", neg[0]
        return trace
    if sum(u) != 2 * (m - 2) - 2:
        trace.reason = f"sum check: {sum(u)} != {2 * (m - 2) - 2}"
        return trace
    cur = u
    while len(cur) > 3:
        i = kernels.prune_index(cur)
        if i < 0:
            trace.reason = "no zero" if i == -1 else "neighbor underflow"
            trace.index = None if i == -1 else cur.index(0)
            return trace
        cur = kernels.prune_at(cur, i)
        trace.positions.append(i)
        trace.steps.append(cur)
    if cur != (0, 0, 0):
        trace.reason = "terminal sequence is not (0,0,0)"
        return trace
    trace.valid = True
    return trace


def is_valid_code(code: CtreeCode) -> bool:
    if not 0 <= code.r <= 5:
        return False
    return code.u == () or kernels.is_coding_sequence(tuple(code.u))


def grow_at(u, i: int) -> tuple[int, ...]:
    """Turn the leaf between entries i and i+1 (1-based, cyclic) into a node.

    Entries u_i, u_{i+1} become u_i + 1, 0, u_{i+1} + 1. When i is the last
    index the new 0 wraps to the front of the sequence.
    """
    u = tuple(u)
    m = len(u)
    if not 1 <= i <= m:
        raise IndexError(f"grow_at index {i} outside 1..{m}")
    return kernels.grow_children(u)[i - 1]


def reroot(code: CtreeCode) -> CtreeCode:
    """Code of the same tree rooted at the next leaf in preorder."""
    if not code.u:
        return CtreeCode((code.r + 3) % 6, ())
    u = code.u
    return CtreeCode((2 + code.r - u[0]) % 6, u[1:] + u[:1])


def reroot_orbit(code: CtreeCode) -> list[CtreeCode]:
    size = len(code.u) if code.u else 2
    out = [code]
    for _ in range(size - 1):
        out.append(reroot(out[-1]))
    return out


def canonical(code: CtreeCode) -> CtreeCode:
    r, u = kernels.canonical_rooted(code.r, tuple(code.u))
    return CtreeCode(r, u)


@lru_cache(maxsize=None)
def _planted(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    level = {(0, 0, 0)}
    for _ in range(n - 1):
        nxt = set()
        for u in level:
            nxt.update(kernels.grow_children(u))
        level = nxt
    return tuple(sorted(level))


def enumerate_planted(n: int) -> list[tuple[int, ...]]:
    """All coding sequences of length n + 2, sorted; there are C_n of them."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_planted(n))


@lru_cache(maxsize=None)
def _unrooted(n: int) -> tuple[CtreeCode, ...]:
    seen = set()
    for u in _planted(n):
        for r in range(6):
            seen.add(kernels.canonical_rooted(r, u))
    return tuple(CtreeCode(r, u) for r, u in sorted(seen))


def enumerate_unrooted(n: int) -> list[CtreeCode]:
    """Canonical codes of all unrooted n-ctrees; there are 6 C_n / (n + 2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_unrooted(n))
