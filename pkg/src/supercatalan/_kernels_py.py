"""Pure-Python hot kernels.

Reference implementation for :mod:`supercatalan._kernels` (Cython). Both
modules expose the same functions with the same semantics; the tests check
them against each other.
"""

from __future__ import annotations


def prune_index(u):
    """Index of the first 0 of ``u`` if it can be pruned, else a negative code.

    -1: no zero present; -2: a cyclic neighbour of the first zero is 0;
    -3: sequence too short to prune.
    """
    m = len(u)
    if m < 4:
        return -3
    for i in range(m):
        if u[i] == 0:
            if u[i - 1] == 0 or u[(i + 1) % m] == 0:
                return -2
            return i
    return -1


def prune_at(u, i):
    """Remove ``u[i]`` (a zero) and decrement both its cyclic neighbours."""
    m = len(u)
    out = list(u)
    out[i - 1] -= 1
    out[(i + 1) % m] -= 1
    del out[i]
    return tuple(out)


def is_coding_sequence(u):
    m = len(u)
    if m < 3 or sum(u) != 2 * m - 6:
        return False
    for x in u:
        if x < 0:
            return False
    while len(u) > 3:
        i = prune_index(u)
        if i < 0:
            return False
        u = prune_at(u, i)
    return u == (0, 0, 0)


def grow_children(u):
    """All sequences obtained from ``u`` by one application of the growth rule."""
    m = len(u)
    out = []
    for i in range(m - 1):
        out.append(u[:i] + (u[i] + 1, 0, u[i + 1] + 1) + u[i + 2:])
    # wrap-around: the inserted 0 becomes the first entry
    out.append((0, u[0] + 1) + u[1:m - 1] + (u[m - 1] + 1,))
    return out


def canonical_rooted(r, u):
    """Lexicographically least (r, u) over the re-rooting orbit."""
    m = len(u)
    if m == 0:
        return (min(r, (r + 3) % 6), ())
    best_r, best_u = r, u
    cur_r, cur = r, u
    for _ in range(m - 1):
        cur_r = (2 + cur_r - cur[0]) % 6
        cur = cur[1:] + cur[:1]
        if cur_r < best_r or (cur_r == best_r and cur < best_u):
            best_r, best_u = cur_r, cur
    return (best_r, best_u)


def duu_count(steps):
    count = 0
    for i in range(len(steps) - 2):
        if steps[i] == "D" and steps[i + 1] == "U" and steps[i + 2] == "U":
            count += 1
    return count


def incline_parity_counts(steps):
    """(inclines at odd 1-based locations, inclines at even locations)."""
    odd = even = 0
    for i in range(len(steps) - 1):
        if steps[i] == steps[i + 1]:
            if i % 2 == 0:
                odd += 1
            else:
                even += 1
    return odd, even
