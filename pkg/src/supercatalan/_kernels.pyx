# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same API as :mod:`supercatalan._kernels_py`."""

from libc.stdlib cimport malloc, free


cdef int _prune_index(long *u, int m) noexcept:
    cdef int i
    if m < 4:
        return -3
    for i in range(m):
        if u[i] == 0:
            if u[(i - 1 + m) % m] == 0 or u[(i + 1) % m] == 0:
                return -2
            return i
    return -1


cdef int _prune_in_place(long *u, int m, int i) noexcept:
    cdef int j
    u[(i - 1 + m) % m] -= 1
    u[(i + 1) % m] -= 1
    for j in range(i, m - 1):
        u[j] = u[j + 1]
    return m - 1


def prune_index(u):
    cdef int m = len(u)
    cdef long *buf = <long *> malloc(max(m, 1) * sizeof(long))
    cdef int i
    try:
        for i in range(m):
            buf[i] = u[i]
        return _prune_index(buf, m)
    finally:
        free(buf)


def prune_at(u, int i):
    out = list(u)
    m = len(out)
    out[(i - 1 + m) % m] -= 1
    out[(i + 1) % m] -= 1
    del out[i]
    return tuple(out)


def is_coding_sequence(u):
    cdef int m = len(u)
    cdef long total = 0
    cdef long *buf
    cdef int i
    if m < 3:
        return False
    buf = <long *> malloc(m * sizeof(long))
    try:
        for i in range(m):
            buf[i] = u[i]
            if buf[i] < 0:
                return False
            total += buf[i]
        if total != 2 * m - 6:
            return False
        while m > 3:
            i = _prune_index(buf, m)
            if i < 0:
                return False
            m = _prune_in_place(buf, m, i)
        return buf[0] == 0 and buf[1] == 0 and buf[2] == 0
    finally:
        free(buf)


def grow_children(tuple u):
    cdef int m = len(u)
    cdef int i
    out = []
    for i in range(m - 1):
        out.append(u[:i] + (u[i] + 1, 0, u[i + 1] + 1) + u[i + 2:])
    out.append((0, u[0] + 1) + u[1:m - 1] + (u[m - 1] + 1,))
    return out


def canonical_rooted(int r, tuple u):
    cdef int m = len(u)
    cdef long *buf
    cdef int best_r, cur_r, best_off, off, j, c
    if m == 0:
        return (min(r, (r + 3) % 6), ())
    buf = <long *> malloc(m * sizeof(long))
    try:
        for j in range(m):
            buf[j] = u[j]
        best_r = r
        best_off = 0
        cur_r = r
        for off in range(1, m):
            cur_r = ((2 + cur_r - buf[off - 1]) % 6 + 6) % 6
            if cur_r > best_r:
                continue
            if cur_r < best_r:
                best_r = cur_r
                best_off = off
                continue
            c = 0
            for j in range(m):
                if buf[(off + j) % m] != buf[(best_off + j) % m]:
                    c = -1 if buf[(off + j) % m] < buf[(best_off + j) % m] else 1
                    break
            if c < 0:
                best_off = off
        return (best_r, u[best_off:] + u[:best_off])
    finally:
        free(buf)


def duu_count(str steps):
    cdef Py_ssize_t i, n = len(steps)
    cdef int count = 0
    for i in range(n - 2):
        if steps[i] == u"D" and steps[i + 1] == u"U" and steps[i + 2] == u"U":
            count += 1
    return count


def incline_parity_counts(str steps):
    cdef Py_ssize_t i, n = len(steps)
    cdef int odd = 0, even = 0
    for i in range(n - 1):
        if steps[i] == steps[i + 1]:
            if i % 2 == 0:
                odd += 1
            else:
                even += 1
    return odd, even
