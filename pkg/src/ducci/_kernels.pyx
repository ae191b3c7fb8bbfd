# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Ducci stepping, Brent cycle racing, coefficient
row marches and exhaustive state sweeps.

Mirrors the API of ``ducci._kernels_py``.  Entries and moduli must fit in
int64 (``MAX_NATIVE_M``); ``ducci._backend`` routes bigger moduli to the
pure-Python twin.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

import numpy as np

from .errors import BudgetExceededError

BACKEND = "cython"
MAX_NATIVE_M = 1 << 31


cdef inline void _step(long long* cur, long long* nxt, Py_ssize_t n, long long m) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n - 1):
        nxt[i] = (cur[i] + cur[i + 1]) % m
    nxt[n - 1] = (cur[n - 1] + cur[0]) % m


cdef inline bint _eq(long long* a, long long* b, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if a[i] != b[i]:
            return 0
    return 1


cdef int _brent(long long* start, Py_ssize_t n, long long m, long long budget,
                long long* mu_out, long long* lam_out,
                long long* t, long long* h, long long* tmp) noexcept nogil:
    """Minimal (len, per) of the orbit of ``start``.  Returns 1 on budget blow."""
    cdef long long power = 1, lam = 1, steps = 1, mu = 0, k
    cdef long long* swp
    memcpy(t, start, n * sizeof(long long))
    _step(start, h, n, m)
    while not _eq(t, h, n):
        if power == lam:
            memcpy(t, h, n * sizeof(long long))
            power <<= 1
            lam = 0
        _step(h, tmp, n, m)
        swp = h; h = tmp; tmp = swp
        lam += 1
        steps += 1
        if steps > budget:
            return 1
    steps += lam
    if steps > budget:
        return 1
    memcpy(t, start, n * sizeof(long long))
    memcpy(h, start, n * sizeof(long long))
    for k in range(lam):
        _step(h, tmp, n, m)
        swp = h; h = tmp; tmp = swp
    while not _eq(t, h, n):
        _step(t, tmp, n, m)
        swp = t; t = tmp; tmp = swp
        _step(h, tmp, n, m)
        swp = h; h = tmp; tmp = swp
        mu += 1
        steps += 2
        if steps > budget:
            return 1
    mu_out[0] = mu
    lam_out[0] = lam
    return 0


cdef long long* _alloc(Py_ssize_t count) except NULL:
    cdef long long* p = <long long*> calloc(count, sizeof(long long))
    if p == NULL:
        raise MemoryError()
    return p


def ducci_iterate(entries, long long m, long long steps):
    """Apply the map ``steps`` times to a digit sequence; returns a list."""
    cdef Py_ssize_t n = len(entries), i
    cdef long long k
    cdef long long* base = _alloc(2 * n)
    cdef long long* cur = base
    cdef long long* nxt = base + n
    cdef long long* swp
    try:
        for i in range(n):
            cur[i] = entries[i] % m
        with nogil:
            for k in range(steps):
                _step(cur, nxt, n, m)
                swp = cur; cur = nxt; nxt = swp
        return [cur[i] for i in range(n)]
    finally:
        free(base)


def brent_lenper(entries, long long m, long long step_budget):
    """Brent pointer-racing: minimal (len, per) in O(len+per) steps."""
    cdef Py_ssize_t n = len(entries), i
    cdef long long mu = 0, lam = 0
    cdef int rc
    cdef long long* buf = _alloc(4 * n)
    try:
        for i in range(n):
            buf[i] = entries[i] % m
        with nogil:
            rc = _brent(buf, n, m, step_budget, &mu, &lam,
                        buf + n, buf + 2 * n, buf + 3 * n)
        if rc:
            raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
        return mu, lam
    finally:
        free(buf)


def coeff_row_mod(long long m, Py_ssize_t n, long long r):
    """Row r of the coefficient recurrence, entries reduced mod m."""
    cdef Py_ssize_t s
    cdef long long k, prev, old
    cdef long long* row = _alloc(n)
    try:
        row[0] = 1 % m
        with nogil:
            for k in range(r):
                prev = row[n - 1]
                for s in range(n):
                    old = row[s]
                    row[s] = (old + prev) % m
                    prev = old
        return [row[s] for s in range(n)]
    finally:
        free(row)


def successor_array(long long m, Py_ssize_t n):
    """Successor index for every node of Z_m^n, entry-major encoding."""
    cdef long long size = 1
    cdef Py_ssize_t i
    for i in range(n):
        size *= m
    arr = np.empty(size, dtype=np.int64)
    cdef long long[::1] succ = arr
    cdef long long* digits = _alloc(n)
    cdef long long idx, code
    cdef Py_ssize_t j
    try:
        with nogil:
            for idx in range(size):
                code = 0
                for j in range(n - 1):
                    code = code * m + (digits[j] + digits[j + 1]) % m
                code = code * m + (digits[n - 1] + digits[0]) % m
                succ[idx] = code
                j = n - 1
                while j >= 0:
                    digits[j] += 1
                    if digits[j] < m:
                        break
                    digits[j] = 0
                    j -= 1
        return arr
    finally:
        free(digits)


def sweep_kernel(long long m, Py_ssize_t n, int l, long long start, long long stop,
                 long long step_budget, int mismatch_cap=16):
    """Scan encoded indices [start, stop): count cycle members via the
    len==0 oracle and record indices where the sum-mod-2^l predicate
    disagrees with it."""
    cdef long long mask = (<long long> 1 << l) - 1
    cdef long long* buf = _alloc(4 * n)
    cdef long long* digits = buf
    cdef long long idx, s, mu = 0, lam = 0, in_cycle_count = 0
    cdef long long rem
    cdef Py_ssize_t j
    cdef bint predicate, oracle
    cdef int rc = 0, n_mis = 0
    cdef long long mis[16]
    if mismatch_cap > 16:
        mismatch_cap = 16
    try:
        rem = start
        for j in range(n - 1, -1, -1):
            digits[j] = rem % m
            rem //= m
        with nogil:
            for idx in range(start, stop):
                s = 0
                for j in range(n):
                    s += digits[j]
                predicate = (s & mask) == 0
                rc = _brent(digits, n, m, step_budget, &mu, &lam,
                            buf + n, buf + 2 * n, buf + 3 * n)
                if rc:
                    break
                oracle = mu == 0
                if oracle:
                    in_cycle_count += 1
                if predicate != oracle and n_mis < mismatch_cap:
                    mis[n_mis] = idx
                    n_mis += 1
                j = n - 1
                while j >= 0:
                    digits[j] += 1
                    if digits[j] < m:
                        break
                    digits[j] = 0
                    j -= 1
        if rc:
            raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
        return in_cycle_count, [mis[j] for j in range(n_mis)]
    finally:
        free(buf)


def sweep_oddsum(long long m, Py_ssize_t n, int l, long long start, long long stop,
                 long long step_budget, int mismatch_cap=16):
    """Scan encoded indices [start, stop): for odd-coordinate-sum tuples,
    record indices whose pre-period differs from l."""
    cdef long long* buf = _alloc(4 * n)
    cdef long long* digits = buf
    cdef long long idx, s, mu = 0, lam = 0, odd_count = 0
    cdef long long rem
    cdef Py_ssize_t j
    cdef int rc = 0, n_mis = 0
    cdef long long mis[16]
    if mismatch_cap > 16:
        mismatch_cap = 16
    try:
        rem = start
        for j in range(n - 1, -1, -1):
            digits[j] = rem % m
            rem //= m
        with nogil:
            for idx in range(start, stop):
                s = 0
                for j in range(n):
                    s += digits[j]
                if s & 1:
                    odd_count += 1
                    rc = _brent(digits, n, m, step_budget, &mu, &lam,
                                buf + n, buf + 2 * n, buf + 3 * n)
                    if rc:
                        break
                    if mu != l and n_mis < mismatch_cap:
                        mis[n_mis] = idx
                        n_mis += 1
                j = n - 1
                while j >= 0:
                    digits[j] += 1
                    if digits[j] < m:
                        break
                    digits[j] = 0
                    j -= 1
        if rc:
            raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
        return odd_count, [mis[j] for j in range(n_mis)]
    finally:
        free(buf)
