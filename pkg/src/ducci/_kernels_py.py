"""Pure-Python fallback for the hot kernels.

Same API as the compiled ``ducci._kernels`` extension; selected at import
time by ``ducci._backend`` when the extension is unavailable or when
``DUCCI_PURE_PYTHON=1`` is set.  Works with arbitrary-precision moduli.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceededError

BACKEND = "python"
MAX_NATIVE_M = None  # big ints are native here


def ducci_iterate(entries, m, steps):
    """Apply the map ``steps`` times to a digit sequence; returns a list."""
    cur = list(entries)
    for _ in range(steps):
        cur = [(a + b) % m for a, b in zip(cur, cur[1:] + cur[:1])]
    return cur


def _step(t, m):
    return tuple((a + b) % m for a, b in zip(t, t[1:] + t[:1]))


def brent_lenper(entries, m, step_budget):
    """Brent pointer-racing: minimal (len, per) in O(len+per) steps, O(n) memory."""
    start = tuple(e % m for e in entries)
    power = lam = 1
    steps = 1
    tortoise = start
    hare = _step(start, m)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare = _step(hare, m)
        lam += 1
        steps += 1
        if steps > step_budget:
            raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
    # lam is the exact period; locate the first repetition to get len.
    steps += lam
    if steps > step_budget:
        raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
    hare = start
    for _ in range(lam):
        hare = _step(hare, m)
    mu = 0
    tortoise = start
    while tortoise != hare:
        tortoise = _step(tortoise, m)
        hare = _step(hare, m)
        mu += 1
        steps += 2
        if steps > step_budget:
            raise BudgetExceededError(f"cycle search exceeded {step_budget} steps")
    return mu, lam


def coeff_row_mod(m, n, r):
    """Row r of the coefficient recurrence, entries reduced mod m."""
    row = [1 % m] + [0] * (n - 1)
    for _ in range(r):
        row = [(row[s] + row[s - 1]) % m for s in range(n)]
    return row


def successor_array(m, n):
    """Successor index for every node of Z_m^n, entry-major encoding."""
    size = m**n
    powers = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    succ = np.empty(size, dtype=np.int64)
    chunk = 1 << 16
    for lo in range(0, size, chunk):
        idx = np.arange(lo, min(lo + chunk, size), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % m
        stepped = (digits + np.roll(digits, -1, axis=1)) % m
        succ[lo : lo + len(idx)] = stepped @ powers
    return succ


def _decode(idx, m, n):
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        idx, digits[i] = divmod(idx, m)
    return digits


def _odometer_next(digits, m):
    i = len(digits) - 1
    while i >= 0:
        digits[i] += 1
        if digits[i] < m:
            return
        digits[i] = 0
        i -= 1


def sweep_kernel(m, n, l, start, stop, step_budget, mismatch_cap=16):
    """Scan encoded indices [start, stop): count cycle members via the
    len==0 oracle and record indices where the sum-mod-2^l predicate
    disagrees with it."""
    mask = (1 << l) - 1
    digits = _decode(start, m, n)
    in_cycle_count = 0
    mismatches = []
    for idx in range(start, stop):
        predicate = (sum(digits) & mask) == 0
        mu, _ = brent_lenper(digits, m, step_budget)
        oracle = mu == 0
        if oracle:
            in_cycle_count += 1
        if predicate != oracle and len(mismatches) < mismatch_cap:
            mismatches.append(idx)
        _odometer_next(digits, m)
    return in_cycle_count, mismatches


def sweep_oddsum(m, n, l, start, stop, step_budget, mismatch_cap=16):
    """Scan encoded indices [start, stop): for odd-coordinate-sum tuples,
    record indices whose pre-period differs from l."""
    digits = _decode(start, m, n)
    odd_count = 0
    mismatches = []
    for idx in range(start, stop):
        if sum(digits) & 1:
            odd_count += 1
            mu, _ = brent_lenper(digits, m, step_budget)
            if mu != l and len(mismatches) < mismatch_cap:
                mismatches.append(idx)
        _odometer_next(digits, m)
    return odd_count, mismatches
