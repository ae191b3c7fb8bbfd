"""Exact inverse images of the Ducci map.

Solving D(y) = x propagates y_{i+1} = x_i - y_i from a free parameter
y_1 = t, so the cycle-closing condition is a single linear congruence:
2t = c (mod m) when n is odd, and a t-free consistency check when n is
even.  Counts therefore come out 0/1/2 for n odd and 0/m for n even.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import DucciTuple, Modulus, coordinate_sum, ducci_step
from .errors import HypothesisError

DEFAULT_LIST_CAP = 10**4
DEFAULT_SWEEP_BUDGET = 1 << 24
SAMPLE_SIZE = 10**4
MISMATCH_CAP = 16


@dataclass(frozen=True)
class PredecessorSet:
    """All y with D(y) = target, in ascending lexicographic order.

    For counts above the listing cap (n even) the list is suppressed but
    ``count`` stays exact; ``listing_suppressed`` records that.
    """

    target: DucciTuple
    solutions: tuple[DucciTuple, ...]
    count: int
    listing_suppressed: bool = False


def _expand(x: DucciTuple, t: int) -> DucciTuple:
    m = x.modulus.m
    ys = [t % m]
    for xi in x.entries[:-1]:
        ys.append((xi - ys[-1]) % m)
    return DucciTuple(x.modulus, tuple(ys))


def predecessors(x: DucciTuple, list_cap: int = DEFAULT_LIST_CAP) -> PredecessorSet:
    """Solve D(y) = x over Z_m^n."""
    m = x.modulus.m
    n = x.n
    # Propagate y_1 = t symbolically: y_i = (-1)^(i-1) t + c_i with
    # c_1 = 0 and c_{i+1} = x_i - c_i; closing the cycle needs
    # y_n + y_1 = x_n.
    c = 0
    for xi in x.entries[:-1]:
        c = xi - c
    if n % 2 == 1:
        # 2t = x_n - c (mod m)
        rhs = (x.entries[-1] - c) % m
        if m % 2 == 1:
            t = rhs * pow(2, -1, m) % m
            ts = [t]
        elif rhs % 2 == 0:
            t = rhs // 2
            ts = [t, (t + m // 2) % m]
        else:
            ts = []
        sols = sorted((_expand(x, t) for t in ts), key=lambda u: u.entries)
        return PredecessorSet(target=x, solutions=tuple(sols), count=len(sols))
    # n even: the closure condition is t-free.
    if (x.entries[-1] - c) % m != 0:
        return PredecessorSet(target=x, solutions=(), count=0)
    if m > list_cap:
        return PredecessorSet(target=x, solutions=(), count=m, listing_suppressed=True)
    sols = sorted((_expand(x, t) for t in range(m)), key=lambda u: u.entries)
    return PredecessorSet(target=x, solutions=tuple(sols), count=m)


def has_predecessor(x: DucciTuple) -> bool:
    """For n odd and m even this is just coordinate-sum parity; otherwise
    falls back to solving."""
    if x.n % 2 == 1 and x.modulus.m % 2 == 0:
        return coordinate_sum(x).parity == 0
    return predecessors(x).count > 0


def even_sum_count(modulus: Modulus, n: int) -> int:
    """Number of tuples in Z_m^n with even coordinate sum: m^n / 2 for m even."""
    if modulus.m % 2 == 1:
        raise HypothesisError("even-sum count formula requires m even")
    if n < 1:
        raise ValueError("n must be >= 1")
    return modulus.m**n // 2


@dataclass(frozen=True)
class PredecessorReport:
    """Outcome of sweeping the predecessor-count laws over Z_m^n."""

    modulus: Modulus
    n: int
    checked: int
    mismatches: tuple[DucciTuple, ...]
    budget_exceeded: bool = False

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _count_law_holds(x: DucciTuple) -> bool:
    m = x.modulus.m
    n = x.n
    ps = predecessors(x, list_cap=max(DEFAULT_LIST_CAP, m))
    for y in ps.solutions:
        if ducci_step(y) != x:
            return False
    if n % 2 == 1 and m % 2 == 0:
        even = coordinate_sum(x).parity == 0
        if ps.count != (2 if even else 0):
            return False
        if ps.count == 2:
            a, b = ps.solutions
            half = m // 2
            if any((ea - eb) % m != half for ea, eb in zip(a.entries, b.entries)):
                return False
        return True
    if n % 2 == 1:
        return ps.count == 1
    return ps.count in (0, m)


def verify_predecessor_theorems(
    modulus: Modulus,
    n: int,
    budget: int = DEFAULT_SWEEP_BUDGET,
    seed: int = 0,
) -> PredecessorReport:
    """Check the count laws (0/2 with the m/2 pairing for n odd m even,
    exactly 1 for n odd m odd, 0/m for n even) plus total-count and
    even-sum-count consistency, exhaustively within budget."""
    m = modulus.m
    size = m**n
    mismatches: list[DucciTuple] = []
    if size <= budget:
        total = 0
        even_seen = 0
        digits = [0] * n
        for _ in range(size):
            x = DucciTuple(modulus, tuple(digits))
            if not _count_law_holds(x):
                if len(mismatches) < MISMATCH_CAP:
                    mismatches.append(x)
            total += predecessors(x, list_cap=0).count
            if sum(digits) % 2 == 0:
                even_seen += 1
            i = n - 1
            while i >= 0:
                digits[i] += 1
                if digits[i] < m:
                    break
                digits[i] = 0
                i -= 1
        # Global-count failures have no single witness; the zero tuple
        # stands in so the report still signals them.
        if total != size:
            mismatches.append(DucciTuple(modulus, (0,) * n))
        if m % 2 == 0 and even_seen != even_sum_count(modulus, n):
            mismatches.append(DucciTuple(modulus, (0,) * n))
        return PredecessorReport(
            modulus=modulus, n=n, checked=size, mismatches=tuple(mismatches[:MISMATCH_CAP])
        )
    rng = random.Random(seed)
    for _ in range(SAMPLE_SIZE):
        x = DucciTuple(modulus, tuple(rng.randrange(m) for _ in range(n)))
        if not _count_law_holds(x) and len(mismatches) < MISMATCH_CAP:
            mismatches.append(x)
    return PredecessorReport(
        modulus=modulus,
        n=n,
        checked=SAMPLE_SIZE,
        mismatches=tuple(mismatches),
        budget_exceeded=True,
    )
