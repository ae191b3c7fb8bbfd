"""Coefficient algebra of iterated Ducci steps.

Row r holds the coefficients of x_1, ..., x_n in the first coordinate of
the r-th iterate.  Rows obey a cyclic Pascal recurrence, sum to 2^r, and
fold the binomial coefficients C(r, k) along residues of k mod n.  The
row at a period multiple has a rigid two-value form that the pre-period
theorems hinge on; ``period_row_form`` checks it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import _backend
from .core import Modulus, ducci_step
from .dynamics import DEFAULT_STEP_BUDGET, basic_len_per, basic_tuple
from .errors import BudgetExceededError, HypothesisError

DEFAULT_EXACT_CAP = 512

REDUCED = "reduced"
EXACT = "exact"


@dataclass(frozen=True)
class CoeffRow:
    """Coefficient row (a_{r,1}, ..., a_{r,n}), reduced mod m or exact."""

    r: int
    n: int
    modulus: Modulus
    values: tuple[int, ...]
    mode: str


@dataclass(frozen=True)
class PeriodRowForm:
    """Result of checking the two-value form of row d.

    When ``holds``: every entry s > 1 of row d is z*m1 mod m and entry 1
    is z*m1 + 1 mod m, with z the least odd positive witness (z < 2^l).
    """

    d: int
    z: int | None
    holds: bool


def _exact_row(n: int, r: int) -> list[int]:
    row = [1] + [0] * (n - 1)
    for _ in range(r):
        row = [row[s] + row[s - 1] for s in range(n)]
    return row


def coeff_row(
    modulus: Modulus,
    n: int,
    r: int,
    mode: str = REDUCED,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> CoeffRow:
    """Row r via the cyclic recurrence a_{r,s} = a_{r-1,s} + a_{r-1,s-1}
    (index s-1 wrapping to n), marched iteratively from the base row
    (1, 0, ..., 0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    if mode == REDUCED:
        values = _backend.coeff_row_mod(modulus.m, n, r)
    elif mode == EXACT:
        if r > exact_cap:
            raise BudgetExceededError(f"exact row r={r} exceeds cap {exact_cap}")
        values = _exact_row(n, r)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return CoeffRow(r=r, n=n, modulus=modulus, values=tuple(values), mode=mode)


def binomial_fold_oracle(n: int, r: int, s: int) -> int:
    """Independent closed form of a_{r,s}: the sum of C(r, k) over all
    k congruent to s-1 mod n.  Exact integer arithmetic."""
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in [1, {n}]")
    return sum(math.comb(r, k) for k in range((s - 1) % n, r + 1, n))


def row_sum_check(row: CoeffRow) -> bool:
    """True iff the row sums to 2^r: exactly in exact mode, mod m otherwise."""
    total = sum(row.values)
    if row.mode == EXACT:
        return total == 2**row.r
    return total % row.modulus.m == pow(2, row.r, row.modulus.m)


def convolution_check(modulus: Modulus, n: int, r: int, j: int) -> bool:
    """True iff row r is the cyclic convolution of rows j and r-j mod m:
    a_{r,s} = sum_i a_{j,i} * a_{r-j, s-i+1} with the index wrapped into
    {1, ..., n}."""
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")
    m = modulus.m
    row_j = _backend.coeff_row_mod(m, n, j)
    row_k = _backend.coeff_row_mod(m, n, r - j)
    row_r = _backend.coeff_row_mod(m, n, r)
    for s in range(n):
        total = 0
        for i in range(n):
            total += row_j[i] * row_k[(s - i) % n]
        if total % m != row_r[s]:
            return False
    return True


def period_row_form(
    modulus: Modulus,
    n: int,
    d: int | None = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> PeriodRowForm:
    """Check the two-value form of row d for n odd, l >= 1.

    d defaults to the smallest multiple of P exceeding L; an explicit d
    must satisfy the same constraints (d > L and P | d).  Returns
    holds=False when the observed row violates the form.
    """
    if n % 2 == 0:
        raise HypothesisError("period row form requires n odd")
    if modulus.l < 1:
        raise HypothesisError("period row form requires an even modulus (l >= 1)")
    basic = basic_len_per(modulus, n, step_budget)
    if d is None:
        d = basic.P * (basic.L // basic.P + 1)
    elif d <= basic.L or d % basic.P != 0:
        raise ValueError(f"d={d} must be a multiple of P={basic.P} exceeding L={basic.L}")

    m, l, m1 = modulus.m, modulus.l, modulus.m1
    row = _backend.coeff_row_mod(m, n, d)
    if n == 1:
        # No s > 1 entries; the witness class comes from entry 1 alone.
        rho = (row[0] - 1) % m
    else:
        rho = row[1]
        if any(v != rho for v in row[2:]) or row[0] != (rho + 1) % m:
            return PeriodRowForm(d=d, z=None, holds=False)
    if rho % m1 != 0:
        return PeriodRowForm(d=d, z=None, holds=False)
    z = (rho // m1) % (1 << l)
    if z % 2 == 0:
        return PeriodRowForm(d=d, z=None, holds=False)
    return PeriodRowForm(d=d, z=z, holds=True)


@dataclass(frozen=True)
class CoeffSuiteReport:
    """Pass/fail of each coefficient identity family for one (m, n) cell."""

    modulus: Modulus
    n: int
    sum_ok: bool
    oracle_ok: bool
    conv_ok: bool
    basic_ok: bool
    period_row_ok: bool | None

    @property
    def ok(self) -> bool:
        checks = [self.sum_ok, self.oracle_ok, self.conv_ok, self.basic_ok]
        if self.period_row_ok is not None:
            checks.append(self.period_row_ok)
        return all(checks)


def verify_suite(
    modulus: Modulus,
    n: int,
    seed: int = 0,
    max_r: int = 200,
    exact_max_r: int = 64,
    oracle_max_r: int = 40,
    conv_samples: int = 200,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> CoeffSuiteReport:
    """Run every coefficient identity family on one (m, n) cell.

    Sum identity for r <= max_r reduced and r <= exact_max_r exact, the
    binomial fold for r <= oracle_max_r, seeded random convolution pairs,
    the basic-sequence link for r <= max_r, and (n odd, l >= 1) the
    period-row form at the smallest qualifying d and at 2d.
    """
    m = modulus.m
    sum_ok = all(
        row_sum_check(coeff_row(modulus, n, r)) for r in range(max_r + 1)
    ) and all(
        row_sum_check(coeff_row(modulus, n, r, mode=EXACT)) for r in range(exact_max_r + 1)
    )
    oracle_ok = True
    for r in range(oracle_max_r + 1):
        row = coeff_row(modulus, n, r)
        if any(
            row.values[s - 1] != binomial_fold_oracle(n, r, s) % m for s in range(1, n + 1)
        ):
            oracle_ok = False
            break
    rng = random.Random(seed)
    conv_ok = True
    for _ in range(conv_samples):
        r = rng.randint(0, max_r)
        j = rng.randint(0, r)
        if not convolution_check(modulus, n, r, j):
            conv_ok = False
            break
    basic_ok = True
    cur = basic_tuple(modulus, n)
    for r in range(max_r + 1):
        row = coeff_row(modulus, n, r)
        if cur.entries != tuple(reversed(row.values)):
            basic_ok = False
            break
        cur = ducci_step(cur)
    period_row_ok = None
    if n % 2 == 1 and modulus.l >= 1:
        first = period_row_form(modulus, n, step_budget=step_budget)
        second = period_row_form(modulus, n, d=2 * first.d, step_budget=step_budget)
        period_row_ok = first.holds and second.holds
    return CoeffSuiteReport(
        modulus=modulus,
        n=n,
        sum_ok=sum_ok,
        oracle_ok=oracle_ok,
        conv_ok=conv_ok,
        basic_ok=basic_ok,
        period_row_ok=period_row_ok,
    )
