"""The cycle subgroup of Z_m^n and the verification harness around it.

For n odd, membership in a cycle is a single congruence on the
coordinate sum (mod 2^l), the subgroup size is 2^((n-1)l) * m1^n, and
tuples with odd coordinate sum sit at maximal distance l from their
cycle.  The verify_* sweeps check each claim against the pointer-racing
oracle, exhaustively within budget and by seeded sampling beyond it.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _backend
from .core import DucciTuple, Modulus, coordinate_sum
from .dynamics import DEFAULT_STEP_BUDGET, basic_len_per, basic_tuple, len_per
from .errors import HypothesisError

DEFAULT_SWEEP_BUDGET = 1 << 24
SAMPLE_SIZE = 10**4
MISMATCH_CAP = 16


@dataclass(frozen=True)
class KernelReport:
    """Outcome of one verification sweep; mismatches empty on success."""

    modulus: Modulus
    n: int
    predicted_L: int
    measured_L: int
    kernel_size_formula: int | None = None
    kernel_size_measured: int | None = None
    mismatches: tuple[DucciTuple, ...] = field(default=())
    budget_exceeded: bool = False

    @property
    def ok(self) -> bool:
        if self.mismatches or self.predicted_L != self.measured_L:
            return False
        if self.kernel_size_formula is not None and self.kernel_size_measured is not None:
            return self.kernel_size_formula == self.kernel_size_measured
        return True


def _require_odd_n(n: int, what: str):
    if n % 2 == 0:
        raise HypothesisError(f"{what} is only established for n odd")


def in_kernel_predicate(u: DucciTuple) -> bool:
    """Cycle membership by the sum test: coordinate sum = 0 mod 2^l.

    Only valid for n odd (for l = 0 the condition is vacuous and every
    tuple is in a cycle)."""
    _require_odd_n(u.n, "the kernel sum predicate")
    return coordinate_sum(u).residue_mod_2l == 0


def in_kernel_oracle(u: DucciTuple, step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """Cycle membership the slow, assumption-free way: pre-period zero."""
    return len_per(u, step_budget).len == 0


def kernel_size(modulus: Modulus, n: int) -> int:
    """|K(Z_m^n)| = 2^((n-1)l) * m1^n for n odd."""
    _require_odd_n(n, "the kernel size formula")
    return 2 ** ((n - 1) * modulus.l) * modulus.m1**n


def _decode(idx: int, modulus: Modulus, n: int) -> DucciTuple:
    digits = [0] * n
    m = modulus.m
    for i in range(n - 1, -1, -1):
        idx, digits[i] = divmod(idx, m)
    return DucciTuple(modulus, tuple(digits))


def _chunks(size: int, workers: int):
    workers = max(1, min(workers, size))
    bounds = [size * i // workers for i in range(workers + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(workers)]


def _run_chunked(fn, size: int, workers: int):
    """Run a (start, stop) range function over contiguous chunks and merge
    in chunk order, so the result is independent of the worker count."""
    spans = _chunks(size, workers)
    if len(spans) == 1:
        results = [fn(*spans[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            results = list(pool.map(lambda span: fn(*span), spans))
    total = 0
    mismatches: list[int] = []
    for count, mis in results:
        total += count
        mismatches.extend(mis)
    return total, mismatches[:MISMATCH_CAP]


def verify_length_theorem(
    modulus: Modulus, n: int, step_budget: int = DEFAULT_STEP_BUDGET
) -> KernelReport:
    """Measured L of the basic orbit against the predicted value l = v2(m)."""
    _require_odd_n(n, "the length theorem")
    basic = basic_len_per(modulus, n, step_budget)
    mismatches = ()
    if basic.L != modulus.l:
        mismatches = (basic_tuple(modulus, n),)
    return KernelReport(
        modulus=modulus,
        n=n,
        predicted_L=modulus.l,
        measured_L=basic.L,
        mismatches=mismatches,
    )


def verify_kernel_theorem(
    modulus: Modulus,
    n: int,
    budget: int = DEFAULT_SWEEP_BUDGET,
    seed: int = 0,
    workers: int = 1,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> KernelReport:
    """Sum predicate vs pre-period-zero oracle over all of Z_m^n, plus the
    subgroup size formula against the measured member count.

    Above ``budget`` tuples the comparison falls back to 10^4 seeded
    samples and the size stays formula-only."""
    _require_odd_n(n, "the kernel theorem")
    m, l = modulus.m, modulus.l
    basic = basic_len_per(modulus, n, step_budget)
    size = m**n
    formula = kernel_size(modulus, n)
    if size <= budget:
        count, mis_idx = _run_chunked(
            lambda lo, hi: _backend.sweep_kernel(m, n, l, lo, hi, step_budget, MISMATCH_CAP),
            size,
            workers,
        )
        return KernelReport(
            modulus=modulus,
            n=n,
            predicted_L=l,
            measured_L=basic.L,
            kernel_size_formula=formula,
            kernel_size_measured=count,
            mismatches=tuple(_decode(i, modulus, n) for i in mis_idx),
        )
    rng = random.Random(seed)
    mismatches = []
    for _ in range(SAMPLE_SIZE):
        u = DucciTuple(modulus, tuple(rng.randrange(m) for _ in range(n)))
        if in_kernel_predicate(u) != in_kernel_oracle(u, step_budget):
            if len(mismatches) < MISMATCH_CAP:
                mismatches.append(u)
    return KernelReport(
        modulus=modulus,
        n=n,
        predicted_L=l,
        measured_L=basic.L,
        kernel_size_formula=formula,
        kernel_size_measured=None,
        mismatches=tuple(mismatches),
        budget_exceeded=True,
    )


def verify_odd_sum_length(
    modulus: Modulus,
    n: int,
    budget: int = DEFAULT_SWEEP_BUDGET,
    seed: int = 0,
    workers: int = 1,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> KernelReport:
    """Every tuple with odd coordinate sum must have pre-period exactly l
    (n odd, l >= 1).  Exhaustive within budget, sampled beyond."""
    _require_odd_n(n, "the odd-sum length lemma")
    if modulus.l < 1:
        raise HypothesisError("the odd-sum length lemma requires m even")
    m, l = modulus.m, modulus.l
    size = m**n
    if size <= budget:
        _, mis_idx = _run_chunked(
            lambda lo, hi: _backend.sweep_oddsum(m, n, l, lo, hi, step_budget, MISMATCH_CAP),
            size,
            workers,
        )
        mismatches = tuple(_decode(i, modulus, n) for i in mis_idx)
        measured = l if not mismatches else len_per(mismatches[0], step_budget).len
        return KernelReport(
            modulus=modulus, n=n, predicted_L=l, measured_L=measured, mismatches=mismatches
        )
    rng = random.Random(seed)
    mismatches = []
    collected = 0
    while collected < SAMPLE_SIZE:
        u = DucciTuple(modulus, tuple(rng.randrange(m) for _ in range(n)))
        if coordinate_sum(u).parity == 0:
            continue
        collected += 1
        if len_per(u, step_budget).len != l and len(mismatches) < MISMATCH_CAP:
            mismatches.append(u)
    measured = l if not mismatches else len_per(mismatches[0], step_budget).len
    return KernelReport(
        modulus=modulus,
        n=n,
        predicted_L=l,
        measured_L=measured,
        mismatches=tuple(mismatches),
        budget_exceeded=True,
    )
