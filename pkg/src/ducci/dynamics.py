"""Eventually-periodic orbit analysis.

Every orbit in the finite space Z_m^n closes; ``len_per`` finds the
minimal pre-period and period with Brent's constant-memory pointer race,
``basic_len_per`` specializes it to the distinguished starting tuple
(0, ..., 0, 1) whose invariants bound all others.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .core import DucciTuple, Modulus, ducci_step
from .errors import BudgetExceededError

DEFAULT_STEP_BUDGET = 10**8
DEFAULT_ORBIT_CAP = 10**6


@dataclass(frozen=True)
class CycleInfo:
    """Minimal pre-period (len) and period (per) of an orbit."""

    len: int
    per: int


@dataclass(frozen=True)
class BasicInvariants:
    """len/per of (0, ..., 0, 1) in Z_m^n: the space-wide L and P."""

    L: int
    P: int
    n: int
    modulus: Modulus


@dataclass(frozen=True)
class OrbitPrefix:
    tuples: tuple[DucciTuple, ...]
    truncated: bool


def len_per(u: DucciTuple, step_budget: int = DEFAULT_STEP_BUDGET) -> CycleInfo:
    """Minimal (len, per): len is the smallest a with D^(a+b)(u) = D^a(u)
    for some b >= 1, per the smallest such b.

    Constant memory in the orbit length; O(len + per) Ducci steps up to a
    constant factor.  Raises BudgetExceededError past ``step_budget`` steps.
    """
    mu, lam = _backend.brent_lenper(u.entries, u.modulus.m, step_budget)
    return CycleInfo(len=mu, per=lam)


def basic_tuple(modulus: Modulus, n: int) -> DucciTuple:
    """(0, ..., 0, 1) in Z_m^n; for n = 1 this is (1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return DucciTuple(modulus, (0,) * (n - 1) + (1,))


def basic_len_per(
    modulus: Modulus, n: int, step_budget: int = DEFAULT_STEP_BUDGET
) -> BasicInvariants:
    """L and P for Z_m^n: every tuple has len <= L and per dividing P."""
    info = len_per(basic_tuple(modulus, n), step_budget)
    return BasicInvariants(L=info.len, P=info.per, n=n, modulus=modulus)


def orbit_prefix(
    u: DucciTuple,
    k: int,
    cap: int = DEFAULT_ORBIT_CAP,
    stop_on_repeat: bool = False,
) -> OrbitPrefix:
    """The first k orbit elements u, D(u), ..., D^(k-1)(u).

    With ``stop_on_repeat`` the listing ends at the first tuple already
    seen (the orbit closed); ``truncated`` records that early stop.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > cap:
        raise BudgetExceededError(f"orbit prefix of {k} exceeds cap {cap}")
    out = [u]
    seen = {u} if stop_on_repeat else None
    truncated = False
    cur = u
    for _ in range(k - 1):
        cur = ducci_step(cur)
        if stop_on_repeat:
            if cur in seen:
                truncated = True
                break
            seen.add(cur)
        out.append(cur)
    return OrbitPrefix(tuples=tuple(out), truncated=truncated)
