"""Residue tuples over Z_m^n and the Ducci map.

The map sends (x_1, ..., x_n) to (x_1+x_2, x_2+x_3, ..., x_n+x_1) with
every entry reduced mod m.  Together with the cyclic shift it generates
all the algebra the rest of the package builds on: the map is additive,
commutes with the shift, and equals identity-plus-shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _backend
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class Modulus:
    """A modulus m >= 2 together with its 2-adic split m = 2^l * m1, m1 odd.

    ``l`` and ``m1`` are always derived from ``m``; they cannot be supplied.
    """

    m: int
    l: int = field(init=False)
    m1: int = field(init=False)

    def __post_init__(self):
        m = self.m
        if not isinstance(m, int) or m < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
        l = 0
        m1 = m
        while m1 % 2 == 0:
            m1 //= 2
            l += 1
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m1", m1)

    def __repr__(self):
        return f"Modulus({self.m})"


@dataclass(frozen=True)
class DucciTuple:
    """An ordered n-tuple of residues mod m, stored reduced to [0, m)."""

    modulus: Modulus
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) < 1:
            raise ValueError("tuple length n must be >= 1")
        m = self.modulus.m
        for e in entries:
            if not isinstance(e, int) or not 0 <= e < m:
                raise ValueError(f"entry {e!r} out of range [0, {m})")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_text(cls, text: str, modulus: Modulus) -> "DucciTuple":
        """Parse the CLI text format: comma-separated decimals, e.g. ``3,0,3``."""
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"malformed tuple text {text!r}") from None
        return cls(modulus, entries)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __repr__(self):
        return f"DucciTuple(m={self.modulus.m}, ({self.to_text()}))"


@dataclass(frozen=True)
class CoordinateSum:
    """Integer coordinate sum of a tuple plus its parity and mod-2^l residue."""

    value: int
    parity: int
    residue_mod_2l: int


def _require_same_shape(u: DucciTuple, v: DucciTuple):
    if u.modulus != v.modulus or u.n != v.n:
        raise DimensionMismatchError(
            f"shape mismatch: Z_{u.modulus.m}^{u.n} vs Z_{v.modulus.m}^{v.n}"
        )


def ducci_step(u: DucciTuple) -> DucciTuple:
    """One application of the map: entry i becomes u[i] + u[i+1 mod n], mod m."""
    e = u.entries
    n = len(e)
    m = u.modulus.m
    return DucciTuple(u.modulus, tuple((e[i] + e[(i + 1) % n]) % m for i in range(n)))


def shift(u: DucciTuple) -> DucciTuple:
    """Left cyclic rotation: (x_1, ..., x_n) -> (x_2, ..., x_n, x_1)."""
    e = u.entries
    return DucciTuple(u.modulus, e[1:] + e[:1])


def scale(u: DucciTuple, lam: int) -> DucciTuple:
    """Entrywise multiplication by a scalar, reduced mod m."""
    m = u.modulus.m
    lam %= m
    return DucciTuple(u.modulus, tuple((lam * e) % m for e in u.entries))


def add(u: DucciTuple, v: DucciTuple) -> DucciTuple:
    """Entrywise sum mod m.  Requires matching modulus and length."""
    _require_same_shape(u, v)
    m = u.modulus.m
    return DucciTuple(u.modulus, tuple((a + b) % m for a, b in zip(u.entries, v.entries)))


def iterate(u: DucciTuple, r: int) -> DucciTuple:
    """The map applied r times; iterate(u, 0) is u itself."""
    if r < 0:
        raise ValueError("iteration count must be >= 0")
    if r == 0:
        return u
    out = _backend.ducci_iterate(u.entries, u.modulus.m, r)
    return DucciTuple(u.modulus, tuple(out))


def coordinate_sum(u: DucciTuple) -> CoordinateSum:
    """The sum of the entries as plain integers (not reduced mod m)."""
    s = sum(u.entries)
    return CoordinateSum(value=s, parity=s % 2, residue_mod_2l=s % (1 << u.modulus.l))
