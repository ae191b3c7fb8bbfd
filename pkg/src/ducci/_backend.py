"""Kernel backend selection.

Prefers the compiled ``ducci._kernels`` extension; falls back to the
pure-Python twin when the extension is missing or ``DUCCI_PURE_PYTHON=1``
is set.  Moduli too large for the compiled int64 kernels are routed to
the pure twin per call, so arbitrary-precision moduli always work.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

if os.environ.get("DUCCI_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND


def _pick(m):
    if _impl.MAX_NATIVE_M is not None and m > _impl.MAX_NATIVE_M:
        return _pure
    return _impl


def ducci_iterate(entries, m, steps):
    return _pick(m).ducci_iterate(entries, m, steps)


def brent_lenper(entries, m, step_budget):
    return _pick(m).brent_lenper(entries, m, step_budget)


def coeff_row_mod(m, n, r):
    return _pick(m).coeff_row_mod(m, n, r)


def successor_array(m, n):
    return _pick(m).successor_array(m, n)


def sweep_kernel(m, n, l, start, stop, step_budget, mismatch_cap=16):
    return _pick(m).sweep_kernel(m, n, l, start, stop, step_budget, mismatch_cap)


def sweep_oddsum(m, n, l, start, stop, step_budget, mismatch_cap=16):
    return _pick(m).sweep_oddsum(m, n, l, start, stop, step_budget, mismatch_cap)
