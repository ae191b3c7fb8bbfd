"""Ducci map dynamics on Z_m^n.

Orbit pre-periods and periods, the cycle subgroup and its sum-predicate
characterization, exact preimages, the coefficient algebra of iterated
steps, and transition graphs with DOT export.  Hot kernels run from a
compiled extension when available (see ``backend_name``).
"""

from ._backend import BACKEND as _BACKEND
from .coeffs import (
    CoeffRow,
    PeriodRowForm,
    binomial_fold_oracle,
    coeff_row,
    convolution_check,
    period_row_form,
    row_sum_check,
)
from .core import (
    CoordinateSum,
    DucciTuple,
    Modulus,
    add,
    coordinate_sum,
    ducci_step,
    iterate,
    scale,
    shift,
)
from .dynamics import (
    BasicInvariants,
    CycleInfo,
    OrbitPrefix,
    basic_len_per,
    basic_tuple,
    len_per,
    orbit_prefix,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    DucciError,
    HypothesisError,
)
from .graph import (
    Component,
    ComponentSummary,
    TransitionGraph,
    build_graph,
    component_of,
    export_dot,
)
from .kernel import (
    KernelReport,
    in_kernel_oracle,
    in_kernel_predicate,
    kernel_size,
    verify_kernel_theorem,
    verify_length_theorem,
    verify_odd_sum_length,
)
from .predecessors import (
    PredecessorSet,
    even_sum_count,
    has_predecessor,
    predecessors,
)

__version__ = "0.1.0"


def backend_name() -> str:
    """Which kernel implementation is active: "cython" or "python"."""
    return _BACKEND
