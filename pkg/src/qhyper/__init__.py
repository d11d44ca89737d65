"""Exact, p-series and arbitrary-precision verification of basic and elliptic hypergeometric identities."""

from .errors import (
    ConvergenceError,
    InvalidArgument,
    ModeError,
    PoleError,
    QHyperError,
    SamplingError,
)
from .kernel import (
    LatticePoint,
    QContext,
    epoch,
    exact_context,
    float_context,
    lattice_factor_a,
    lattice_factor_c,
    pseries_context,
    qpoch,
    qpoch_inf,
    theta,
)
from .scalars import EXACT, FLOAT, PSERIES, PSeries, pseries_mul, scalar_from_rational, scalar_is_zero

__version__ = "0.1.0"
