"""Photon wave mechanics on periodic grids.

Thin bindings over the C++ core. Scalar fields are numpy arrays shaped like
``grid.field_shape``; vector fields stack three of them on a leading axis and
two-spinors stack two.
"""

from ._core import *  # noqa: F401,F403
from ._core import (
    ConfigError,
    ContractViolation,
    DomainError,
    Grid,
    IndexModel,
    Medium,
    PhotonqmError,
    StabilityError,
    UnsupportedError,
    ValidationError,
)

__version__ = "0.1.0"
