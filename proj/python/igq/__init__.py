"""Information geometry of colliding Gaussian wave packets."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BoundViolation,
    ConvergenceError,
    DomainError,
    InitialConditions,
    RegimeError,
    ScatteringConfig,
)

__all__ = [name for name in dir() if not name.startswith("_")]
