"""rlcongest: Weisfeiler-Lehman refinement simulated in the RL-CONGEST model."""

from __future__ import annotations

__version__ = "0.1.0"

from .config import Config
from .exceptions import (
    BandwidthViolation,
    BudgetViolation,
    DisconnectedGraphError,
    InputError,
    LockError,
    ParameterError,
    ResourceError,
    RLCongestError,
    SimulationError,
    SimulationTimeout,
)
from .graph import AttributedGraph

__all__ = [
    "AttributedGraph",
    "BandwidthViolation",
    "BudgetViolation",
    "Config",
    "DisconnectedGraphError",
    "InputError",
    "LockError",
    "ParameterError",
    "RLCongestError",
    "ResourceError",
    "SimulationError",
    "SimulationTimeout",
    "__version__",
]
