"""Custom exceptions for rlcongest."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .congest.roundlog import RoundLog


class RLCongestError(Exception):
    """Base exception for rlcongest."""

    pass


class ParameterError(RLCongestError):
    """A generator, transform or spec parameter is out of range."""

    pass


class InputError(RLCongestError):
    """Malformed input file, color vector or routing instance."""

    pass


class ResourceError(RLCongestError):
    """A configured resource cap (tuple budget, word width) would be exceeded."""

    pass


class DisconnectedGraphError(RLCongestError):
    """The operation needs a connected graph."""

    pass


class SimulationError(RLCongestError):
    """A simulated run broke the RL-CONGEST contract."""

    pass


class BandwidthViolation(SimulationError):
    """A node put more than w words on one edge in one round."""

    def __init__(self, round_no: int, edge: tuple[int, int], words: int, width: int):
        super().__init__(
            f"Bandwidth violation in round {round_no} on edge {edge[0]}->{edge[1]}: "
            f"{words} words > w={width}"
        )
        self.round = round_no
        self.edge = edge
        self.words = words
        self.width = width


class BudgetViolation(SimulationError):
    """A node spent more computation steps in one round than its class allows."""

    def __init__(self, round_no: int, node: int, steps: int, cap: int):
        super().__init__(
            f"Budget violation in round {round_no} at node {node}: "
            f"{steps} steps > cap {cap}"
        )
        self.round = round_no
        self.node = node
        self.steps = steps
        self.cap = cap


class SimulationTimeout(SimulationError):
    """A run hit max_rounds before every node halted."""

    def __init__(self, message: str, log: RoundLog | None = None):
        super().__init__(message)
        self.log = log


class LockError(RLCongestError):
    """Failed to acquire lock."""

    pass
