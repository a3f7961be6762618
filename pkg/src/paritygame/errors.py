"""Exception types shared across the engine."""


class GameError(Exception):
    """Base class for engine errors."""


class IllegalMoveError(GameError):
    """A move violates the rules of the current game state."""


class LosingPositionError(GameError):
    """A winning move was requested from a position that does not grant one."""


class DomainSyntaxError(GameError, ValueError):
    """The domain mini-language input could not be parsed."""


class OracleCapError(GameError):
    """The requested exhaustive solve exceeds the configured size or depth cap."""


class ProtocolViolationError(GameError):
    """An agent returned an illegal move during a playout."""

    def __init__(self, agent_name: str, detail: str):
        super().__init__(f"agent {agent_name!r}: {detail}")
        self.agent_name = agent_name
