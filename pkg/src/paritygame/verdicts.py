"""Verdict algebra: who can dictate the final parity of a game.

Exactly three outcomes are possible in this finite two-player game with a
binary payoff: one player can force either parity (they "control"), or the
final parity is forced to a single value that both players can guarantee.
Verdicts are represented absolutely (which *player* controls), so they can be
folded across turns without re-anchoring to the mover.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .order import Parity


class Player(Enum):
    BLACK = "black"
    WHITE = "white"

    def opponent(self) -> "Player":
        return Player.WHITE if self is Player.BLACK else Player.BLACK

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Either ``controller`` is set (that player forces any parity) or ``forced`` is."""

    controller: Optional[Player] = None
    forced: Optional[Parity] = None

    def __post_init__(self):
        if (self.controller is None) == (self.forced is None):
            raise ValueError("verdict is either a controller or a forced parity")

    def grants(self, player: Player, objective: Parity) -> bool:
        """Can ``player`` guarantee the final parity equals ``objective``?"""
        return self.controller is player or self.forced == objective

    def render(self) -> str:
        if self.controller is Player.BLACK:
            return "black-controls"
        if self.controller is Player.WHITE:
            return "white-controls"
        return f"forced-{self.forced}"

    def phrase(self, mover: Player) -> str:
        """The verdict relative to whose turn it is ("first-player" = the mover)."""
        if self.controller is None:
            return self.render()
        return "first-player" if self.controller is mover else "second-player"

    def __str__(self) -> str:
        return self.render()


BLACK_CONTROLS = Verdict(controller=Player.BLACK)
WHITE_CONTROLS = Verdict(controller=Player.WHITE)


def controls(player: Player) -> Verdict:
    return BLACK_CONTROLS if player is Player.BLACK else WHITE_CONTROLS


def forced(parity: Parity) -> Verdict:
    return Verdict(forced=parity)


def verdict_from_forcible(forcible: frozenset | set, mover: Player) -> Verdict:
    """Verdict at a node given the set of parities the mover can force there."""
    if len(forcible) == 2:
        return controls(mover)
    if len(forcible) == 1:
        return forced(next(iter(forcible)))
    return controls(mover.opponent())


def verdict_from_mask(mask: int, mover: Player) -> Verdict:
    """Same, with the forcible set packed as bits (bit 0 = even, bit 1 = odd)."""
    if mask == 3:
        return controls(mover)
    if mask == 1:
        return forced(Parity.EVEN)
    if mask == 2:
        return forced(Parity.ODD)
    return controls(mover.opponent())


def verdict_fold(children: Iterable[Verdict], mover: Player) -> Verdict:
    """Combine successor verdicts into the verdict at a node where ``mover`` plays.

    Each child contributes the parities the mover can still force after moving
    there: both if the child verdict names the mover as controller, exactly the
    forced parity if the child is forced, nothing if the opponent controls.
    """
    gathered: set[Parity] = set()
    seen_any = False
    for child in children:
        seen_any = True
        if child.controller is mover:
            return controls(mover)
        if child.forced is not None:
            gathered.add(child.forced)
            if len(gathered) == 2:
                return controls(mover)
    if not seen_any:
        raise ValueError("verdict_fold requires at least one child verdict")
    return verdict_from_forcible(gathered, mover)
