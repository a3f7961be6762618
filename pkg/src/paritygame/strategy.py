"""Concrete winning moves and self-play between engine, oracle, and adversaries.

The engine's strategy is one-ply lookahead over the classifier: from a
position that grants the mover its objective, some canonical move leads to a
successor that still grants it, and the lowest such move is played. The named
manoeuvres from the analysis (make a pivot, remove the pivot while choosing
the parity, attach to an end run, play an extreme free point) all fall out of
this without being hand-coded; fixtures in the tests pin the effect classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .classify import classify
from .domain import (
    DEFAULT_BOUND,
    Address,
    BlockKind,
    Position,
    addr_key,
    apply_move,
    canonical_moves,
)
from .errors import LosingPositionError, ProtocolViolationError
from .oracle import finite_state, solve_finite
from .order import Parity
from .verdicts import Player, Verdict

CONTROL = "control"
Objective = Union[Parity, str]  # a Parity target, or CONTROL


def _grants(verdict: Verdict, player: Player, objective: Objective) -> bool:
    if objective == CONTROL:
        return verdict.controller is player
    return verdict.grants(player, objective)


def winning_move(pos: Position, objective: Objective, bound: int = DEFAULT_BOUND) -> Address:
    """Lowest canonical move whose successor still grants the mover ``objective``.

    With a parity objective this always exists when the position grants it.
    The CONTROL objective asks for a successor the mover still controls, which
    near the end of the game may not exist (control eventually has to be spent
    on a concrete parity); prefer parity objectives in play.
    """
    mover = pos.mover
    verdict, _ = classify(pos, bound)
    if not _grants(verdict, mover, objective):
        raise LosingPositionError(
            f"{mover} cannot achieve {objective} from this position ({verdict})"
        )
    for a in canonical_moves(pos, bound):
        child, _ = classify(apply_move(pos, a), bound)
        if _grants(child, mover, objective):
            return a
    if objective == CONTROL:
        raise LosingPositionError(
            "control cannot be preserved another turn; choose a parity objective"
        )
    raise AssertionError("granted objective but no preserving canonical move; classifier gap")


# ---------------------------------------------------------------------------
# agents


@dataclass
class ClassifierLookahead:
    """Plays winning_move whenever the classifier grants its parity objective,
    else the lowest canonical move."""

    objective: Parity
    bound: int = DEFAULT_BOUND
    name: str = "classifier-lookahead"

    def choose(self, pos: Position, rng: random.Random) -> Address:
        verdict, _ = classify(pos, self.bound)
        if verdict.grants(pos.mover, self.objective):
            return winning_move(pos, self.objective, self.bound)
        return canonical_moves(pos, self.bound)[0]


@dataclass
class MinimaxOracle:
    """Exact adversary for finite domains: scans every free point, not just
    canonical ones, so soundness tests don't lean on the canonical move set.

    ``lookup`` may supply precomputed forcible masks (occ, parity_bit) -> mask
    for sweep harnesses; otherwise each successor is solved on demand.
    """

    objective: Parity
    lookup: Optional[Callable[[int, int], int]] = None
    name: str = "minimax-oracle"

    def choose(self, pos: Position, rng: random.Random) -> Address:
        d, occ, parity, remaining = finite_state(pos)
        best = None
        fallback = None
        forced_fallback = None
        for i in range(d):
            bit = 1 << i
            if occ & bit:
                continue
            child_parity = parity ^ ((occ >> (i + 1)).bit_count() & 1)
            mask = self._mask(pos, d, occ | bit, child_parity, remaining - 1)
            waiting = (((mask << 1) | (mask >> 1)) & 3) ^ 3
            if (waiting >> self.objective.bit) & 1:
                best = Address(0, i)
                break
            if waiting != 0 and forced_fallback is None:
                # losing either way; a forced successor at least denies the
                # opponent a free choice
                forced_fallback = Address(0, i)
            if fallback is None:
                fallback = Address(0, i)
        if best is not None:
            return best
        if forced_fallback is not None:
            return forced_fallback
        assert fallback is not None
        return fallback

    def _mask(self, pos: Position, d: int, occ: int, parity: int, remaining: int) -> int:
        if self.lookup is not None:
            return self.lookup(occ, parity)
        from . import _kernel

        return _kernel.forcible_mask(d, occ, parity, remaining)


@dataclass
class UniformRandom:
    bound: int = DEFAULT_BOUND
    name: str = "uniform-random"

    def choose(self, pos: Position, rng: random.Random) -> Address:
        return rng.choice(canonical_moves(pos, self.bound))


@dataclass
class GreedyParity:
    """Plays the lowest move whose immediate parity matches its objective."""

    objective: Parity
    bound: int = DEFAULT_BOUND
    name: str = "greedy-parity"

    def choose(self, pos: Position, rng: random.Random) -> Address:
        moves = canonical_moves(pos, self.bound)
        for a in moves:
            if apply_move(pos, a).parity == self.objective:
                return a
        return moves[0]


Agent = Union[ClassifierLookahead, MinimaxOracle, UniformRandom, GreedyParity]


def play_out(
    pos: Position,
    black: Agent,
    white: Agent,
    seed: int,
    moves: Optional[list[Address]] = None,
) -> Parity:
    """Alternate the agents until no turns remain; returns the final parity.

    Reproducible from ``seed``. An agent returning an occupied or invalid
    point aborts with a protocol violation naming it. ``moves``, when given,
    collects the move list for harness records.
    """
    rng = random.Random(seed)
    while pos.remaining > 0:
        agent = black if pos.mover is Player.BLACK else white
        addr = agent.choose(pos, rng)
        try:
            pos = apply_move(pos, addr)
        except Exception as exc:
            raise ProtocolViolationError(agent.name, f"illegal move {addr}: {exc}") from exc
        if moves is not None:
            moves.append(addr)
    return pos.parity
