"""The gap-sequence game and its delta invariant.

A state is an ordered tuple of positive integers summing to at least 2; each
turn replaces it by a new tuple whose sum is exactly one smaller, via one of
five moves (shrink an end term, drop a unit term, split one term into two
summing to one less, or merge two neighbours into their sum less one). The
game ends at sum 2: final ``(2)`` is a White win, final ``(1, 1)`` a Black
win. Black is the mover exactly when the current sum is even.

``delta`` is the invariant deciding the game: scan the terms with a running
colour that starts positive and flips at every even term; delta is the number
of positively-coloured odd terms minus the negatively-coloured ones. Every
move changes ``|delta|`` by exactly one, and ``delta`` always has the parity
of the sum.

Positions of the placement game whose domain holds exactly one more free
point than there are turns left embed into this game: the terms are the
counts of free points before, between, and after the pivots (:func:`encode`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .domain import Address, Position, addr_key, apply_move, occupied_runs
from .errors import IllegalMoveError, LosingPositionError
from .verdicts import Player


@dataclass(frozen=True)
class GapSequence:
    terms: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.terms, tuple):
            object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("sequence needs at least one term")
        if any(not isinstance(t, int) or t < 1 for t in self.terms):
            raise ValueError("all terms must be integers >= 1")
        if sum(self.terms) < 2:
            raise ValueError("term sum must be at least 2")

    @property
    def total(self) -> int:
        return sum(self.terms)

    @property
    def mover(self) -> Player:
        return Player.BLACK if self.total % 2 == 0 else Player.WHITE

    @property
    def terminal(self) -> bool:
        return self.total == 2

    def __str__(self) -> str:
        return ",".join(str(t) for t in self.terms)


class MoveKind(Enum):
    DEC_HEAD = "dec-head"
    DEC_TAIL = "dec-tail"
    REMOVE_UNIT = "remove"
    SPLIT = "split"
    MERGE = "merge"


@dataclass(frozen=True)
class DeltaMove:
    """Indices are 1-based term positions, matching the usual notation."""

    kind: MoveKind
    index: int = 0
    left: int = 0

    def render(self) -> str:
        if self.kind in (MoveKind.DEC_HEAD, MoveKind.DEC_TAIL):
            return self.kind.value
        if self.kind is MoveKind.SPLIT:
            return f"split({self.index},{self.left})"
        return f"{self.kind.value}({self.index})"

    def __str__(self) -> str:
        return self.render()


DEC_HEAD = DeltaMove(MoveKind.DEC_HEAD)
DEC_TAIL = DeltaMove(MoveKind.DEC_TAIL)


def remove_unit(index: int) -> DeltaMove:
    return DeltaMove(MoveKind.REMOVE_UNIT, index)


def split(index: int, left: int) -> DeltaMove:
    return DeltaMove(MoveKind.SPLIT, index, left)


def merge(index: int) -> DeltaMove:
    return DeltaMove(MoveKind.MERGE, index)


def delta(seq: GapSequence) -> int:
    """Signed count of odd terms, the sign flipping at every even term."""
    sign = 1
    value = 0
    for t in seq.terms:
        if t % 2 == 0:
            sign = -sign
        else:
            value += sign
    return value


def apply_delta_move(seq: GapSequence, move: DeltaMove) -> GapSequence:
    terms = seq.terms
    k = len(terms)
    i = move.index
    if move.kind is MoveKind.DEC_HEAD:
        if terms[0] < 2:
            raise IllegalMoveError("head term must be >= 2")
        return GapSequence((terms[0] - 1,) + terms[1:])
    if move.kind is MoveKind.DEC_TAIL:
        if terms[-1] < 2:
            raise IllegalMoveError("tail term must be >= 2")
        return GapSequence(terms[:-1] + (terms[-1] - 1,))
    if not 1 <= i <= k:
        raise IllegalMoveError(f"index {i} out of range 1..{k}")
    if move.kind is MoveKind.REMOVE_UNIT:
        if terms[i - 1] != 1:
            raise IllegalMoveError("only unit terms can be removed")
        return GapSequence(terms[: i - 1] + terms[i:])
    if move.kind is MoveKind.SPLIT:
        t = terms[i - 1]
        if t < 3:
            raise IllegalMoveError("only terms >= 3 can be split")
        if not 1 <= move.left <= t - 2:
            raise IllegalMoveError(f"split parts must be positive and sum to {t - 1}")
        return GapSequence(terms[: i - 1] + (move.left, t - 1 - move.left) + terms[i:])
    # MERGE
    if i >= k:
        raise IllegalMoveError("merge needs a right-hand neighbour")
    if terms[i - 1] + terms[i] < 3:
        raise IllegalMoveError("merged terms must sum to >= 3")
    return GapSequence(terms[: i - 1] + (terms[i - 1] + terms[i] - 1,) + terms[i + 1 :])


def legal_moves(seq: GapSequence) -> tuple[tuple[DeltaMove, GapSequence], ...]:
    """Every legal (move, successor) pair; complete and duplicate-free.

    Distinct moves reaching the same successor are both listed (e.g. both end
    decrements of a single-term sequence).
    """
    if seq.terminal:
        raise IllegalMoveError("terminal sequence has no moves")
    terms = seq.terms
    k = len(terms)
    out: list[tuple[DeltaMove, GapSequence]] = []
    if terms[0] >= 2:
        out.append((DEC_HEAD, apply_delta_move(seq, DEC_HEAD)))
    if terms[-1] >= 2:
        out.append((DEC_TAIL, apply_delta_move(seq, DEC_TAIL)))
    for i in range(1, k + 1):
        if terms[i - 1] == 1:
            mv = remove_unit(i)
            out.append((mv, apply_delta_move(seq, mv)))
    for i in range(1, k + 1):
        t = terms[i - 1]
        for left in range(1, t - 1):
            mv = split(i, left)
            out.append((mv, apply_delta_move(seq, mv)))
    for i in range(1, k):
        if terms[i - 1] + terms[i] >= 3:
            mv = merge(i)
            out.append((mv, apply_delta_move(seq, mv)))
    return tuple(out)


def winner(seq: GapSequence) -> Player:
    """Who wins with best play. At White's turn White wins iff |delta| is 1;
    at Black's turn Black wins iff delta is nonzero."""
    d = abs(delta(seq))
    if seq.mover is Player.WHITE:
        return Player.WHITE if d == 1 else Player.BLACK
    return Player.BLACK if d != 0 else Player.WHITE


def best_move(seq: GapSequence) -> tuple[DeltaMove, GapSequence]:
    """A winning move for the mover: step |delta| up (Black) or down (White).

    In the all-units shape no |delta|-raising move exists; any unit removal
    still wins for Black and is returned instead. Raises
    :class:`LosingPositionError` when the mover has no winning strategy.
    """
    mover = seq.mover
    if winner(seq) is not mover:
        raise LosingPositionError(f"{mover} has no winning move from ({seq})")
    if seq.terminal:
        raise IllegalMoveError("terminal sequence has no moves")
    before = abs(delta(seq))
    target = before + 1 if mover is Player.BLACK else before - 1
    fallback = None
    for mv, nxt in legal_moves(seq):
        if winner(nxt) is not mover:
            continue
        if abs(delta(nxt)) == target:
            return mv, nxt
        if fallback is None:
            fallback = (mv, nxt)
    if fallback is None:
        raise AssertionError(f"winning position ({seq}) has no winning successor")
    return fallback


# ---------------------------------------------------------------------------
# embedding of tight placement-game positions


def encode(pos: Position) -> GapSequence:
    """Gap encoding of a finite-domain position with exactly one spare point.

    Requires ``free == remaining + 1``. The terms count free points below the
    first pivot, between consecutive pivots, and above the last pivot; with no
    pivot the encoding is the single term ``(free)``.
    """
    free = pos.free
    if free is None or free != pos.remaining + 1:
        raise ValueError("encoding needs a finite domain with free == remaining + 1")
    pivots = [r for r in occupied_runs(pos) if r.is_pivot]
    free_keys = sorted(
        addr_key(pos.domain, a)
        for a in _all_addresses(pos)
        if a not in pos.occupied
    )
    cuts = [addr_key(pos.domain, p.low) for p in pivots]
    terms = []
    idx = 0
    for cut in cuts:
        count = 0
        while idx < len(free_keys) and free_keys[idx] < cut:
            count += 1
            idx += 1
        terms.append(count)
    terms.append(len(free_keys) - idx)
    return GapSequence(tuple(terms))


def _all_addresses(pos: Position) -> Iterable[Address]:
    for i, blk in enumerate(pos.domain.blocks):
        yield from (Address(i, off) for off in range(blk.size))


def game_move_delta(pos: Position, move: Address) -> DeltaMove:
    """The sequence-game move matching a placement move, under :func:`encode`.

    ``encode(apply_move(pos, move))`` equals the mapped move applied to
    ``encode(pos)`` whenever the successor is still encodable.
    """
    if move in pos.occupied:
        raise IllegalMoveError(f"point {move} is already occupied")
    seq = encode(pos)
    lows = [addr_key(pos.domain, r.low) for r in occupied_runs(pos) if r.is_pivot]
    key = addr_key(pos.domain, move)
    group = _group_of(key, lows)
    in_group = sorted(
        k
        for k in (
            addr_key(pos.domain, a) for a in _all_addresses(pos) if a not in pos.occupied
        )
        if _group_of(k, lows) == group
    )
    if seq.terms[group - 1] == 1:
        return remove_unit(group)
    if key == in_group[0]:
        if group == 1:
            return DEC_HEAD
        return merge(group - 1)  # extends the pivot below the gap to even size
    if key == in_group[-1]:
        if group == len(seq.terms):
            return DEC_TAIL
        return merge(group)
    left = sum(1 for k in in_group if k < key)
    return split(group, left)  # interior play always makes a fresh pivot


def _group_of(key, pivot_lows) -> int:
    g = 1
    for low in pivot_lows:
        if key > low:
            g += 1
    return g
