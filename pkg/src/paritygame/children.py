"""Two playable table-top equivalents of the gap-sequence game.

Pennies: clumps of pennies along a line. Take a penny from the first or last
clump, remove a one-penny clump, take a penny from a clump of at least three
and split the rest in two, or merge two adjacent clumps (at least three
pennies together) and pay one penny. The game ends at two pennies: one clump
left means White wins, two clumps mean Black wins. Black moves when the penny
count is even.

Pieces: black and white pieces along a line. Remove any black piece, replace
two adjacent white pieces by one black piece, or remove either extreme piece
whatever its colour. One piece left ends the game: white piece, White wins;
black piece, Black wins. Black moves when the piece count is odd.

Both games step their gap-sequence encodings by exactly one legal sequence
move, so the delta invariant decides them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import IllegalMoveError
from .sequence_game import (
    DEC_HEAD,
    DEC_TAIL,
    DeltaMove,
    GapSequence,
    MoveKind,
    merge,
    remove_unit,
    split,
)
from .verdicts import Player

BLACK_PIECE = "b"
WHITE_PIECE = "w"


@dataclass(frozen=True)
class PenniesState:
    clumps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.clumps, tuple):
            object.__setattr__(self, "clumps", tuple(self.clumps))
        if not self.clumps or any(c < 1 for c in self.clumps):
            raise ValueError("clumps must be positive integers")
        if sum(self.clumps) < 2:
            raise ValueError("need at least two pennies")

    @property
    def total(self) -> int:
        return sum(self.clumps)

    @property
    def terminal(self) -> bool:
        return self.total == 2

    @property
    def mover(self) -> Player:
        return Player.BLACK if self.total % 2 == 0 else Player.WHITE

    def __str__(self) -> str:
        return "|".join(str(c) for c in self.clumps)


@dataclass(frozen=True)
class PiecesState:
    pieces: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.pieces, tuple):
            object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise ValueError("need at least one piece")
        if any(p not in (BLACK_PIECE, WHITE_PIECE) for p in self.pieces):
            raise ValueError("pieces must be 'b' or 'w'")

    @property
    def count(self) -> int:
        return len(self.pieces)

    @property
    def terminal(self) -> bool:
        return self.count == 1

    @property
    def mover(self) -> Player:
        return Player.BLACK if self.count % 2 == 1 else Player.WHITE

    def __str__(self) -> str:
        return "".join(self.pieces)


# ---------------------------------------------------------------------------
# pennies


def pennies_moves(s: PenniesState) -> tuple[tuple[str, PenniesState], ...]:
    if s.terminal:
        raise IllegalMoveError("two pennies left: the game is over")
    clumps = s.clumps
    k = len(clumps)
    out: list[tuple[str, PenniesState]] = []
    if clumps[0] >= 2:
        out.append(("take-first", PenniesState((clumps[0] - 1,) + clumps[1:])))
    if clumps[-1] >= 2:
        out.append(("take-last", PenniesState(clumps[:-1] + (clumps[-1] - 1,))))
    for i in range(1, k + 1):
        if clumps[i - 1] == 1:
            out.append((f"remove-clump:{i}", PenniesState(clumps[: i - 1] + clumps[i:])))
    for i in range(1, k + 1):
        c = clumps[i - 1]
        for left in range(1, c - 1):
            out.append(
                (
                    f"split:{i}:{left}",
                    PenniesState(clumps[: i - 1] + (left, c - 1 - left) + clumps[i:]),
                )
            )
    for i in range(1, k):
        if clumps[i - 1] + clumps[i] >= 3:
            out.append(
                (
                    f"merge:{i}",
                    PenniesState(clumps[: i - 1] + (clumps[i - 1] + clumps[i] - 1,) + clumps[i + 1 :]),
                )
            )
    return tuple(out)


def pennies_winner(s: PenniesState) -> Player:
    if not s.terminal:
        raise ValueError("winner is defined at two pennies left")
    return Player.WHITE if len(s.clumps) == 1 else Player.BLACK


def pennies_to_sequence(s: PenniesState) -> GapSequence:
    return GapSequence(s.clumps)


def pennies_move_delta(label: str) -> DeltaMove:
    """The sequence-game move a pennies move performs (structural identity)."""
    if label == "take-first":
        return DEC_HEAD
    if label == "take-last":
        return DEC_TAIL
    parts = label.split(":")
    if parts[0] == "remove-clump":
        return remove_unit(int(parts[1]))
    if parts[0] == "split":
        return split(int(parts[1]), int(parts[2]))
    if parts[0] == "merge":
        return merge(int(parts[1]))
    raise ValueError(f"unknown pennies move {label!r}")


# ---------------------------------------------------------------------------
# pieces


def pieces_moves(s: PiecesState) -> tuple[tuple[str, PiecesState], ...]:
    if s.terminal:
        raise IllegalMoveError("one piece left: the game is over")
    p = s.pieces
    n = len(p)
    out: list[tuple[str, PiecesState]] = []
    for i in range(1, n + 1):
        if p[i - 1] == BLACK_PIECE:
            out.append((f"remove-black:{i}", PiecesState(p[: i - 1] + p[i:])))
    for i in range(1, n):
        if p[i - 1] == WHITE_PIECE and p[i] == WHITE_PIECE:
            out.append(
                (f"merge-whites:{i}", PiecesState(p[: i - 1] + (BLACK_PIECE,) + p[i + 1 :]))
            )
    out.append(("remove-left", PiecesState(p[1:])))
    out.append(("remove-right", PiecesState(p[:-1])))
    return tuple(out)


def pieces_winner(s: PiecesState) -> Player:
    if not s.terminal:
        raise ValueError("winner is defined at one piece left")
    return Player.WHITE if s.pieces[0] == WHITE_PIECE else Player.BLACK


def pieces_to_sequence(s: PiecesState) -> GapSequence:
    """Cut the line after every black piece; terms are the segment lengths,
    the final term counting the trailing whites plus one."""
    terms: list[int] = []
    count = 0
    for piece in s.pieces:
        count += 1
        if piece == BLACK_PIECE:
            terms.append(count)
            count = 0
    terms.append(count + 1)
    return GapSequence(tuple(terms))


def pieces_move_delta(s: PiecesState, label: str) -> DeltaMove:
    """The sequence-game move a pieces move performs on the encoding."""
    p = s.pieces
    n = len(p)
    terms = pieces_to_sequence(s).terms
    parts = label.split(":")
    if parts[0] == "remove-left":
        return remove_unit(1) if p[0] == BLACK_PIECE else DEC_HEAD
    if parts[0] == "remove-right":
        return remove_unit(len(terms)) if p[-1] == BLACK_PIECE else DEC_TAIL
    if parts[0] == "remove-black":
        i = int(parts[1])
        if p[i - 1] != BLACK_PIECE:
            raise IllegalMoveError(f"piece {i} is not black")
        seg = _segment_of(p, i)
        if terms[seg - 1] == 1:
            return remove_unit(seg)
        return merge(seg)
    if parts[0] == "merge-whites":
        i = int(parts[1])
        if p[i - 1] != WHITE_PIECE or i >= n or p[i] != WHITE_PIECE:
            raise IllegalMoveError(f"pieces {i},{i + 1} are not two whites")
        seg = _segment_of(p, i)
        left = i - _segment_start(p, seg) + 1  # 1-based place within the segment
        return split(seg, left)
    raise ValueError(f"unknown pieces move {label!r}")


def pieces_move_for_delta(s: PiecesState, move: DeltaMove) -> Optional[str]:
    """A pieces move realizing ``move`` on the encoding, or None."""
    for label, _ in pieces_moves(s):
        if pieces_move_delta(s, label) == move:
            return label
    return None


def _segment_of(p: tuple[str, ...], i: int) -> int:
    """1-based segment index of piece ``i`` (segments split after black pieces)."""
    return 1 + sum(1 for j in range(i - 1) if p[j] == BLACK_PIECE)


def _segment_start(p: tuple[str, ...], seg: int) -> int:
    """1-based position of the first piece of segment ``seg``."""
    count = 1
    for j, piece in enumerate(p, start=1):
        if count == seg:
            return j
        if piece == BLACK_PIECE:
            count += 1
    return len(p) + 1
