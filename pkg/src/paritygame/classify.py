"""Winner classification for any position, with the case that decided it.

The dispatch works outside-in: terminal and near-terminal positions are
evaluated exactly over canonical moves; single-finite-block domains go through
the tight counting cases; fully occupied finite edge blocks are stripped by an
exact parity-shifting reduction; a single infinite ladder goes through the
ladder cases; everything else is decided at Black's turn from the feature set,
and at White's turn by folding the classified successors one ply down.

Every rule is applied positionally: a position reached mid-game is the start
of a fresh game with the current occupied set and the turns still left.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .domain import (
    DEFAULT_BOUND,
    Address,
    BlockKind,
    Domain,
    Position,
    apply_move,
    canonical_moves,
    features,
)
from . import sequence_game
from .order import Parity
from .verdicts import (
    BLACK_CONTROLS,
    WHITE_CONTROLS,
    Player,
    Verdict,
    controls,
    forced,
    verdict_fold,
    verdict_from_forcible,
)


class CaseLabel(Enum):
    # finite domain (single finite block), remaining >= 3
    FIN_EXACT = "FIN_EXACT"      # free == remaining: White picks between the last two points
    FIN_DELTA = "FIN_DELTA"      # free == remaining + 1: gap-sequence game decides
    FIN_NOPIV = "FIN_NOPIV"      # free >= remaining + 2, no pivot
    FIN_ONEPIV = "FIN_ONEPIV"    # ... exactly one pivot: the mover wins
    FIN_MANYPIV = "FIN_MANYPIV"  # ... two or more pivots
    # one infinite ladder, remaining >= 3
    Z_ONEPIV = "Z_ONEPIV"
    Z_MANYPIV = "Z_MANYPIV"
    Z_BI_NOPIV = "Z_BI_NOPIV"        # doubly infinite, no pivot: waiting player wins
    Z_PLUS_NOPIV = "Z_PLUS_NOPIV"    # ascending ladder, no pivot: parity is stuck
    Z_MINUS_NOPIV = "Z_MINUS_NOPIV"  # descending ladder, no pivot: parity follows a formula
    # general symbolic domain, Black's turn (remaining odd >= 3), pivot present
    R_PIVOT = "R_PIVOT"
    # ... no pivot, no unfilled finite island (m = least free pick, M = greatest free pick)
    R1A = "R1a"  # both picks can avoid the global extremes
    R1B = "R1b"  # no global max free; least pick forced onto the global min
    R1C = "R1c"  # no global min free; greatest pick forced onto the global max
    R1D = "R1d"  # least pick free, greatest pick forced onto the global max
    R1E = "R1e"  # greatest pick free, least pick forced onto the global min
    R1F = "R1f"  # both picks forced onto the global extremes
    R2 = "R2"    # least picks exist, no greatest pick anywhere
    R3 = "R3"    # greatest picks exist, no least pick anywhere
    R4 = "R4"    # neither pick exists
    # ... no pivot, some unfilled finite island
    R5 = "R5"    # a central one
    R6 = "R6"    # two edge ones
    R7A = "R7a"  # only the rightmost island is unfilled finite; another greatest pick exists
    R7B = "R7b"  # ... and no global min free
    R7C = "R7c"  # ... neither: parity is stuck
    R8A = "R8a"  # only the leftmost island is unfilled finite; another least pick exists
    R8B = "R8b"  # ... and no global max free
    R8C = "R8c"  # ... neither: parity follows the end-run formula
    # horizons
    BASE_ENUM = "BASE_ENUM"    # remaining <= 2: exact enumeration
    WHITE_FOLD = "WHITE_FOLD"  # White's turn on a general symbolic domain: one-ply fold


def _end_formula(pos: Position, end_run_size: int) -> Parity:
    # parity after a no-pivot descent: current plus end run plus one flip per
    # remaining pair of turns
    n = pos.remaining
    return pos.parity + Parity.from_count(end_run_size + (n - 1) // 2)


@lru_cache(maxsize=1 << 18)
def classify(pos: Position, bound: int = DEFAULT_BOUND) -> tuple[Verdict, CaseLabel]:
    r = pos.remaining
    if r == 0:
        return forced(pos.parity), CaseLabel.BASE_ENUM
    if r <= 2:
        return (
            verdict_from_forcible(_forcible_shallow(pos, bound), pos.mover),
            CaseLabel.BASE_ENUM,
        )

    blocks = pos.domain.blocks
    if pos.domain.is_finite:
        return _classify_finite(pos)
    stripped = _strip_filled_edges(pos)
    if stripped is not None:
        reduced, flip = stripped
        verdict, label = classify(reduced, bound)
        if flip and verdict.forced is not None:
            verdict = forced(verdict.forced.flip())
        return verdict, label
    if len(blocks) == 1 and blocks[0].kind in (
        BlockKind.OMEGA_UP,
        BlockKind.OMEGA_DOWN,
        BlockKind.OMEGA_BI,
    ):
        return _classify_ladder(pos)
    if pos.mover is Player.WHITE:
        children = (classify(apply_move(pos, a), bound)[0] for a in canonical_moves(pos, bound))
        return verdict_fold(children, Player.WHITE), CaseLabel.WHITE_FOLD
    return _classify_symbolic_black(pos)


def _strip_filled_edges(pos: Position):
    """Peel fully occupied finite edge blocks off a multi-block domain.

    Such a block is frozen: it offers no moves, no island ever merges with it,
    and it only adds a constant to every move's count of greater occupied
    points -- zero for a left edge, its size for a right edge. The reduced
    position is therefore equivalent up to flipping every final parity by
    ``remaining * size`` of the dropped right edge, which is the flip returned
    alongside it. Returns None when nothing strips.
    """
    blocks = pos.domain.blocks
    occ_count = [0] * len(blocks)
    for a in pos.occupied:
        occ_count[a.block] += 1

    def filled(i: int) -> bool:
        return blocks[i].kind is BlockKind.FINITE and occ_count[i] == blocks[i].size

    lo, hi = 0, len(blocks)
    flip = 0
    while hi - lo > 1 and filled(lo):
        lo += 1
    while hi - lo > 1 and filled(hi - 1):
        flip ^= (pos.remaining * blocks[hi - 1].size) & 1
        hi -= 1
    if lo == 0 and hi == len(blocks):
        return None
    reduced = Position(
        Domain(blocks[lo:hi]),
        frozenset(Address(a.block - lo, a.offset) for a in pos.occupied if lo <= a.block < hi),
        pos.parity,
        pos.remaining,
    )
    return reduced, flip


def _forcible_shallow(pos: Position, bound: int) -> frozenset[Parity]:
    """Exact forcible set for remaining <= 2.

    One canonical representative per free stretch is exact here: with at most
    two turns left, a move's effect depends only on which stretch it lands in
    and whether it sits at an end, never on how deep inside it sits.
    """
    if pos.remaining == 0:
        return frozenset((pos.parity,))
    out: set[Parity] = set()
    for a in canonical_moves(pos, bound):
        child = _forcible_shallow(apply_move(pos, a), bound)
        out.update(p for p in Parity if p.flip() not in child)
        if len(out) == 2:
            break
    return frozenset(out)


def _classify_finite(pos: Position) -> tuple[Verdict, CaseLabel]:
    f = features(pos)
    free = f.free_count
    assert free is not None
    if free == pos.remaining:
        return WHITE_CONTROLS, CaseLabel.FIN_EXACT
    if free == pos.remaining + 1:
        w = sequence_game.winner(sequence_game.encode(pos))
        return controls(w), CaseLabel.FIN_DELTA
    if f.pivot_count == 0:
        return WHITE_CONTROLS, CaseLabel.FIN_NOPIV
    if f.pivot_count == 1:
        return controls(pos.mover), CaseLabel.FIN_ONEPIV
    return BLACK_CONTROLS, CaseLabel.FIN_MANYPIV


def _classify_ladder(pos: Position) -> tuple[Verdict, CaseLabel]:
    f = features(pos)
    if f.pivot_count == 1:
        return controls(pos.mover), CaseLabel.Z_ONEPIV
    if f.pivot_count >= 2:
        return BLACK_CONTROLS, CaseLabel.Z_MANYPIV
    kind = pos.domain.blocks[0].kind
    if kind is BlockKind.OMEGA_BI:
        return controls(pos.mover.opponent()), CaseLabel.Z_BI_NOPIV
    if kind is BlockKind.OMEGA_UP:
        return forced(pos.parity), CaseLabel.Z_PLUS_NOPIV
    # descending ladder: every move adds the end-run size to the parity
    n = pos.remaining
    if n % 2 == 0:
        return forced(pos.parity + Parity.from_count(n // 2)), CaseLabel.Z_MINUS_NOPIV
    return forced(_end_formula(pos, f.end_run_size)), CaseLabel.Z_MINUS_NOPIV


def _classify_symbolic_black(pos: Position) -> tuple[Verdict, CaseLabel]:
    f = features(pos)
    if f.pivot_count >= 1:
        return BLACK_CONTROLS, CaseLabel.R_PIVOT

    if f.has_unfilled_finite:
        central = f.central_unfilled_finite
        if central is None or central > 0:
            return BLACK_CONTROLS, CaseLabel.R5
        if f.edge_unfilled_left and f.edge_unfilled_right:
            return BLACK_CONTROLS, CaseLabel.R6
        if f.edge_unfilled_right:
            if _at_least(f.islands_with_greatest_free, 2):
                return BLACK_CONTROLS, CaseLabel.R7A
            if not f.min_free_exists:
                return BLACK_CONTROLS, CaseLabel.R7B
            # every one of the n (odd) moves sits below the end run and flips
            # the parity by its size
            return forced(pos.parity + Parity.from_count(f.end_run_size)), CaseLabel.R7C
        if _at_least(f.islands_with_least_free, 2):
            return BLACK_CONTROLS, CaseLabel.R8A
        if not f.max_free_exists:
            return BLACK_CONTROLS, CaseLabel.R8B
        return forced(_end_formula(pos, f.end_run_size)), CaseLabel.R8C

    has_least = _at_least(f.islands_with_least_free, 1)
    has_greatest = _at_least(f.islands_with_greatest_free, 1)
    if has_least and has_greatest:
        ch_lo = f.choosable_least_not_min
        ch_hi = f.choosable_greatest_not_max
        if ch_lo and ch_hi:
            return BLACK_CONTROLS, CaseLabel.R1A
        if not ch_lo and not ch_hi:
            return WHITE_CONTROLS, CaseLabel.R1F
        if ch_lo:  # greatest pick forced onto the global max (which must exist)
            if f.min_free_exists:
                # same end-run flip bookkeeping as R7c
                return (
                    forced(pos.parity + Parity.from_count(f.end_run_size)),
                    CaseLabel.R1D,
                )
            return BLACK_CONTROLS, CaseLabel.R1C
        # least pick forced onto the global min
        if f.max_free_exists:
            return forced(_end_formula(pos, f.end_run_size)), CaseLabel.R1E
        return BLACK_CONTROLS, CaseLabel.R1B
    if has_least:
        return forced(pos.parity), CaseLabel.R2
    if has_greatest:
        return forced(_end_formula(pos, f.end_run_size)), CaseLabel.R3
    return WHITE_CONTROLS, CaseLabel.R4


def _at_least(count, k: int) -> bool:
    return count is None or count >= k
