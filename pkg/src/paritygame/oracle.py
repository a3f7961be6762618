"""Ground-truth solvers.

``solve_finite`` exhausts the full game tree of a finite domain with
memoization on (occupied set, parity): placement order beyond its parity never
matters, which shrinks the state space from factorial to ``2**d * 2``.

``solve_bounded`` plays the same search over canonical moves only. On a finite
domain whose free stretches fit inside the canonical window it coincides with
``solve_finite``; on infinite domains it is evidence, not proof.
"""

from __future__ import annotations

from typing import Optional

from . import _kernel
from .domain import (
    DEFAULT_BOUND,
    Address,
    BlockKind,
    Position,
    apply_move,
    canonical_moves,
)
from .errors import OracleCapError
from .order import Parity
from .verdicts import Verdict, verdict_from_mask

DEFAULT_FINITE_CAP = 14
DEFAULT_DEPTH_CAP = 9

KERNEL_IMPLEMENTATION = _kernel.IMPLEMENTATION


def finite_state(pos: Position) -> tuple[int, int, int, int]:
    """(d, occupied bitmask, parity bit, remaining) of a finite-domain position."""
    if not pos.domain.is_finite or len(pos.domain.blocks) != 1:
        raise ValueError("position is not on a single finite block")
    d = pos.domain.blocks[0].size
    occ = 0
    for a in pos.occupied:
        occ |= 1 << a.offset
    return d, occ, pos.parity.bit, pos.remaining


def solve_finite(pos: Position, cap: int = DEFAULT_FINITE_CAP) -> Verdict:
    """Exact verdict by exhaustive memoized search (finite domains only)."""
    d, occ, parity, remaining = finite_state(pos)
    if d > cap:
        raise OracleCapError(f"domain size {d} exceeds the cap of {cap}")
    mask = _kernel.forcible_mask(d, occ, parity, remaining)
    return verdict_from_mask(mask, pos.mover)


def finite_sweep_table(d: int, total: int) -> bytes:
    """Forcible-mask table for all states of ``{1..d}`` games ending at ``total``
    occupied points; indexed by ``(occ << 1) | parity``."""
    return _kernel.sweep_table(d, total)


def solve_bounded(
    pos: Position, bound: int = DEFAULT_BOUND, depth_cap: int = DEFAULT_DEPTH_CAP
) -> Verdict:
    """Minimax verdict over canonical moves only.

    Exact when every free stretch fits the canonical window (in particular on
    small finite domains); for infinite domains treat it as a cross-check.
    """
    if pos.remaining > depth_cap:
        raise OracleCapError(f"remaining {pos.remaining} exceeds the depth cap of {depth_cap}")
    memo: dict[tuple[frozenset[Address], Parity], int] = {}

    def rec(p: Position) -> int:
        if p.remaining == 0:
            return 1 << p.parity.bit
        key = (p.occupied, p.parity)
        cached = memo.get(key)
        if cached is not None:
            return cached
        s = 0
        for a in canonical_moves(p, bound):
            child = rec(apply_move(p, a))
            s |= (((child << 1) | (child >> 1)) & 3) ^ 3
            if s == 3:
                break
        memo[key] = s
        return s

    return verdict_from_mask(rec(pos), pos.mover)
