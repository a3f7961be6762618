"""Pure-Python solve kernel for finite domains (bitset state space).

States are (occupied bitmask, parity bit); the turn count is implied by the
popcount relative to the target. The value of a state is the 2-bit mask of
final parities the mover can force (bit 0 = even, bit 1 = odd); the waiting
player can force exactly the parities whose complement the mover cannot,
which for masks is ``swap-bits then invert``. A terminal state's mask is the
singleton of its current parity.

The compiled twin in ``_speedups.pyx`` implements the same two entry points;
``paritygame._kernel`` picks one at import time.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def _opponent(mask: int) -> int:
    return (((mask << 1) | (mask >> 1)) & 3) ^ 3


def forcible_mask(
    d: int, occ: int, parity: int, remaining: int, use_memo: bool = True
) -> int:
    """Forcible-parity mask for the mover at one root state."""
    _check(d, occ, parity, remaining)
    memo: dict[int, int] = {}

    def rec(occ: int, parity: int, rem: int) -> int:
        if rem == 0:
            return 1 << parity
        key = (occ << 1) | parity
        if use_memo:
            cached = memo.get(key)
            if cached is not None:
                return cached
        s = 0
        for i in range(d):
            bit = 1 << i
            if occ & bit:
                continue
            child = rec(occ | bit, parity ^ ((occ >> (i + 1)).bit_count() & 1), rem - 1)
            s |= _opponent(child)
            if s == 3:
                break
        # sanity: with an empty mover set the waiting player forces both parities
        assert s != 0 or _opponent(0) == 3
        if use_memo:
            memo[key] = s
        return s

    return rec(occ, parity, remaining)


def sweep_table(d: int, total: int) -> bytes:
    """Forcible masks for every state that ends with ``total`` occupied points.

    Returns ``2 * 2**d`` bytes indexed by ``(occ << 1) | parity``; entries with
    popcount(occ) > total are unreachable and left zero.
    """
    _check(d, 0, 0, total)
    size = 1 << d
    table = bytearray(2 * size)
    by_pc: list[list[int]] = [[] for _ in range(d + 1)]
    for occ in range(size):
        pc = occ.bit_count()
        if pc <= total:
            by_pc[pc].append(occ)
    for occ in by_pc[total]:
        table[occ << 1] = 1
        table[(occ << 1) | 1] = 2
    for pc in range(total - 1, -1, -1):
        for occ in by_pc[pc]:
            for parity in (0, 1):
                s = 0
                for i in range(d):
                    bit = 1 << i
                    if occ & bit:
                        continue
                    child = table[
                        ((occ | bit) << 1) | (parity ^ ((occ >> (i + 1)).bit_count() & 1))
                    ]
                    s |= (((child << 1) | (child >> 1)) & 3) ^ 3
                    if s == 3:
                        break
                table[(occ << 1) | parity] = s
    return bytes(table)


def _check(d: int, occ: int, parity: int, remaining: int) -> None:
    if not 1 <= d <= 24:
        raise ValueError(f"domain size {d} outside 1..24")
    if occ >> d:
        raise ValueError("occupied mask has bits beyond the domain")
    if parity not in (0, 1):
        raise ValueError("parity bit must be 0 or 1")
    if remaining < 0 or occ.bit_count() + remaining > d:
        raise ValueError("remaining turns exceed free points")
