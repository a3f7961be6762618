"""Domains, positions, occupied runs, and move generation.

A domain is an ordered concatenation of blocks along the number line. Five
block shapes cover everything the engine plays on:

* ``FINITE``     -- k isolated points in a row;
* ``OMEGA_UP``   -- an ascending ladder: a least point, no greatest;
* ``OMEGA_DOWN`` -- a descending ladder: a greatest point, no least;
* ``OMEGA_BI``   -- a ladder unbounded in both directions;
* ``DENSE``      -- a dense-in-itself stretch (between any two points lies a
  third); in canonical form dense blocks are open at both ends.

Canonical form: no block with a greatest point is immediately followed by a
block with a least point (such a pair is a single island of the line and gets
merged by :func:`normalize_domain`).

Islands (maximal sets of domain points with only finitely many domain points
between any two of them) fall out of the canonical block list directly: every
discrete block is one island, and every point of a dense block is an island of
its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

from .errors import IllegalMoveError
from .order import Parity, append_parity_delta
from .verdicts import Player

DEFAULT_BOUND = 3

Offset = Union[int, Fraction]


class BlockKind(Enum):
    FINITE = "f"
    OMEGA_UP = "w+"
    OMEGA_DOWN = "w-"
    OMEGA_BI = "z"
    DENSE = "dense"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    size: int = 0
    closed_min: bool = False  # raw dense input only; always False once normalized
    closed_max: bool = False

    def __post_init__(self):
        if self.kind is BlockKind.FINITE:
            if self.size < 1:
                raise ValueError("finite block needs size >= 1")
        elif self.size != 0:
            raise ValueError("size is only meaningful for finite blocks")
        if self.kind is not BlockKind.DENSE and (self.closed_min or self.closed_max):
            raise ValueError("closed endpoints are only meaningful for dense blocks")

    @property
    def has_min(self) -> bool:
        if self.kind in (BlockKind.FINITE, BlockKind.OMEGA_UP):
            return True
        if self.kind is BlockKind.DENSE:
            return self.closed_min
        return False

    @property
    def has_max(self) -> bool:
        if self.kind in (BlockKind.FINITE, BlockKind.OMEGA_DOWN):
            return True
        if self.kind is BlockKind.DENSE:
            return self.closed_max
        return False

    def render(self) -> str:
        if self.kind is BlockKind.FINITE:
            return f"f{self.size}"
        if self.kind is BlockKind.DENSE:
            lo = "c" if self.closed_min else "o"
            hi = "c" if self.closed_max else "o"
            return f"dense({lo}{hi})"
        return self.kind.value


def finite(size: int) -> Block:
    return Block(BlockKind.FINITE, size)


OMEGA_UP = Block(BlockKind.OMEGA_UP)
OMEGA_DOWN = Block(BlockKind.OMEGA_DOWN)
OMEGA_BI = Block(BlockKind.OMEGA_BI)
DENSE_OPEN = Block(BlockKind.DENSE)


@dataclass(frozen=True)
class Domain:
    """Canonical ordered block list. Build via :func:`normalize_domain`."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("domain needs at least one block")
        for b in self.blocks:
            if b.kind is BlockKind.DENSE and (b.closed_min or b.closed_max):
                raise ValueError("canonical dense blocks are open; normalize first")
        for left, right in zip(self.blocks, self.blocks[1:]):
            if left.has_max and right.has_min:
                raise ValueError(
                    f"blocks {left.render()},{right.render()} form one island; normalize first"
                )

    @property
    def is_finite(self) -> bool:
        return all(b.kind is BlockKind.FINITE for b in self.blocks)

    @property
    def size(self) -> Optional[int]:
        """Number of points, or None when infinite."""
        if not self.is_finite:
            return None
        return sum(b.size for b in self.blocks)

    def render(self) -> str:
        if len(self.blocks) == 1 and self.blocks[0].kind is BlockKind.FINITE:
            return f"finite:{self.blocks[0].size}"
        return ",".join(b.render() for b in self.blocks)

    def __str__(self) -> str:
        return self.render()


def normalize_domain(blocks: Iterable[Block]) -> Domain:
    """Merge adjacent blocks that belong to one island until canonical.

    Closed dense endpoints split off as single points first: a dense stretch
    with a greatest point is order-isomorphic to an open stretch followed by
    one isolated point (and symmetrically for a least point).
    """
    exploded: list[Block] = []
    for b in blocks:
        if b.kind is BlockKind.DENSE:
            if b.closed_min:
                exploded.append(finite(1))
            exploded.append(DENSE_OPEN)
            if b.closed_max:
                exploded.append(finite(1))
        else:
            exploded.append(b)
    if not exploded:
        raise ValueError("domain needs at least one block")

    stack: list[Block] = []
    for b in exploded:
        while stack and stack[-1].has_max and b.has_min:
            b = _merge(stack.pop(), b)
        stack.append(b)
    return Domain(tuple(stack))


def _merge(left: Block, right: Block) -> Block:
    # left has a greatest point (FINITE / OMEGA_DOWN), right a least (FINITE / OMEGA_UP)
    if left.kind is BlockKind.FINITE and right.kind is BlockKind.FINITE:
        return finite(left.size + right.size)
    if left.kind is BlockKind.FINITE and right.kind is BlockKind.OMEGA_UP:
        return OMEGA_UP
    if left.kind is BlockKind.OMEGA_DOWN and right.kind is BlockKind.FINITE:
        return OMEGA_DOWN
    if left.kind is BlockKind.OMEGA_DOWN and right.kind is BlockKind.OMEGA_UP:
        return OMEGA_BI
    raise AssertionError(f"unmergeable pair {left} {right}")


@dataclass(frozen=True)
class Address:
    """A point of the domain: block index plus within-block offset.

    Offsets: 0..k-1 ascending for FINITE; 0,1,2,... from the least point for
    OMEGA_UP; 0,1,2,... *descending* from the greatest point for OMEGA_DOWN;
    any integer for OMEGA_BI; an exact rational strictly between 0 and 1 for
    DENSE.
    """

    block: int
    offset: Offset

    def __str__(self) -> str:
        return f"{self.block}:{self.offset}"


def addr_coord(domain: Domain, addr: Address) -> Offset:
    """Within-block coordinate that increases with the line order."""
    if domain.blocks[addr.block].kind is BlockKind.OMEGA_DOWN:
        return -addr.offset
    return addr.offset


def coord_address(domain: Domain, block: int, coord: Offset) -> Address:
    if domain.blocks[block].kind is BlockKind.OMEGA_DOWN:
        return Address(block, -coord)
    return Address(block, coord)


def addr_key(domain: Domain, addr: Address) -> tuple:
    return (addr.block, addr_coord(domain, addr))


def validate_address(domain: Domain, addr: Address) -> None:
    if not 0 <= addr.block < len(domain.blocks):
        raise ValueError(f"block index {addr.block} out of range")
    blk = domain.blocks[addr.block]
    off = addr.offset
    if blk.kind is BlockKind.DENSE:
        if not isinstance(off, Fraction) or not 0 < off < 1:
            raise ValueError(f"dense offset must be a Fraction in (0, 1), got {off!r}")
        return
    if not isinstance(off, int) or isinstance(off, bool):
        raise ValueError(f"offset for {blk.kind.value} block must be an integer, got {off!r}")
    if blk.kind is BlockKind.FINITE and not 0 <= off < blk.size:
        raise ValueError(f"finite offset {off} out of range 0..{blk.size - 1}")
    if blk.kind in (BlockKind.OMEGA_UP, BlockKind.OMEGA_DOWN) and off < 0:
        raise ValueError(f"{blk.kind.value} offset must be nonnegative, got {off}")


@dataclass(frozen=True)
class Position:
    """A game state: domain, the occupied points, the running sequence parity,
    and the number of turns left. The mover is Black exactly when ``remaining``
    is odd (Black plays the game's final turn)."""

    domain: Domain
    occupied: frozenset[Address]
    parity: Parity
    remaining: int

    def __post_init__(self):
        if not isinstance(self.occupied, frozenset):
            object.__setattr__(self, "occupied", frozenset(self.occupied))
        if self.remaining < 0:
            raise ValueError("remaining must be nonnegative")
        for a in self.occupied:
            validate_address(self.domain, a)
        free = free_count(self.domain, self.occupied)
        if free is not None and free < self.remaining:
            raise ValueError(
                f"domain too small: {free} free points for {self.remaining} turns"
            )

    @property
    def mover(self) -> Player:
        return Player.BLACK if self.remaining % 2 == 1 else Player.WHITE

    @property
    def free(self) -> Optional[int]:
        return free_count(self.domain, self.occupied)

    def is_free(self, addr: Address) -> bool:
        return addr not in self.occupied

    def sorted_occupied(self) -> list[Address]:
        return sorted(self.occupied, key=lambda a: addr_key(self.domain, a))


def free_count(domain: Domain, occupied: frozenset[Address]) -> Optional[int]:
    size = domain.size
    if size is None:
        return None
    return size - len(occupied)


def finite_position(
    d: int, occupied_1based: Iterable[int] = (), remaining: int = 0, parity: Parity = Parity.EVEN
) -> Position:
    """A position on ``{1..d}``; occupied points given 1-based as in prose."""
    dom = Domain((finite(d),))
    occ = frozenset(Address(0, k - 1) for k in occupied_1based)
    return Position(dom, occ, parity, remaining)


def _trusted_position(
    domain: Domain, occupied: frozenset[Address], parity: Parity, remaining: int
) -> Position:
    # internal fast path: every field already validated by the caller
    p = object.__new__(Position)
    object.__setattr__(p, "domain", domain)
    object.__setattr__(p, "occupied", occupied)
    object.__setattr__(p, "parity", parity)
    object.__setattr__(p, "remaining", remaining)
    return p


def apply_move(pos: Position, addr: Address) -> Position:
    """Occupy ``addr``: parity flips when an odd number of occupied points sit above it."""
    if pos.remaining < 1:
        raise IllegalMoveError("no turns left")
    validate_address(pos.domain, addr)
    if addr in pos.occupied:
        raise IllegalMoveError(f"point {addr} is already occupied")
    key = addr_key(pos.domain, addr)
    greater = sum(1 for a in pos.occupied if addr_key(pos.domain, a) > key)
    return _trusted_position(
        pos.domain,
        pos.occupied | {addr},
        pos.parity + append_parity_delta(greater),
        pos.remaining - 1,
    )


# ---------------------------------------------------------------------------
# occupied runs


@dataclass(frozen=True)
class Run:
    """A maximal set of occupied points that is contiguous within the domain."""

    block: int
    low: Address
    high: Address
    size: int
    is_pivot: bool
    touches_domain_min: bool
    touches_domain_max: bool


def _occ_by_block(pos: Position) -> list[list[Offset]]:
    per: list[list[Offset]] = [[] for _ in pos.domain.blocks]
    for a in pos.occupied:
        per[a.block].append(addr_coord(pos.domain, a))
    for coords in per:
        coords.sort()
    return per


def _block_has_free(blk: Block, occ_count: int) -> bool:
    if blk.kind is BlockKind.FINITE:
        return occ_count < blk.size
    return True


def _free_in_block_below(blk: Block, occ_sorted: list[Offset], coord: Offset) -> bool:
    """Any free point of this block strictly below ``coord``?"""
    if blk.kind in (BlockKind.OMEGA_DOWN, BlockKind.OMEGA_BI, BlockKind.DENSE):
        return True
    # FINITE / OMEGA_UP: coords 0..coord-1 hold exactly ``coord`` slots
    occ_below = sum(1 for c in occ_sorted if c < coord)
    return occ_below < coord


def _free_in_block_above(blk: Block, occ_sorted: list[Offset], coord: Offset) -> bool:
    if blk.kind in (BlockKind.OMEGA_UP, BlockKind.OMEGA_BI, BlockKind.DENSE):
        return True
    if blk.kind is BlockKind.FINITE:
        slots = blk.size - 1 - coord
    else:  # OMEGA_DOWN: coords coord+1 .. 0
        slots = -coord
    occ_above = sum(1 for c in occ_sorted if c > coord)
    return occ_above < slots


def _block_min_coord(blk: Block) -> Optional[Offset]:
    if blk.kind in (BlockKind.FINITE, BlockKind.OMEGA_UP):
        return 0
    return None


def _block_max_coord(blk: Block) -> Optional[Offset]:
    if blk.kind is BlockKind.FINITE:
        return blk.size - 1
    if blk.kind is BlockKind.OMEGA_DOWN:
        return 0
    return None


@lru_cache(maxsize=1 << 16)
def occupied_runs(pos: Position) -> tuple[Run, ...]:
    """All occupied runs, left to right. A run is a pivot when its size is odd
    and free points exist both strictly below and strictly above it."""
    per = _occ_by_block(pos)
    blocks = pos.domain.blocks
    free_in_block = [_block_has_free(blk, len(per[i])) for i, blk in enumerate(blocks)]
    any_free_before = []
    acc = False
    for i in range(len(blocks)):
        any_free_before.append(acc)
        acc = acc or free_in_block[i]
    any_free_after = [False] * len(blocks)
    acc = False
    for i in range(len(blocks) - 1, -1, -1):
        any_free_after[i] = acc
        acc = acc or free_in_block[i]

    runs: list[Run] = []
    last = len(blocks) - 1
    for i, blk in enumerate(blocks):
        coords = per[i]
        if not coords:
            continue
        if blk.kind is BlockKind.DENSE:
            groups = [[c] for c in coords]
        else:
            groups = [[coords[0]]]
            for c in coords[1:]:
                if c == groups[-1][-1] + 1:
                    groups[-1].append(c)
                else:
                    groups.append([c])
        for g in groups:
            lo, hi = g[0], g[-1]
            free_below = any_free_before[i] or _free_in_block_below(blk, coords, lo)
            free_above = any_free_after[i] or _free_in_block_above(blk, coords, hi)
            runs.append(
                Run(
                    block=i,
                    low=coord_address(pos.domain, i, lo),
                    high=coord_address(pos.domain, i, hi),
                    size=len(g),
                    is_pivot=(len(g) % 2 == 1 and free_below and free_above),
                    touches_domain_min=(i == 0 and _block_min_coord(blk) == lo),
                    touches_domain_max=(i == last and _block_max_coord(blk) == hi),
                )
            )
    return tuple(runs)


# ---------------------------------------------------------------------------
# classification features


@dataclass(frozen=True)
class IslandFeatures:
    """Per-block island summary. Discrete blocks are one island each, so the
    flags are literal. A dense block stands for infinitely many one-point
    islands; its flags report whether islands with that property exist in the
    family (they always do whenever the block has free points)."""

    block: int
    kind: BlockKind
    occupied: int
    free: Optional[int]  # None = infinite
    has_least_free: bool
    has_greatest_free: bool
    central: bool
    filled: bool
    unfilled_finite: bool


@dataclass(frozen=True)
class FeatureSet:
    pivot_count: int
    end_run_size: int
    begin_run_size: int
    free_count: Optional[int]  # None = infinite
    min_free_exists: bool
    max_free_exists: bool
    islands: tuple[IslandFeatures, ...]
    islands_with_least_free: Optional[int]  # None = infinitely many
    islands_with_greatest_free: Optional[int]
    central_unfilled_finite: Optional[int]  # central unfilled finite islands
    edge_unfilled_left: bool  # first block: finite with free room
    edge_unfilled_right: bool
    choosable_least_not_min: bool  # an island's least free point other than min of all free
    choosable_greatest_not_max: bool

    @property
    def has_unfilled_finite(self) -> bool:
        central = self.central_unfilled_finite
        return (central is None or central > 0) or self.edge_unfilled_left or self.edge_unfilled_right


def _at_least(count: Optional[int], k: int) -> bool:
    return count is None or count >= k


@lru_cache(maxsize=1 << 16)
def features(pos: Position) -> FeatureSet:
    per = _occ_by_block(pos)
    blocks = pos.domain.blocks
    last = len(blocks) - 1

    runs = occupied_runs(pos)
    pivot_count = sum(1 for r in runs if r.is_pivot)

    islands: list[IslandFeatures] = []
    for i, blk in enumerate(blocks):
        occ = len(per[i])
        if blk.kind is BlockKind.FINITE:
            blk_free: Optional[int] = blk.size - occ
        else:
            blk_free = None
        has_free = _block_has_free(blk, occ)
        if blk.kind is BlockKind.FINITE:
            least = greatest = has_free
        elif blk.kind is BlockKind.OMEGA_UP:
            least, greatest = True, False
        elif blk.kind is BlockKind.OMEGA_DOWN:
            least, greatest = False, True
        elif blk.kind is BlockKind.OMEGA_BI:
            least = greatest = False
        else:  # DENSE: each free point is a one-point island with both
            least = greatest = has_free
        if blk.kind is BlockKind.DENSE:
            central = has_free  # free dense points always have free neighbors both sides
            filled = False
            unfilled_finite = has_free
        else:
            central = i > 0 and i < last  # free exists in neighbouring blocks, see below
            filled = blk.kind is BlockKind.FINITE and occ == blk.size
            unfilled_finite = blk.kind is BlockKind.FINITE and not filled
        islands.append(
            IslandFeatures(i, blk.kind, occ, blk_free, least, greatest, central, filled, unfilled_finite)
        )

    # centrality of discrete blocks needs actual free points on both sides
    free_flags = [_block_has_free(blk, len(per[i])) for i, blk in enumerate(blocks)]
    for i in range(len(blocks)):
        if blocks[i].kind is BlockKind.DENSE:
            continue
        below = any(free_flags[:i])
        above = any(free_flags[i + 1 :])
        isl = islands[i]
        islands[i] = IslandFeatures(
            isl.block, isl.kind, isl.occupied, isl.free, isl.has_least_free,
            isl.has_greatest_free, below and above, isl.filled, isl.unfilled_finite,
        )

    any_dense_free = any(
        blk.kind is BlockKind.DENSE for blk in blocks
    )  # dense blocks always keep free points (finitely many ever occupied)

    if any_dense_free:
        least_count: Optional[int] = None
        greatest_count: Optional[int] = None
        central_unfilled: Optional[int] = None
    else:
        least_count = sum(1 for isl in islands if isl.has_least_free)
        greatest_count = sum(1 for isl in islands if isl.has_greatest_free)
        central_unfilled = sum(1 for isl in islands if isl.unfilled_finite and isl.central)

    min_free_exists = False
    for i, blk in enumerate(blocks):
        if not free_flags[i]:
            continue
        min_free_exists = blk.kind in (BlockKind.FINITE, BlockKind.OMEGA_UP)
        break
    max_free_exists = False
    for i in range(len(blocks) - 1, -1, -1):
        if not free_flags[i]:
            continue
        max_free_exists = blocks[i].kind in (BlockKind.FINITE, BlockKind.OMEGA_DOWN)
        break

    end_run = 0
    begin_run = 0
    for r in runs:
        if r.touches_domain_max:
            end_run = r.size
        if r.touches_domain_min:
            begin_run = r.size

    choosable_least = (
        _at_least(least_count, 2) if min_free_exists else _at_least(least_count, 1)
    )
    choosable_greatest = (
        _at_least(greatest_count, 2) if max_free_exists else _at_least(greatest_count, 1)
    )

    return FeatureSet(
        pivot_count=pivot_count,
        end_run_size=end_run,
        begin_run_size=begin_run,
        free_count=free_count(pos.domain, pos.occupied),
        min_free_exists=min_free_exists,
        max_free_exists=max_free_exists,
        islands=tuple(islands),
        islands_with_least_free=least_count,
        islands_with_greatest_free=greatest_count,
        central_unfilled_finite=central_unfilled,
        edge_unfilled_left=islands[0].unfilled_finite and islands[0].kind is BlockKind.FINITE,
        edge_unfilled_right=islands[last].unfilled_finite
        and islands[last].kind is BlockKind.FINITE,
        choosable_least_not_min=choosable_least,
        choosable_greatest_not_max=choosable_greatest,
    )


# ---------------------------------------------------------------------------
# canonical moves


@lru_cache(maxsize=1 << 16)
def canonical_moves(pos: Position, bound: int = DEFAULT_BOUND) -> tuple[Address, ...]:
    """A finite set of free points covering every game-relevant move class.

    For each maximal free stretch: every point when the stretch is short
    (length <= 2*bound + 2), otherwise the ``bound + 1`` points nearest each
    finite end (an end is finite when it borders an occupied point or a block
    boundary). A stretch with no finite end (an untouched doubly infinite
    ladder) gets a single representative. Dense gaps get their midpoint.
    """
    if pos.remaining < 1:
        raise IllegalMoveError("no turns left")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out: list[Address] = []
    per = _occ_by_block(pos)
    for i, blk in enumerate(pos.domain.blocks):
        occ = per[i]
        if blk.kind is BlockKind.DENSE:
            edges = [Fraction(0)] + occ + [Fraction(1)]
            for lo, hi in zip(edges, edges[1:]):
                out.append(Address(i, (lo + hi) / 2))
            continue
        lo_bound = _block_min_coord(blk)
        hi_bound = _block_max_coord(blk)
        stretches: list[tuple[Optional[int], Optional[int]]] = []
        prev = lo_bound - 1 if lo_bound is not None else None
        for c in occ:
            stretches.append((None if prev is None else prev + 1, c - 1))
            prev = c
        stretches.append((None if prev is None else prev + 1, hi_bound))
        for a, b in stretches:
            coords: Iterator[int]
            if a is not None and b is not None:
                if a > b:
                    continue
                if b - a + 1 <= 2 * bound + 2:
                    coords = iter(range(a, b + 1))
                else:
                    coords = iter(list(range(a, a + bound + 1)) + list(range(b - bound, b + 1)))
            elif a is not None:
                coords = iter(range(a, a + bound + 1))
            elif b is not None:
                coords = iter(range(b - bound, b + 1))
            else:
                coords = iter((0,))
            out.extend(coord_address(pos.domain, i, c) for c in coords)
    out.sort(key=lambda a: addr_key(pos.domain, a))
    return tuple(out)
