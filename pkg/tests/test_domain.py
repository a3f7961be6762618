import random
from fractions import Fraction

import pytest

from paritygame.domain import (
    OMEGA_BI,
    OMEGA_DOWN,
    OMEGA_UP,
    Address,
    Block,
    BlockKind,
    Domain,
    Position,
    addr_key,
    apply_move,
    canonical_moves,
    features,
    finite,
    finite_position,
    normalize_domain,
    occupied_runs,
)
from paritygame.errors import IllegalMoveError
from paritygame.order import Parity
from paritygame.textio import parse_domain


def dense():
    return Block(BlockKind.DENSE)


def test_normalize_merges_facing_ladders():
    assert normalize_domain([OMEGA_DOWN, OMEGA_UP]).blocks == (OMEGA_BI,)


def test_normalize_keeps_ascending_pair():
    assert normalize_domain([OMEGA_UP, OMEGA_UP]).blocks == (OMEGA_UP, OMEGA_UP)


def test_normalize_merges_adjacent_finite():
    assert normalize_domain([finite(2), finite(3)]).blocks == (finite(5),)


def test_normalize_absorbs_finite_into_ladders():
    assert normalize_domain([finite(2), OMEGA_UP]).blocks == (OMEGA_UP,)
    assert normalize_domain([OMEGA_DOWN, finite(2)]).blocks == (OMEGA_DOWN,)
    assert normalize_domain([OMEGA_DOWN, finite(1), OMEGA_UP]).blocks == (OMEGA_BI,)


def test_normalize_splits_closed_dense_endpoints():
    dom = normalize_domain([Block(BlockKind.DENSE, closed_min=True, closed_max=True)])
    assert dom.blocks == (finite(1), dense(), finite(1))


def test_normalize_idempotent():
    cases = [
        [OMEGA_DOWN, OMEGA_UP],
        [finite(1), OMEGA_BI],
        [Block(BlockKind.DENSE, closed_min=True), finite(2), OMEGA_BI],
        [OMEGA_UP, OMEGA_DOWN],
    ]
    for blocks in cases:
        once = normalize_domain(blocks)
        assert normalize_domain(once.blocks).blocks == once.blocks


def test_domain_rejects_non_canonical():
    with pytest.raises(ValueError):
        Domain((finite(2), finite(3)))
    with pytest.raises(ValueError):
        Domain(())


def test_address_order_matches_rational_embedding():
    """The address order must agree with an explicit embedding into rationals."""
    dom = parse_domain("f2,w-,z,dense(oo),w+")

    def embed(addr: Address) -> Fraction:
        base = Fraction(10 * addr.block)
        blk = dom.blocks[addr.block]
        if blk.kind is BlockKind.FINITE:
            return base + addr.offset
        if blk.kind is BlockKind.OMEGA_UP:
            return base + 5 - Fraction(1, addr.offset + 1)
        if blk.kind is BlockKind.OMEGA_DOWN:
            return base + Fraction(1, addr.offset + 1)
        if blk.kind is BlockKind.OMEGA_BI:
            off = addr.offset
            return base + (5 - Fraction(1, off + 1) if off >= 0 else Fraction(1, -off))
        return base + addr.offset  # dense: offsets are already rationals in (0,1)

    rng = random.Random(5)
    pool = []
    for i, blk in enumerate(dom.blocks):
        if blk.kind is BlockKind.FINITE:
            pool += [Address(i, o) for o in range(blk.size)]
        elif blk.kind is BlockKind.OMEGA_BI:
            pool += [Address(i, o) for o in range(-6, 7)]
        elif blk.kind is BlockKind.DENSE:
            pool += [Address(i, Fraction(k, 17)) for k in range(1, 17)]
        else:
            pool += [Address(i, o) for o in range(8)]
    for _ in range(300):
        a, b = rng.sample(pool, 2)
        assert (addr_key(dom, a) < addr_key(dom, b)) == (embed(a) < embed(b))


def test_runs_singleton_pivot():
    pos = finite_position(6, [3], remaining=1)
    (run,) = occupied_runs(pos)
    assert run.size == 1 and run.is_pivot


def test_runs_even_block_not_pivot():
    pos = finite_position(6, [1, 2], remaining=1)
    (run,) = occupied_runs(pos)
    assert run.size == 2 and not run.is_pivot and run.touches_domain_min


def test_runs_dense_points_are_singleton_pivots():
    dom = parse_domain("dense(cc)")
    pos = Position(
        dom,
        frozenset({Address(1, Fraction(1, 4)), Address(1, Fraction(1, 2))}),
        Parity.EVEN,
        1,
    )
    runs = occupied_runs(pos)
    assert [r.size for r in runs] == [1, 1]
    assert all(r.is_pivot for r in runs)


def test_runs_sizes_sum_to_occupied():
    rng = random.Random(3)
    for _ in range(50):
        d = rng.randint(1, 9)
        occupied = rng.sample(range(1, d + 1), rng.randint(0, d))
        pos = finite_position(d, occupied, remaining=0)
        assert sum(r.size for r in occupied_runs(pos)) == len(occupied)


def test_features_finite_example():
    f = features(finite_position(6, [3], remaining=1))
    assert f.pivot_count == 1
    assert f.end_run_size == 0
    assert f.free_count == 5
    assert f.min_free_exists and f.max_free_exists


def test_features_empty_ascending_ladder():
    pos = Position(parse_domain("w+"), frozenset(), Parity.EVEN, 3)
    f = features(pos)
    assert f.pivot_count == 0 and f.end_run_size == 0
    assert f.min_free_exists and not f.max_free_exists
    assert f.free_count is None


def test_features_descending_ladder_end_run():
    pos = Position(parse_domain("w-"), frozenset({Address(0, 0)}), Parity.EVEN, 3)
    assert features(pos).end_run_size == 1


def test_canonical_moves_small_finite_is_everything():
    pos = finite_position(5, [3], remaining=1)
    offs = sorted(a.offset for a in canonical_moves(pos, bound=2))
    assert offs == [0, 1, 3, 4]


def test_canonical_moves_ladder_keeps_window():
    pos = Position(parse_domain("w+"), frozenset({Address(0, 0)}), Parity.EVEN, 1)
    assert [a.offset for a in canonical_moves(pos, bound=1)] == [1, 2]


def test_canonical_moves_dense_midpoints():
    pos = Position(
        parse_domain("dense(oo)"), frozenset({Address(0, Fraction(1, 2))}), Parity.EVEN, 1
    )
    offs = sorted(a.offset for a in canonical_moves(pos, bound=1))
    assert offs == [Fraction(1, 4), Fraction(3, 4)]


def test_canonical_moves_empty_doubly_infinite_ladder():
    pos = Position(parse_domain("z"), frozenset(), Parity.EVEN, 1)
    assert [a.offset for a in canonical_moves(pos, bound=3)] == [0]


def test_apply_move_parity_updates():
    pos = finite_position(3, [2], remaining=1)
    assert apply_move(pos, Address(0, 0)).parity is Parity.ODD  # one greater point
    assert apply_move(pos, Address(0, 2)).parity is Parity.EVEN


def test_apply_move_descending_ladder_reversed_offsets():
    # offsets count down from the maximum, so offset 2 sits below offsets 0 and 1
    dom = parse_domain("w-")
    pos = Position(dom, frozenset({Address(0, 0), Address(0, 1)}), Parity.EVEN, 1)
    assert apply_move(pos, Address(0, 2)).parity is Parity.EVEN


def test_apply_move_rejects_occupied_and_exhausted_turns():
    pos = finite_position(3, [2], remaining=1)
    with pytest.raises(IllegalMoveError):
        apply_move(pos, Address(0, 1))
    done = apply_move(pos, Address(0, 0))
    with pytest.raises(IllegalMoveError):
        apply_move(done, Address(0, 2))


def test_position_validation():
    with pytest.raises(ValueError):
        finite_position(3, [1], remaining=3)  # only two free points
    with pytest.raises(ValueError):
        Position(parse_domain("finite:3"), frozenset({Address(0, 7)}), Parity.EVEN, 0)
    with pytest.raises(ValueError):
        Position(
            parse_domain("dense(oo)"), frozenset({Address(0, Fraction(3, 2))}), Parity.EVEN, 0
        )
