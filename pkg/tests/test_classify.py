from fractions import Fraction

import pytest

from paritygame.classify import CaseLabel, classify
from paritygame.domain import Address, Position, finite_position
from paritygame.order import Parity
from paritygame.textio import parse_domain
from paritygame.verdicts import (
    BLACK_CONTROLS,
    WHITE_CONTROLS,
    Player,
    forced,
    verdict_fold,
)


def pos(domain, occupied=(), parity=Parity.EVEN, remaining=3):
    return Position(parse_domain(domain), frozenset(occupied), parity, remaining)


def test_finite_counting_cases():
    assert classify(finite_position(5, [], remaining=5)) == (WHITE_CONTROLS, CaseLabel.FIN_EXACT)
    v, label = classify(finite_position(6, [3], remaining=4))
    assert label is CaseLabel.FIN_DELTA and v is WHITE_CONTROLS
    assert classify(finite_position(8, [], remaining=4)) == (
        WHITE_CONTROLS,
        CaseLabel.FIN_NOPIV,
    )
    v, label = classify(finite_position(8, [3], remaining=4))
    assert label is CaseLabel.FIN_ONEPIV and v is WHITE_CONTROLS  # mover is White
    v, label = classify(finite_position(8, [3], remaining=3))
    assert label is CaseLabel.FIN_ONEPIV and v is BLACK_CONTROLS
    v, label = classify(finite_position(9, [2, 5], remaining=3))
    assert label is CaseLabel.FIN_MANYPIV and v is BLACK_CONTROLS


def test_ladder_cases():
    v, label = classify(pos("z", remaining=3))
    assert label is CaseLabel.Z_BI_NOPIV and v is WHITE_CONTROLS  # second player

    v, label = classify(pos("z", {Address(0, 0)}, remaining=3))
    assert label is CaseLabel.Z_ONEPIV and v is BLACK_CONTROLS

    v, label = classify(pos("z", {Address(0, 0), Address(0, 4)}, remaining=3))
    assert label is CaseLabel.Z_MANYPIV and v is BLACK_CONTROLS

    v, label = classify(pos("w+", remaining=5))
    assert label is CaseLabel.Z_PLUS_NOPIV and v == forced(Parity.EVEN)

    # descending ladder: even turn count adds n/2, odd adds end-run + (n-1)/2
    v, label = classify(pos("w-", remaining=4))
    assert label is CaseLabel.Z_MINUS_NOPIV and v == forced(Parity.EVEN)
    v, label = classify(pos("w-", remaining=6))
    assert v == forced(Parity.ODD)
    v, label = classify(pos("w-", {Address(0, 0)}, remaining=5))
    assert v == forced(Parity.ODD)  # end run 1 plus (5-1)/2 = 3 flips


def test_golden_examples_all_n():
    for n in (3, 4, 5, 6):
        for d in (n, n + 1, n + 4):
            assert classify(finite_position(d, [], remaining=n))[0] is WHITE_CONTROLS
        assert classify(pos("dense(cc)", remaining=n))[0] is BLACK_CONTROLS
        assert classify(pos("w+,w+", remaining=n))[0] == forced(Parity.EVEN)
        want = forced(Parity.from_bit((n // 2) % 2))
        assert classify(pos("w-,w-", remaining=n))[0] == want
        assert classify(pos("w+,w-", remaining=n))[0] is WHITE_CONTROLS
        v = classify(pos("w-,w+", remaining=n))[0]
        assert v.controller is (Player.WHITE if n % 2 == 1 else Player.BLACK)  # second player
        v = classify(pos("f1,z", remaining=n))[0]
        assert v.controller is (Player.BLACK if n % 2 == 1 else Player.WHITE)  # first player
        assert classify(pos("f2,z", remaining=n))[0] is BLACK_CONTROLS


def test_interval_point_is_black_even_when_occupied():
    p = pos("dense(cc)", {Address(1, Fraction(1, 2))}, remaining=3)
    v, label = classify(p)
    assert v is BLACK_CONTROLS and label is CaseLabel.R_PIVOT


def test_symbolic_case_labels():
    assert classify(pos("f2,z", remaining=3))[1] is CaseLabel.R8B
    assert classify(pos("w+,f2", remaining=3))[1] is CaseLabel.R7C
    assert classify(pos("w+,w+", remaining=3))[1] is CaseLabel.R2
    assert classify(pos("w-,w-", remaining=3))[1] is CaseLabel.R3
    assert classify(pos("w+,w-", remaining=3))[1] is CaseLabel.R1F
    assert classify(pos("z,z", remaining=3))[1] is CaseLabel.R4
    assert classify(pos("dense(oo)", remaining=3))[1] is CaseLabel.R5
    assert classify(pos("f1,z,f1", remaining=3))[1] is CaseLabel.R6
    # least pick to spare, greatest pick pinned: keep the parity (empty end run)
    v, label = classify(pos("w+,w+,w-", remaining=3))
    assert label is CaseLabel.R1D and v == forced(Parity.EVEN)
    # greatest pick to spare, least pick pinned: the end-run formula
    v, label = classify(pos("w+,w-,w-", remaining=3))
    assert label is CaseLabel.R1E and v == forced(Parity.ODD)  # 0 + (3-1)/2 flips


def test_r1d_shape():
    # two ascending ladders below one descending: least picks to spare, the
    # greatest pick pinned to the global max; the end run flips the formula
    p = pos("w+,w+,w-", {Address(2, 0)}, remaining=3)
    v, label = classify(p)
    assert label is CaseLabel.R1D
    assert v == forced(Parity.ODD)  # end run of size 1


def test_filled_edge_reduction():
    # a fully occupied finite top block freezes: with one point it flips every
    # move, so three turns flip the parity
    p = pos("w+,f1", {Address(1, 0)}, remaining=3)
    v, label = classify(p)
    assert label is CaseLabel.Z_PLUS_NOPIV
    assert v == forced(Parity.ODD)
    p4 = pos("w+,f1", {Address(1, 0)}, remaining=4)
    assert classify(p4)[0] == forced(Parity.EVEN)
    # a fully occupied left edge is parity-transparent
    p = pos("f1,z", {Address(0, 0)}, remaining=3)
    v, label = classify(p)
    assert label is CaseLabel.Z_BI_NOPIV and v is WHITE_CONTROLS


def test_white_fold_example():
    # point below a doubly infinite ladder at White's turn: the first player
    # wins by taking the point
    v, label = classify(pos("f1,z", remaining=4))
    assert label is CaseLabel.WHITE_FOLD and v is WHITE_CONTROLS


def test_base_enum_horizon():
    assert classify(finite_position(2, [], remaining=1)) == (
        forced(Parity.EVEN),
        CaseLabel.BASE_ENUM,
    )
    assert classify(finite_position(2, [], remaining=2))[0] is WHITE_CONTROLS
    assert classify(finite_position(4, [2], remaining=0)) == (
        forced(Parity.EVEN),
        CaseLabel.BASE_ENUM,
    )
    # tight-by-one at a single turn: nobody chooses, enumeration says forced
    v, label = classify(finite_position(2, [], remaining=1))
    assert v.forced is not None and label is CaseLabel.BASE_ENUM


def test_verdict_fold_examples():
    assert verdict_fold([BLACK_CONTROLS, forced(Parity.EVEN)], Player.WHITE) == forced(
        Parity.EVEN
    )
    assert (
        verdict_fold([forced(Parity.EVEN), forced(Parity.ODD)], Player.WHITE)
        is WHITE_CONTROLS
    )
    assert verdict_fold([BLACK_CONTROLS], Player.WHITE) is BLACK_CONTROLS
    with pytest.raises(ValueError):
        verdict_fold([], Player.WHITE)


def test_fold_monotone():
    children = [forced(Parity.EVEN)]
    base = verdict_fold(children, Player.WHITE)
    assert base == forced(Parity.EVEN)
    widened = verdict_fold(children + [forced(Parity.ODD)], Player.WHITE)
    assert widened is WHITE_CONTROLS  # adding a child never shrinks the reachable set


def test_rendering_consistency():
    for n in (3, 5):
        p = pos("f1,z", remaining=n)
        v, _ = classify(p)
        assert v.phrase(p.mover) == "first-player"
        assert v.controller is Player.BLACK
    for n in (4, 6):
        p = pos("f1,z", remaining=n)
        v, _ = classify(p)
        assert v.phrase(p.mover) == "first-player"
        assert v.controller is Player.WHITE


def test_second_last_turn_fixtures():
    # three turns left with room to spare: no pivot loses the mover the game
    v, _ = classify(finite_position(9, [1, 2], remaining=3))
    assert v is WHITE_CONTROLS
    v, _ = classify(finite_position(9, [3], remaining=3))
    assert v is BLACK_CONTROLS
