import pytest

from paritygame import children as ch
from paritygame import sequence_game as sg
from paritygame.errors import IllegalMoveError
from paritygame.verdicts import Player


def test_pennies_moves_two_three():
    state = ch.PenniesState((2, 3))
    got = {(label, nxt.clumps) for label, nxt in ch.pennies_moves(state)}
    assert got == {
        ("take-first", (1, 3)),
        ("take-last", (2, 2)),
        ("split:2:1", (2, 1, 1)),
        ("merge:1", (4,)),
    }


def test_pennies_all_singletons():
    state = ch.PenniesState((1, 1, 1))
    assert {nxt.clumps for _, nxt in ch.pennies_moves(state)} == {(1, 1)}


def test_pennies_three_includes_split():
    # a three-penny clump must be able to become two singletons
    state = ch.PenniesState((3,))
    assert {nxt.clumps for _, nxt in ch.pennies_moves(state)} == {(2,), (1, 1)}


def test_pennies_split_needs_three():
    state = ch.PenniesState((2, 2))
    assert not any(label.startswith("split") for label, _ in ch.pennies_moves(state))


def test_pennies_terminal_verdicts():
    assert ch.pennies_winner(ch.PenniesState((2,))) is Player.WHITE
    assert ch.pennies_winner(ch.PenniesState((1, 1))) is Player.BLACK
    with pytest.raises(IllegalMoveError):
        ch.pennies_moves(ch.PenniesState((1, 1)))


def test_pennies_encoding_is_identity():
    for clumps in [(2, 3), (1, 1), (5,)]:
        assert ch.pennies_to_sequence(ch.PenniesState(clumps)).terms == clumps


def test_pieces_moves_wbw():
    state = ch.PiecesState(tuple("wbw"))
    got = {(label, "".join(nxt.pieces)) for label, nxt in ch.pieces_moves(state)}
    assert got == {
        ("remove-black:2", "ww"),
        ("remove-left", "bw"),
        ("remove-right", "wb"),
    }


def test_pieces_moves_ww():
    state = ch.PiecesState(tuple("ww"))
    got = {(label, "".join(nxt.pieces)) for label, nxt in ch.pieces_moves(state)}
    assert got == {("merge-whites:1", "b"), ("remove-left", "w"), ("remove-right", "w")}


def test_pieces_terminal():
    assert ch.pieces_winner(ch.PiecesState(("b",))) is Player.BLACK
    assert ch.pieces_winner(ch.PiecesState(("w",))) is Player.WHITE
    with pytest.raises(IllegalMoveError):
        ch.pieces_moves(ch.PiecesState(("b",)))


def test_pieces_encodings():
    assert ch.pieces_to_sequence(ch.PiecesState(tuple("wbw"))).terms == (2, 2)
    assert ch.pieces_to_sequence(ch.PiecesState(tuple("wwww"))).terms == (5,)
    assert ch.pieces_to_sequence(ch.PiecesState(tuple("b"))).terms == (1, 1)
    assert ch.pieces_to_sequence(ch.PiecesState(tuple("wbwwbww"))).terms == (2, 3, 3)


def test_pieces_mover_rule():
    assert ch.PiecesState(tuple("wbw")).mover is Player.BLACK  # odd count
    assert ch.PiecesState(tuple("wb")).mover is Player.WHITE


def test_move_mapping_examples():
    state = ch.PiecesState(tuple("wbw"))
    assert ch.pieces_move_delta(state, "remove-black:2") == sg.merge(1)
    assert ch.pieces_move_delta(state, "remove-left") == sg.DEC_HEAD
    assert ch.pieces_move_delta(state, "remove-right") == sg.DEC_TAIL
    state = ch.PiecesState(tuple("bw"))
    assert ch.pieces_move_delta(state, "remove-left") == sg.remove_unit(1)
    state = ch.PiecesState(tuple("ww"))
    assert ch.pieces_move_delta(state, "merge-whites:1") == sg.split(1, 1)


def test_pieces_move_for_delta_round_trip():
    state = ch.PiecesState(tuple("wbwwbww"))
    for mv, _ in sg.legal_moves(ch.pieces_to_sequence(state)):
        label = ch.pieces_move_for_delta(state, mv)
        if label is not None:
            assert ch.pieces_move_delta(state, label) == mv
