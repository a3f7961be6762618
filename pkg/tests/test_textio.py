from fractions import Fraction

import pytest

from paritygame.domain import Address, BlockKind, Position, finite_position
from paritygame.errors import DomainSyntaxError
from paritygame.order import Parity
from paritygame.textio import (
    parse_domain,
    parse_domain_raw,
    parse_occupied,
    parse_pennies,
    parse_pieces,
    parse_sequence,
    position_from_json,
    position_to_json,
)


def test_parse_domain_forms():
    assert parse_domain("finite:12").render() == "finite:12"
    assert parse_domain("f12").render() == "finite:12"
    assert parse_domain("w-,w+").render() == "z"  # normalized
    assert parse_domain("f1,z").render() == "f1,z"
    assert parse_domain("dense(cc)").render() == "f1,dense(oo),f1"
    assert [b.kind for b in parse_domain("w+,w+").blocks] == [BlockKind.OMEGA_UP] * 2


def test_parse_domain_round_trip():
    for text in ("finite:5", "w+,w+", "f2,z", "dense(oo)", "f1,dense(oo),f1", "w-"):
        dom = parse_domain(text)
        assert parse_domain(dom.render()).render() == dom.render()


def test_parse_domain_errors():
    with pytest.raises(DomainSyntaxError):
        parse_domain("")
    with pytest.raises(DomainSyntaxError) as err:
        parse_domain("w+,bogus,z")
    assert "block 2" in str(err.value)
    with pytest.raises(DomainSyntaxError):
        parse_domain("f0")


def test_parse_occupied_bare_ints_are_one_based():
    dom = parse_domain("finite:6")
    assert parse_occupied(dom, "3,5") == frozenset({Address(0, 2), Address(0, 4)})


def test_parse_occupied_block_offset():
    dom = parse_domain("f1,z")
    got = parse_occupied(dom, "0:0,1:-2")
    assert got == frozenset({Address(0, 0), Address(1, -2)})
    with pytest.raises(ValueError):
        parse_occupied(dom, "3")  # bare ints need a single finite block


def test_parse_occupied_rational():
    dom = parse_domain("dense(oo)")
    assert parse_occupied(dom, "0:1/3") == frozenset({Address(0, Fraction(1, 3))})


def test_position_json_round_trip():
    pos = finite_position(6, [3, 5], remaining=2, parity=Parity.ODD)
    assert position_from_json(position_to_json(pos)) == pos

    dom = parse_domain("f1,dense(oo),f1")
    pos = Position(
        dom,
        frozenset({Address(0, 0), Address(1, Fraction(7, 22))}),
        Parity.EVEN,
        3,
    )
    again = position_from_json(position_to_json(pos))
    assert again == pos
    assert position_to_json(again) == position_to_json(pos)  # bit-exact


def test_sequence_and_children_text_forms():
    assert parse_sequence("3,5,2").terms == (3, 5, 2)
    assert parse_pennies("2|3|1").clumps == (2, 3, 1)
    assert parse_pieces("wBw").pieces == ("w", "b", "w")
    with pytest.raises(ValueError):
        parse_sequence("3,x")
    with pytest.raises(ValueError):
        parse_pieces("wq")
