"""Text forms: the domain mini-language, position documents, and game states.

Domain grammar::

    domain := "finite:" INT | block ("," block)*
    block  := "f" INT | "w+" | "w-" | "z" | "dense(" ("o"|"c") ("o"|"c") ")"

Examples: ``finite:12``, ``w+,w+``, ``f1,z``, ``dense(oc)``. Input is
normalized; :func:`parse_domain_raw` exposes the pre-normalization blocks so
callers can notice when normalization changed anything.

Positions serialize to a JSON document with the domain string, the occupied
addresses as ``{"block": i, "offset": o}`` (rational offsets as ``"p/q"``
strings), the parity, and the remaining turn count; round-trips bit-exactly.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Union

from .children import PenniesState, PiecesState
from .domain import (
    Address,
    Block,
    BlockKind,
    Domain,
    Position,
    finite,
    normalize_domain,
)
from .errors import DomainSyntaxError
from .order import Parity
from .sequence_game import GapSequence

_FINITE_RE = re.compile(r"finite:(\d+)$")
_F_RE = re.compile(r"f(\d+)$")
_DENSE_RE = re.compile(r"dense\(([oc])([oc])\)$")


def parse_domain_raw(text: str) -> tuple[Block, ...]:
    text = text.strip()
    if not text:
        raise DomainSyntaxError("empty domain string")
    m = _FINITE_RE.match(text)
    if m:
        size = int(m.group(1))
        if size < 1:
            raise DomainSyntaxError("finite domain needs at least one point")
        return (finite(size),)
    blocks: list[Block] = []
    for idx, token in enumerate(text.split(",")):
        token = token.strip()
        if token == "w+":
            blocks.append(Block(BlockKind.OMEGA_UP))
        elif token == "w-":
            blocks.append(Block(BlockKind.OMEGA_DOWN))
        elif token == "z":
            blocks.append(Block(BlockKind.OMEGA_BI))
        elif m := _F_RE.match(token):
            size = int(m.group(1))
            if size < 1:
                raise DomainSyntaxError(f"block {idx + 1}: finite block needs size >= 1")
            blocks.append(finite(size))
        elif m := _DENSE_RE.match(token):
            blocks.append(
                Block(
                    BlockKind.DENSE,
                    closed_min=m.group(1) == "c",
                    closed_max=m.group(2) == "c",
                )
            )
        else:
            raise DomainSyntaxError(f"block {idx + 1}: cannot parse {token!r}")
    return tuple(blocks)


def parse_domain(text: str) -> Domain:
    """Parse and normalize."""
    return normalize_domain(parse_domain_raw(text))


def render_domain(domain: Domain) -> str:
    return domain.render()


def parse_offset(text: Union[str, int]) -> Union[int, Fraction]:
    if isinstance(text, int):
        return text
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return int(text)


def render_offset(offset: Union[int, Fraction]) -> Union[int, str]:
    if isinstance(offset, Fraction):
        return f"{offset.numerator}/{offset.denominator}"
    return offset


def parse_occupied(domain: Domain, text: str) -> frozenset[Address]:
    """Comma-separated occupied points.

    ``BLOCK:OFFSET`` with a 0-based block index and a kind-appropriate offset
    (rationals as ``p/q``); as a convenience, a bare integer on a single
    finite block means the 1-based domain position, matching prose like
    "occupied {3} on finite:6".
    """
    text = text.strip()
    if not text:
        return frozenset()
    single_finite = len(domain.blocks) == 1 and domain.blocks[0].kind is BlockKind.FINITE
    out = set()
    for item in text.split(","):
        item = item.strip()
        if ":" in item:
            block_s, off_s = item.split(":", 1)
            out.add(Address(int(block_s), parse_offset(off_s)))
        elif single_finite:
            out.add(Address(0, int(item) - 1))
        else:
            raise ValueError(
                f"{item!r}: bare positions are only meaningful on a single finite block;"
                " use BLOCK:OFFSET"
            )
    return frozenset(out)


def position_to_doc(pos: Position) -> dict:
    occupied = [
        {"block": a.block, "offset": render_offset(a.offset)} for a in pos.sorted_occupied()
    ]
    return {
        "domain": pos.domain.render(),
        "occupied": occupied,
        "parity": pos.parity.value,
        "remaining": pos.remaining,
    }


def position_from_doc(doc: dict) -> Position:
    domain = parse_domain(doc["domain"])
    occupied = frozenset(
        Address(int(item["block"]), parse_offset(item["offset"]))
        for item in doc.get("occupied", ())
    )
    return Position(domain, occupied, Parity(doc.get("parity", "even")), int(doc["remaining"]))


def position_to_json(pos: Position) -> str:
    return json.dumps(position_to_doc(pos), sort_keys=True)


def position_from_json(text: str) -> Position:
    return position_from_doc(json.loads(text))


def parse_sequence(text: str) -> GapSequence:
    try:
        terms = tuple(int(t.strip()) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse sequence {text!r}: {exc}") from exc
    return GapSequence(terms)


def parse_pennies(text: str) -> PenniesState:
    try:
        clumps = tuple(int(t.strip()) for t in text.split("|"))
    except ValueError as exc:
        raise ValueError(f"cannot parse clumps {text!r}: {exc}") from exc
    return PenniesState(clumps)


def parse_pieces(text: str) -> PiecesState:
    return PiecesState(tuple(text.strip().lower()))
