"""Inversion parity of finite sequences of distinct values.

The parity of a sequence is the parity of the number of transpositions needed
to sort it, which equals the number of inverted pairs mod 2. Parity is kept as
a two-valued type throughout the engine: every formula downstream is mod-2, so
raw counts are discarded at this boundary.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def bit(self) -> int:
        return 0 if self is Parity.EVEN else 1

    @classmethod
    def from_bit(cls, bit: int) -> "Parity":
        return Parity.EVEN if bit % 2 == 0 else Parity.ODD

    # alias that reads better when the argument is a count, not a bit
    from_count = from_bit

    def __add__(self, other: "Parity") -> "Parity":
        """Addition modulo 2."""
        if not isinstance(other, Parity):
            return NotImplemented
        return Parity.from_bit(self.bit ^ other.bit)

    def flip(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN

    def __str__(self) -> str:
        return self.value


def inversion_parity(values: Sequence) -> Parity:
    """Parity of the number of inverted pairs (j < i with values[j] > values[i]).

    ``values`` lists elements in placement order, not sorted order. Elements
    must be pairwise distinct and mutually comparable. Quadratic counting is
    deliberate: samples stay at desk scale.
    """
    if len(set(values)) != len(values):
        raise ValueError("sequence elements must be pairwise distinct")
    inversions = 0
    for i in range(1, len(values)):
        for j in range(i):
            if values[j] > values[i]:
                inversions += 1
    return Parity.from_count(inversions)


def append_parity_delta(count_greater: int) -> Parity:
    """Parity change caused by appending one element to a sequence.

    ``count_greater`` is the number of already-placed elements strictly greater
    than the new element; the sequence parity flips exactly when it is odd.
    """
    if count_greater < 0:
        raise ValueError("count_greater must be nonnegative")
    return Parity.from_count(count_greater)
