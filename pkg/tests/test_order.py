import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritygame.order import Parity, append_parity_delta, inversion_parity


def brute_force_parity(values):
    """Independent oracle: transposition count of selection sort, mod 2."""
    values = list(values)
    swaps = 0
    for i in range(len(values)):
        j = values.index(min(values[i:]), i)
        if j != i:
            values[i], values[j] = values[j], values[i]
            swaps += 1
    return Parity.from_count(swaps)


def test_sorted_sequence_is_even():
    assert inversion_parity([1, 2, 3]) is Parity.EVEN


def test_single_swap_is_odd():
    assert inversion_parity([2, 1]) is Parity.ODD


def test_mixed_sequence_matches_brute_force():
    # five inversion pairs: (3,2) (3,1) (5,2) (5,1) (2,1)
    assert brute_force_parity([3, 5, 2, 1, 7]) is Parity.ODD
    assert inversion_parity([3, 5, 2, 1, 7]) is Parity.ODD


def test_duplicates_rejected():
    with pytest.raises(ValueError):
        inversion_parity([1, 2, 2])


def test_append_delta_values():
    assert append_parity_delta(0) is Parity.EVEN  # appending a new maximum
    assert append_parity_delta(1) is Parity.ODD
    assert append_parity_delta(4) is Parity.EVEN
    with pytest.raises(ValueError):
        append_parity_delta(-1)


def test_parity_addition_mod_2():
    assert Parity.EVEN + Parity.ODD is Parity.ODD
    assert Parity.ODD + Parity.ODD is Parity.EVEN
    assert Parity.EVEN.flip() is Parity.ODD


distinct_ints = st.lists(st.integers(-100, 100), unique=True, max_size=12)


@given(distinct_ints, st.integers(-200, 200))
@settings(max_examples=300)
def test_incremental_update_rule(sample, new):
    if new in sample:
        return
    greater = sum(1 for x in sample if x > new)
    assert inversion_parity(sample + [new]) is (
        inversion_parity(sample) + append_parity_delta(greater)
    )


@given(distinct_ints)
@settings(max_examples=200)
def test_order_preserving_relabel_invariance(sample):
    ranks = {v: i for i, v in enumerate(sorted(sample))}
    relabeled = [ranks[v] * 7 + 3 for v in sample]  # strictly increasing map
    assert inversion_parity(relabeled) is inversion_parity(sample)


@given(st.lists(st.integers(-100, 100), unique=True, min_size=2, max_size=12), st.data())
@settings(max_examples=200)
def test_adjacent_swap_flips_parity(sample, data):
    i = data.draw(st.integers(0, len(sample) - 2))
    swapped = sample[:i] + [sample[i + 1], sample[i]] + sample[i + 2 :]
    assert inversion_parity(swapped) is inversion_parity(sample).flip()


@given(distinct_ints)
@settings(max_examples=200)
def test_matches_brute_force_oracle(sample):
    assert inversion_parity(sample) is brute_force_parity(sample)
