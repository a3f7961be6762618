"""The compiled and pure kernels must be interchangeable."""

import random

import pytest

from paritygame import _kernel, _kernel_py

try:
    from paritygame import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(_speedups is None, reason="compiled kernel not built")


def test_a_kernel_is_selected():
    assert _kernel.IMPLEMENTATION in ("pure", "compiled")


@needs_compiled
def test_forcible_mask_agrees():
    rng = random.Random(2)
    for _ in range(200):
        d = rng.randint(1, 10)
        occ = rng.getrandbits(d)
        m = bin(occ).count("1")
        r = rng.randint(0, d - m)
        pb = rng.getrandbits(1)
        assert _speedups.forcible_mask(d, occ, pb, r) == _kernel_py.forcible_mask(
            d, occ, pb, r
        )


@needs_compiled
def test_sweep_table_agrees():
    for d in (1, 4, 8, 11):
        for total in (0, d // 2, d):
            assert _speedups.sweep_table(d, total) == _kernel_py.sweep_table(d, total)


def test_argument_validation():
    for impl in filter(None, (_kernel_py, _speedups)):
        with pytest.raises(ValueError):
            impl.forcible_mask(0, 0, 0, 0)
        with pytest.raises(ValueError):
            impl.forcible_mask(4, 1 << 5, 0, 0)
        with pytest.raises(ValueError):
            impl.forcible_mask(4, 0, 0, 5)
        with pytest.raises(ValueError):
            impl.sweep_table(4, 6)
