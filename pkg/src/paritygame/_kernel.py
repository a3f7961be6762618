"""Kernel selection: compiled extension when built, pure Python otherwise.

Set PARITYGAME_PURE_KERNEL=1 to force the pure twin (used by tests and the
benchmark to compare implementations).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("PARITYGAME_PURE_KERNEL") == "1":
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION
forcible_mask = _impl.forcible_mask
sweep_table = _impl.sweep_table
