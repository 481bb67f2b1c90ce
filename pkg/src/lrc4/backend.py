"""Kernel backend selection.

The compiled Cython kernels are preferred when importable; otherwise the
numpy fallback is used.  Both expose the same three functions with
bit-identical results (see ``benchmarks/bench_backends.py`` for the speed
comparison).  Set ``LRC4_BACKEND=py`` or ``LRC4_BACKEND=c`` to force a
choice; forcing ``c`` fails loudly if the extension is missing.
"""

import os

from . import _kernels_py

_forced = os.environ.get("LRC4_BACKEND", "").lower()

if _forced == "py":
    kernels = _kernels_py
    BACKEND_NAME = "py"
elif _forced == "c":
    from . import _kernels_c as kernels  # noqa: F401

    BACKEND_NAME = "c"
elif _forced:
    raise RuntimeError(f"unknown LRC4_BACKEND value: {_forced!r}")
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]

        BACKEND_NAME = "c"
    except ImportError:
        kernels = _kernels_py
        BACKEND_NAME = "py"

min_weight = kernels.min_weight
weight_counts = kernels.weight_counts
covering_min_weights = kernels.covering_min_weights
