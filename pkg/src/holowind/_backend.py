"""Select the kernel backend at import time.

The compiled Cython extension is preferred; the numpy module is a drop-in
fallback.  Set HOLOWIND_BACKEND=numpy (or =cython) to force one explicitly,
e.g. for the benchmark in benchmarks/bench_kernels.py.
"""

import os

_forced = os.environ.get("HOLOWIND_BACKEND")

if _forced == "numpy":
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
elif _forced == "cython":
    from . import _kernels as kernels  # noqa: F401

    BACKEND = "cython"
elif _forced:
    raise ImportError(f"unknown HOLOWIND_BACKEND={_forced!r}")
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_numpy as kernels  # type: ignore[no-redef]

        BACKEND = "numpy"

curve_steps = kernels.curve_steps
aberth = kernels.aberth
