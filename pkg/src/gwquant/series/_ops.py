"""Kernel selector: compiled Cython kernels when built, else pure Python.

Set GWQUANT_PURE_PY=1 to force the pure-Python kernels (used by the
benchmark and the kernel-parity tests).
"""

import os

if os.environ.get("GWQUANT_PURE_PY"):
    from gwquant.series._ops_py import (  # noqa: F401
        IMPL, cnum_add, cnum_is_zero, cnum_mul, cnum_neg, cnum_norm,
        series_add, series_mul, series_scale,
    )
else:
    try:
        from gwquant.series._ops_cy import (  # noqa: F401
            IMPL, cnum_add, cnum_is_zero, cnum_mul, cnum_neg, cnum_norm,
            series_add, series_mul, series_scale,
        )
    except ImportError:
        from gwquant.series._ops_py import (  # noqa: F401
            IMPL, cnum_add, cnum_is_zero, cnum_mul, cnum_neg, cnum_norm,
            series_add, series_mul, series_scale,
        )
