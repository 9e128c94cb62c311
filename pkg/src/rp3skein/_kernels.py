"""Pick the compiled inner loops when available, else the Python ones.

Set ``RP3SKEIN_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("RP3SKEIN_PURE_PYTHON") != "1":
    try:
        from ._speedups import (  # noqa: F401
            divide_by_s2_minus_1,
            poly_add,
            poly_mul,
            poly_shift,
        )
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import (  # noqa: F401
        divide_by_s2_minus_1,
        poly_add,
        poly_mul,
        poly_shift,
    )
