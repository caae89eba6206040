"""Selects the prime-field linear algebra kernel at import time.

The compiled Cython kernel is preferred; the pure-Python fallback is used
when the extension is missing or when the environment variable GLSW_PURE is
set to a nonempty value.  Both expose ``rref`` and ``matmul`` with identical
semantics, so the choice never affects results, only speed.
"""

import os

if os.environ.get("GLSW_PURE"):
    from glsw import _fp_fallback as _impl

    COMPILED = False
else:
    try:
        from glsw import _fpcore as _impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from glsw import _fp_fallback as _impl

        COMPILED = False

rref = _impl.rref
matmul = _impl.matmul
