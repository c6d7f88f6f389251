"""Selects the canonical-code kernel.

Prefers the compiled extension when importable; otherwise falls back to the
pure-Python reference.  ``TRIGDESSINS_PURE=1`` forces the fallback (useful
for benchmarks and for checking that both kernels agree).
"""

import os

if os.environ.get("TRIGDESSINS_PURE") == "1":
    from ._canon_py import IMPLEMENTATION, best_boundary_code
else:
    try:
        from ._canon import IMPLEMENTATION, best_boundary_code
    except ImportError:
        from ._canon_py import IMPLEMENTATION, best_boundary_code

__all__ = ["best_boundary_code", "IMPLEMENTATION"]
