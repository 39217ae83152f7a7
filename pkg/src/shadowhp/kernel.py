"""Kernel backend selection.

Imports the compiled Faddeeva kernel when the extension was built,
otherwise the pure-Python twin. BACKEND names the choice so callers
(and the benchmark) can report which one is live.
"""

from __future__ import annotations

try:
    from shadowhp._kernel_cy import faddeeva_w

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build environment
    from shadowhp._kernel_py import faddeeva_w

    BACKEND = "python"

__all__ = ["BACKEND", "faddeeva_w"]
