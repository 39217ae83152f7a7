"""Benchmark the compiled Faddeeva kernel against the pure-Python fallback.

Run as: python3 benchmarks/bench_kernel.py
"""

from __future__ import annotations

import cmath
import math
import time

import numpy as np


def batch() -> list[complex]:
    rng = np.random.default_rng(2024)
    pts = [
        r * cmath.exp(1j * t)
        for r in np.geomspace(1e-2, 60.0, 60)
        for t in np.linspace(-0.4 * math.pi, math.pi, 40)
    ]
    pts += [complex(x, y) for x, y in rng.uniform(-8.0, 8.0, size=(2000, 2))]
    return [z for z in pts if z.imag >= 0.0 or z.imag**2 - z.real**2 <= 600.0]


def time_backend(fn, pts: list[complex], repeats: int = 5) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for z in pts:
            fn(z)
        best = min(best, time.perf_counter() - t0)
    return best / len(pts)


def main() -> None:
    from shadowhp import _kernel_py
    from shadowhp.kernel import BACKEND

    pts = batch()
    print(f"{len(pts)} evaluation points, active backend: {BACKEND}")

    t_py = time_backend(_kernel_py.faddeeva_w, pts)
    print(f"pure python : {t_py * 1e6:8.3f} us/call")

    try:
        from shadowhp import _kernel_cy
    except ImportError:
        print("compiled kernel not built; nothing to compare")
        return

    t_cy = time_backend(_kernel_cy.faddeeva_w, pts)
    print(f"cython      : {t_cy * 1e6:8.3f} us/call")
    print(f"speedup     : {t_py / t_cy:8.2f}x")

    worst = max(
        abs(_kernel_cy.faddeeva_w(z) - _kernel_py.faddeeva_w(z))
        / max(abs(_kernel_py.faddeeva_w(z)), 1e-300)
        for z in pts
    )
    print(f"max rel diff: {worst:.3e}")


if __name__ == "__main__":
    main()
