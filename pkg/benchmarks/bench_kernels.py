"""Compare the compiled kernels against the pure-Python fallback.

Run as a script:

    python3 benchmarks/bench_kernels.py

Times the three hot entry points on representative workloads and reports
per-call medians plus the speedup. The two backends are imported directly,
bypassing the import-time selection, so this also doubles as a smoke test
that both produce identical results on the benchmark inputs.
"""

import statistics
import time

import numpy as np

from shellopt._kernels import pure

try:
    from shellopt._kernels import _core
except ImportError:
    _core = None

# the compiled kernels take contiguous double buffers
BOUNDS = np.array([0.0, 0.15, 0.3, 0.45, 0.6, 0.75, 1.0])
VALUES = np.array([-1.0, 2.0, -1.0, 2.0, -1.0, 2.0])
R_BOUNDS = np.array([1.0, 1.3, 1.6, 2.0])
R_VALUES = np.array([-1.0, 2.0, -1.0])


def _time(fn, repeat=7, number=200):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(number):
            fn()
        runs.append((time.perf_counter() - t0) / number)
    return statistics.median(runs)


def bench_shoot(mod):
    def body():
        # a small lambda scan, the shape of the hot loop in root finding
        for k in range(40):
            mod.shoot_piecewise(1.0, 1.0, BOUNDS, VALUES, 0.5 + 3.7 * k)

    return _time(body)


def bench_integrate(mod):
    def body():
        mod.integrate_shoot(
            0, 3, 1.0, 1.0, R_BOUNDS, R_VALUES, 1.0,
            25.0, 1e-10, 1e-14, float("inf"), False,
        )

    return _time(body, number=50)


def bench_pencil(mod):
    rng = np.random.default_rng(3)
    n = 2000
    d = 2.0 + rng.random(n)
    e = -np.ones(n - 1)
    b = rng.standard_normal(n)

    def body():
        for lam in (0.5, 5.0, 50.0):
            mod.pencil_neg_count(d, e, b, lam)

    return _time(body, number=20)


def check_agreement():
    r_pure = pure.shoot_piecewise(1.0, 1.0, BOUNDS, VALUES, 37.5)
    r_core = _core.shoot_piecewise(1.0, 1.0, BOUNDS, VALUES, 37.5)
    assert r_pure == r_core, (r_pure, r_core)


def main():
    if _core is None:
        print("compiled backend not built; nothing to compare")
        return
    check_agreement()
    rows = [
        ("shoot_piecewise (40-pt scan)", bench_shoot),
        ("integrate_shoot (one shot)", bench_integrate),
        ("pencil_neg_count (n=2000, 3 shifts)", bench_pencil),
    ]
    print(f"{'kernel':<38} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for label, bench in rows:
        tp = bench(pure)
        tc = bench(_core)
        print(f"{label:<38} {tp * 1e6:>10.1f}us {tc * 1e6:>10.1f}us {tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
