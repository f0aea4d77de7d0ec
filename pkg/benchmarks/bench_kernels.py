"""Compare the compiled kernels against the pure-numpy fallback.

Run with:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from holowind import _kernels_numpy


def _load_compiled():
    try:
        from holowind import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernels


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_curve_steps(backends):
    n = 1 << 20
    theta = 2 * np.pi * np.arange(n) / n
    values = np.exp(3j * theta) + 0.5 * np.exp(-1j * theta)
    values.setflags(write=False)
    print(f"curve_steps, N = {n}")
    for name, mod in backends:
        dt = timeit(mod.curve_steps, values)
        print(f"  {name:8s} {dt * 1e3:8.2f} ms")


def bench_aberth(backends):
    rng = np.random.default_rng(11)
    for degree in (16, 64, 256):
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        coeffs[-1] += 2.0
        coeffs.setflags(write=False)
        d = degree
        z0 = 0.5 * (1.0 + np.max(np.abs(coeffs[:-1] / coeffs[-1]))) * np.exp(
            1j * (2 * np.pi * np.arange(d) / d + 0.4)
        )
        z0.setflags(write=False)
        print(f"aberth, degree = {degree}")
        for name, mod in backends:
            dt = timeit(mod.aberth, coeffs, z0, 500, 1e-13, 1e-14)
            print(f"  {name:8s} {dt * 1e3:8.2f} ms")


def main():
    backends = [("numpy", _kernels_numpy)]
    compiled = _load_compiled()
    if compiled is not None:
        backends.insert(0, ("cython", compiled))
    else:
        print("compiled kernels unavailable; benchmarking numpy fallback only")
    bench_curve_steps(backends)
    bench_aberth(backends)


if __name__ == "__main__":
    main()
