"""Time each hot kernel under the numba and pure-numpy backends.

    python benchmarks/bench_kernels.py [--repeat N]

Numba compile time is excluded (one warm-up call per kernel). Results go to
stdout as CSV: kernel,backend,seconds_per_call,speedup_vs_numpy.
"""
import argparse
import sys
import timeit

import numpy as np

from c2gkd.kernels import numba_impl, numpy_impl


def cases(rng):
    sym = rng.normal(size=(128, 128))
    sym = sym + sym.T
    t = rng.uniform(0, 2 * np.pi, size=512)
    r = rng.uniform(0, 14, size=512)
    ys, xs = 13.5 + r * np.sin(t), 13.5 + r * np.cos(t)
    dcols = rng.normal(size=(64, 24, 24, 6, 5, 5))
    return [
        ("jacobi_eigh 128x128", "jacobi_eigh", (sym,)),
        ("bilinear_weights 512 pts", "bilinear_weights", (28, 28, ys, xs)),
        ("polar_inverse_weights 16x32", "polar_inverse_weights", (28, 28, 13.5, 13.5, 16, 32, 14.0)),
        ("col2im 64x6x28x28 k5", "col2im", (dcols, (64, 6, 28, 28), 5)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = [("numpy", numpy_impl)]
    if numba_impl is not None:
        backends.append(("numba", numba_impl))
    else:
        print("numba backend unavailable; timing numpy only", file=sys.stderr)
    print("kernel,backend,seconds_per_call,speedup_vs_numpy")
    for label, name, fargs in cases(np.random.default_rng(0)):
        base = None
        for backend, mod in backends:
            fn = getattr(mod, name)
            fn(*fargs)  # warm-up / JIT compile
            n = 1 if name == "jacobi_eigh" and backend == "numpy" else 3
            t = min(timeit.repeat(lambda: fn(*fargs), number=n, repeat=args.repeat)) / n
            base = t if base is None else base
            print(f"{label},{backend},{t:.3e},{base / t:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
