"""Time the numba and numpy kernel backends on random words.

    python3 benchmarks/bench_kernels.py --n 256 1024 --samples 10000

Both backends are called directly, so the environment flag is irrelevant
here. The first numba call (compilation or cache load) is excluded.
"""

import argparse
import timeit

import numpy as np

from burstball import kernels

KERNELS = {
    "run_counts": lambda impl, W, q, b: impl(W, b),
    "f_weighted": lambda impl, W, q, b: impl(W, b, q),
    "g_sums": lambda impl, W, q, b: impl(W, b),
    "max_periodic": lambda impl, W, q, b: impl(W, 2 * b),
}


def bench(n: int, q: int, b: int, samples: int, repeat: int) -> list:
    W = np.random.default_rng(0).integers(0, q, size=(samples, n), dtype=np.int64)
    rows = []
    for name, call in KERNELS.items():
        np_impl = getattr(kernels, "np_" + name)
        nb_impl = getattr(kernels, "nb_" + name, None)
        expected = call(np_impl, W, q, b)
        t_np = min(timeit.repeat(lambda: call(np_impl, W, q, b), number=1, repeat=repeat))
        t_nb = None
        if nb_impl is not None:
            assert np.array_equal(call(nb_impl, W, q, b), expected), name
            t_nb = min(timeit.repeat(lambda: call(nb_impl, W, q, b), number=1, repeat=repeat))
        rows.append((name, t_np, t_nb))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[64, 256, 1024])
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--b", type=int, default=2)
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        print("numba not importable; timing numpy only")
    print(f"{'n':>6} {'kernel':<14} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in args.n:
        for name, t_np, t_nb in bench(n, args.q, args.b, args.samples, args.repeat):
            nb = f"{t_nb * 1e3:10.2f}" if t_nb is not None else f"{'-':>10}"
            ratio = f"{t_np / t_nb:8.1f}" if t_nb else f"{'-':>8}"
            print(f"{n:>6} {name:<14} {t_np * 1e3:10.2f} {nb} {ratio}")


if __name__ == "__main__":
    main()
