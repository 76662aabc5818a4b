"""Compare the compiled Z_p kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 50 100 200] [--prime 2147483647] [--repeat 3]

Also times a full decomposition of a random module with each backend.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from intervalbasis import PersistenceModule, PrimeField, pmd
from intervalbasis import _kernels_py
from intervalbasis import linalg

try:
    from intervalbasis import _kernels
except ImportError:  # extension not built
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def low_rank(rng, n, p):
    r = n // 2
    return np.mod(rng.integers(0, p, (n, r)) @ rng.integers(0, 3, (r, n)), p).astype(np.int64)


def bench_kernels(sizes, p, repeat, rng):
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'kernel':<22}{'n':>6}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for n in sizes:
        a = low_rank(rng, n, p)
        u, w = a[:, : n // 4], a[:, n // 4 :]
        cases = {
            "rref_mod_p": lambda mod: mod.rref_mod_p(a.copy(), p),
            "reduce_columns_mod_p": lambda mod: mod.reduce_columns_mod_p(a.copy(), p),
            "extend_basis_mod_p": lambda mod: mod.extend_basis_mod_p(u, w, p),
        }
        for name, fn in cases.items():
            times = [best_of(lambda: fn(mod), repeat) for _, mod in backends]
            speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
            print(f"{name:<22}{n:>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)


def bench_pmd(p, repeat, rng):
    field = PrimeField(p)
    dims = [40, 60, 60, 50, 40, 30]
    maps = [low_rank(rng, max(dims[i], dims[i + 1]), p)[: dims[i + 1], : dims[i]] for i in range(len(dims) - 1)]
    module = PersistenceModule(field, dims, maps)
    saved = (linalg.kernels.rref_mod_p, linalg.kernels.reduce_columns_mod_p, linalg.kernels.extend_basis_mod_p)
    results = {}
    for name, mod in [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else []):
        linalg.kernels.rref_mod_p = mod.rref_mod_p
        linalg.kernels.reduce_columns_mod_p = mod.reduce_columns_mod_p
        linalg.kernels.extend_basis_mod_p = mod.extend_basis_mod_p
        results[name] = best_of(lambda: pmd(module), repeat)
    linalg.kernels.rref_mod_p, linalg.kernels.reduce_columns_mod_p, linalg.kernels.extend_basis_mod_p = saved
    line = ", ".join(f"{k} {v * 1e3:.1f}ms" for k, v in results.items())
    print(f"\npmd on dims {dims} over Z_{p}: {line}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    parser.add_argument("--prime", type=int, default=2147483647)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    bench_kernels(args.sizes, args.prime, args.repeat, rng)
    bench_pmd(args.prime, args.repeat, rng)


if __name__ == "__main__":
    main()
