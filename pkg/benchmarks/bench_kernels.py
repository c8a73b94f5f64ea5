"""Time the numba kernels against their numpy references.

Run with ``python benchmarks/bench_kernels.py``. Sizes mirror a Wine
evaluation: 11 features, 25 Shapley permutations per member, a training
pool of about 3900 rows. Setting UAEVAL_DISABLE_NUMBA=1 makes the public
dispatchers use numpy; this script calls both paths directly instead.
"""

import argparse
import timeit

import numpy as np

from uaeval import _kernels as kn


def cases(gen):
    n, P, rows = 11, 25, 3918
    x, b = gen.normal(size=n), np.zeros(n)
    perms = np.stack([gen.permutation(n) for _ in range(P)]).astype(np.int64)
    values = gen.normal(size=(P, n + 1))
    pool, query = gen.normal(size=(rows, n)), gen.normal(size=n)
    feats = np.arange(3, n, dtype=np.int64)
    ties = gen.integers(0, 4, size=n).astype(np.float64)
    return {
        "average_ranks": (kn.average_ranks_np, "_average_ranks_nb", (ties,)),
        "descending_ranks": (kn.descending_ordinal_ranks_np, "_descending_ordinal_ranks_nb", (ties,)),
        "shapley_chain_inputs": (kn.shapley_chain_inputs_np, "_shapley_chain_inputs_nb", (x, b, perms)),
        "shapley_accumulate": (kn.shapley_accumulate_np, "_shapley_accumulate_nb", (values, perms)),
        "knn_subset": (kn.knn_subset_np, "_knn_subset_nb", (pool, query, feats, 10)),
    }


def best_of(fn, args, number, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args(argv)
    gen = np.random.default_rng(0)
    print(f"numba active: {kn.HAVE_NUMBA}")
    print(f"{'kernel':<22}{'numpy us':>12}{'numba us':>12}{'speedup':>10}")
    for name, (np_fn, nb_name, fargs) in cases(gen).items():
        t_np = best_of(np_fn, fargs, args.number, args.repeat)
        nb_fn = getattr(kn, nb_name, None) if kn.HAVE_NUMBA else None
        if nb_fn is None:
            print(f"{name:<22}{t_np * 1e6:>12.2f}{'n/a':>12}{'':>10}")
            continue
        out_np, out_nb = np_fn(*fargs), nb_fn(*fargs)  # also compiles
        assert np.array_equal(out_np, out_nb), name
        t_nb = best_of(nb_fn, fargs, args.number, args.repeat)
        print(f"{name:<22}{t_np * 1e6:>12.2f}{t_nb * 1e6:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
