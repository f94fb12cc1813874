"""Compiled vs pure-Python kernels over a prime field.

Times row reduction of random matrices and structure-constant products in
matrix algebras, checks that both backends agree on every input, and prints
one line per workload.  Usage::

    python3 benchmarks/bench_kernels.py [--p 101] [--repeat 3]
"""

import argparse
import random
import sys
import timeit

from peirce_lie import _pykernels
from peirce_lie.catalog import full_matrix_algebra
from peirce_lie.field import GF

try:
    from peirce_lie import _ckernels
except ImportError:
    _ckernels = None


def csr(A):
    n = A.dim
    ptr = [0] * (n * n + 1)
    for i, j, _, _ in A.entries:
        ptr[i * n + j + 1] += 1
    for t in range(n * n):
        ptr[t + 1] += ptr[t]
    return n, ptr, [e[2] for e in A.entries], [int(e[3]) for e in A.entries]


def plain(obj):
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    return int(obj)


def rref_workload(rng, p, rows, cols):
    mats = [[[rng.randrange(p) for _ in range(cols)] for _ in range(rows)] for _ in range(5)]

    def run(mod):
        return [mod.rref(m, cols, p) for m in mats]

    return run


def product_workload(rng, p, n):
    A = full_matrix_algebra(GF(p), n)
    args = csr(A)
    pairs = [([rng.randrange(p) for _ in range(A.dim)], [rng.randrange(p) for _ in range(A.dim)])
             for _ in range(200)]

    def run(mod):
        t = mod.Table(*args, p)
        return [tuple(t.product(x, y)) for x, y in pairs]

    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1

    rng = random.Random(args.seed)
    workloads = [
        ("rref 40x60", rref_workload(rng, args.p, 40, 60)),
        ("rref 80x120", rref_workload(rng, args.p, 80, 120)),
        ("product M4 x200", product_workload(rng, args.p, 4)),
        ("product M6 x200", product_workload(rng, args.p, 6)),
    ]
    print(f"p = {args.p}, best of {args.repeat}")
    print(f"{'workload':<18}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for name, run in workloads:
        if plain(run(_pykernels)) != plain(run(_ckernels)):
            print(f"{name}: backends disagree")
            return 1
        py = min(timeit.repeat(lambda: run(_pykernels), number=1, repeat=args.repeat))
        c = min(timeit.repeat(lambda: run(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<18}{py:>12.4f}{c:>14.4f}{py / c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
