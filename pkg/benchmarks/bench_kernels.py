"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--n 9] [--repeat 3]

Each workload is timed on both backends with ``timeit``; results are
checked equal before timing so the comparison is apples to apples.
"""

import argparse
import importlib
import timeit

from supercatalan import _kernels_py
from supercatalan.codec import enumerate_planted
from supercatalan.paths import enumerate_paths


def workloads(k, n):
    planted = enumerate_planted(n)
    paths = enumerate_paths(n, n, "dyck")

    def validate_all():
        return sum(k.is_coding_sequence(u) for u in planted)

    def canonical_all():
        return len({k.canonical_rooted(r, u) for u in planted for r in range(6)})

    def grow_all():
        return sum(len(k.grow_children(u)) for u in planted)

    def path_stats():
        return sum(k.duu_count(p) + sum(k.incline_parity_counts(p)) for p in paths)

    return {
        f"validate {len(planted)} codes": validate_all,
        "canonical forms x6 rotations": canonical_all,
        "grow children": grow_all,
        f"DUU/incline stats on {len(paths)} Dyck paths": path_stats,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    try:
        compiled = importlib.import_module("supercatalan._kernels")
    except ImportError:
        print("compiled extension not built; only the Python backend is available")
        compiled = None

    py = workloads(_kernels_py, args.n)
    cy = workloads(compiled, args.n) if compiled else {}
    print(f"{'workload':45s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in py.items():
        t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if compiled:
            assert cy[name]() == fn(), name
            t_cy = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
            print(f"{name:45s} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:7.1f}x")
        else:
            print(f"{name:45s} {t_py:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
