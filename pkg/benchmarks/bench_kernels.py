"""Compare the compiled and pure-Python distance kernels.

    python benchmarks/bench_kernels.py [--order 13] [--big 1500] [--repeat 3]

Two workloads: the distance profile of every free tree of one order (many
small calls, the shape of exhaustive verification) and a few large random
trees (few big calls).
"""

import argparse
import random
import time

from eds_lab import _pykernels
from eds_lab.enumeration import free_trees
from eds_lab.tree import tree_from_parents

try:
    from eds_lab import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=13)
    ap.add_argument("--big", type=int, default=1500)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    small = [t.adjacency for t in free_trees(args.order)]
    rng = random.Random(args.seed)
    big = [tree_from_parents([0] + [rng.randrange(i) for i in range(1, args.big)]).adjacency for _ in range(3)]

    workloads = {
        f"all trees n={args.order} ({len(small)})": small,
        f"3 random trees n={args.big}": big,
    }
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["compiled"] = _ckernels
    else:
        print("compiled extension not available; timing the Python kernels only")

    for label, adjs in workloads.items():
        ref = [_pykernels.distance_profile(a) for a in adjs]
        times = {}
        for name, mod in backends.items():
            assert [mod.distance_profile(a) for a in adjs] == ref, name
            times[name] = best_of(lambda: [mod.distance_profile(a) for a in adjs], args.repeat)
        line = "  ".join(f"{k} {v * 1000:9.1f} ms" for k, v in times.items())
        if "compiled" in times:
            line += f"  speedup {times['python'] / times['compiled']:.1f}x"
        print(f"{label:32s} {line}")


if __name__ == "__main__":
    main()
