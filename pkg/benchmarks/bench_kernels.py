"""Compare the compiled tree kernels against their pure Python twins.

Runs the same workloads through both backends in one process and prints a
small table. Usage:

    python3 benchmarks/bench_kernels.py [--n 8] [--instances 20] [--seed 7]

The workloads are the two brute-force hot paths: counting the hosting trees
of an instance by walking all n^(n-2) labeled trees, and the early-exit
search for the first hosting tree. Both are dominated by the per-tree
subtree checks the kernels implement.
"""

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hypertree_lab.generate import random_hypergraph, random_hypertree
from hypertree_lab.kernels import _pykernels

try:
    from hypertree_lab.kernels import _ckernels
except ImportError:
    _ckernels = None


def make_workload(n, instances, seed):
    rng = random.Random(seed)
    out = []
    for i in range(instances):
        maker = random_hypertree if i % 2 == 0 else random_hypergraph
        out.append(maker(n, rng.randint(2, n), rng).edges)
    return out


def run(module, workload, n, repeats):
    times = []
    checksum = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        for masks in workload:
            checksum += module.count_hosting_trees(n, masks)
            found = module.find_first_hosting_tree(n, masks)
            checksum += 0 if found is None else len(found)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), checksum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8, help="vertices per instance")
    ap.add_argument("--instances", type=int, default=20)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    if args.n > 9:
        ap.error("the full tree walk gets unreasonable past n = 9")
    workload = make_workload(args.n, args.instances, args.seed)
    print(
        f"workload: {args.instances} instances, n = {args.n}, "
        f"{args.n ** (args.n - 2)} trees each, best of {args.repeats}"
    )

    backends = [("pure-python", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("compiled extension not importable; timing the pure twin only")

    rows = []
    sums = set()
    for name, module in backends:
        best, median, checksum = run(module, workload, args.n, args.repeats)
        rows.append((name, best, median))
        sums.add(checksum)
    if len(sums) != 1:
        raise SystemExit("backends disagree on the workload results")

    width = max(len(name) for name, _, _ in rows)
    print(f"{'backend'.ljust(width)}  {'best':>10}  {'median':>10}")
    for name, best, median in rows:
        print(f"{name.ljust(width)}  {best:>9.3f}s  {median:>9.3f}s")
    if len(rows) == 2:
        print(f"speedup: {rows[0][1] / rows[1][1]:.1f}x")


if __name__ == "__main__":
    main()
