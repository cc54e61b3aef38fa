"""Compare the numba and numpy backends of the batch kernels.

    python benchmarks/bench_kernels.py [--depth 12] [--max-c 20000000] [--repeat 5]

Both backends are timed in one process; the numba timings exclude the first
(compiling) call.  A node-by-node Python walk is timed on a shallower level
for scale.
"""

import argparse
import time

import numpy as np

from pptree import _kernels, forest
from pptree.forest import TreeKind


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def level_with(expand, kind, depth):
    mats = np.array(forest.matrices(kind), dtype=np.int64)
    nodes = np.array([forest.ROOT_TRIPLE], dtype=np.int64)
    for _ in range(depth):
        nodes = expand(nodes, mats)
    return nodes


def python_level(kind, depth):
    level = [forest.ROOT_TRIPLE]
    for _ in range(depth):
        level = [kid for node in level for kid in forest.children(kind, node)]
    return level


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=12)
    ap.add_argument("--max-c", type=int, default=20_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"numba active: {_kernels.USING_NUMBA}")
    rows = []
    for kind in TreeKind:
        ref = level_with(_kernels.expand_level_numpy, kind, args.depth)
        t_np = best_of(lambda: level_with(_kernels.expand_level_numpy, kind, args.depth), args.repeat)
        rows.append((f"level {args.depth} ({kind.value})", "numpy", t_np))
        if _kernels.USING_NUMBA:
            assert (level_with(_kernels.expand_level, kind, args.depth) == ref).all()
            t_nb = best_of(lambda: level_with(_kernels.expand_level, kind, args.depth), args.repeat)
            rows.append((f"level {args.depth} ({kind.value})", "numba", t_nb))
        shallow = min(args.depth, 8)
        t_py = best_of(lambda: python_level(kind, shallow), 1)
        rows.append((f"level {shallow} ({kind.value})", "python", t_py))

    ref = _kernels.ppt_sieve_numpy(args.max_c)
    rows.append((f"sieve c <= {args.max_c}", "numpy",
                 best_of(lambda: _kernels.ppt_sieve_numpy(args.max_c), args.repeat)))
    if _kernels.USING_NUMBA:
        assert (_kernels.ppt_sieve(args.max_c) == ref).all()
        rows.append((f"sieve c <= {args.max_c}", "numba",
                     best_of(lambda: _kernels.ppt_sieve(args.max_c), args.repeat)))

    width = max(len(r[0]) for r in rows)
    for task, backend, secs in rows:
        print(f"{task:<{width}}  {backend:<6}  {secs * 1e3:10.2f} ms")


if __name__ == "__main__":
    main()
