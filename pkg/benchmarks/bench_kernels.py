"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from youngbraid import _pykernel
from youngbraid.braid import BKLFactor, bkl_expand

try:
    from youngbraid import _ckernel
except ImportError:
    _ckernel = None


def _workload(seed=1):
    rng = random.Random(seed)
    n = 6
    pairs = [(1, 3), (3, 5), (2, 4), (4, 6), (1, 5)]
    letters = []
    for _ in range(18):
        f = BKLFactor(*rng.choice(pairs), rng.choice((1, -1)))
        letters.extend(bkl_expand(f, n).letters)
    trivial = [(k,) for k in range(1, n + 1)]
    return letters, trivial


def bench(kernel, repeat):
    braid, trivial = _workload()
    t = kernel.apply_braid(braid, trivial)
    images = kernel.apply_braid([-a for a in reversed(braid[:12])], trivial)
    size = kernel.total_length(t)
    cases = {
        f"apply_braid ({size} letters out)": lambda: kernel.apply_braid(braid, trivial),
        "substitute_all": lambda: kernel.substitute_all(t, images),
        "first_admissible (full scan)": lambda: kernel.first_admissible(t, [0, 1, 2, 3, 4, 5]),
        "reduce_word": lambda: kernel.reduce_word(t[0] + kernel.inverse(t[0])),
    }
    return {name: min(timeit.repeat(fn, number=3, repeat=repeat)) / 3 for name, fn in cases.items()}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    py = bench(_pykernel, args.repeat)
    c = bench(_ckernel, args.repeat) if _ckernel else {}
    print(f"{'operation':40s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, tp in py.items():
        tc = c.get(name)
        if tc is None:
            print(f"{name:40s} {tp * 1e3:10.2f}ms {'n/a':>12s}")
        else:
            print(f"{name:40s} {tp * 1e3:10.2f}ms {tc * 1e3:10.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
