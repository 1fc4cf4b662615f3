"""Time the pure-Python and compiled kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one row per workload with the best time of each kernel and the ratio.
"""

import argparse
import time

from minseps._backend import compiled_available, make_kernel
from minseps.generators import gen_cycle, gen_Gk, gen_k_prism, gen_random_chordal


def _adj(g):
    return list(g.adj)


def _all_components(k, n):
    for s in range(1 << min(n, 12)):
        k.full_components(s)


WORKLOADS = [
    ("separators, subset scan, C16", lambda: gen_cycle(16)[0],
     lambda k, g: k.minimal_separators_bruteforce()),
    ("separators, subset scan, G4", lambda: gen_Gk(4)[0],
     lambda k, g: k.minimal_separators_bruteforce()),
    ("holes, G5", lambda: gen_Gk(5)[0], lambda k, g: k.holes(g.n, 10 ** 8)),
    ("holes, 9-prism", lambda: gen_k_prism(9)[0], lambda k, g: k.holes(g.n, 10 ** 8)),
    ("pmc scan, chordal n=15", lambda: gen_random_chordal(15, 0.3, 1)[0],
     lambda k, g: k.pmc_scan()),
    ("full components, 4096 sets, G3", lambda: gen_Gk(3)[0],
     lambda k, g: _all_components(k, g.n)),
    ("mwis, chordal n=60", lambda: gen_random_chordal(60, 0.15, 2)[0],
     lambda k, g: k.mwis([v % 7 + 1 for v in range(g.n)])),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not compiled_available():
        print("compiled kernel not built; timing the pure kernel only")
    print(f"{'workload':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, build, job in WORKLOADS:
        g = build()
        py = make_kernel(_adj(g), "python")
        tp = best_of(lambda: job(py, g), args.repeat)
        if compiled_available():
            ck = make_kernel(_adj(g), "cython")
            assert job(py, g) == job(ck, g), name
            tc = best_of(lambda: job(ck, g), args.repeat)
            print(f"{name:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:34} {tp:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
