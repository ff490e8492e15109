"""Compare the compiled kernels with the pure-Python fallback.

    python bench/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import time

from otarrange import _fallback
from otarrange.arrmat import FIGURE2_STEPS, build_3tree
from otarrange.cli import catalog
from otarrange.otideal.graded import GradedIdealView
from otarrange.otideal.relations import ot_generators

try:
    from otarrange import _speedups
except ImportError:
    _speedups = None


def workloads():
    rng = random.Random(0)
    mats = [[[rng.randint(-9, 9) for _ in range(24)] for _ in range(24)] for _ in range(20)]
    fig2 = build_3tree(FIGURE2_STEPS)
    nonfano = catalog("nonFano")
    gens = ot_generators(nonfano.matroid)

    def bareiss(mod):
        for m in mats:
            mod.bareiss_rank(m, 24)

    def echelon(mod):
        import otarrange.otideal.graded as g

        saved = g.echelon_insert
        g.echelon_insert = mod.echelon_insert
        try:
            GradedIdealView(gens, 7, nonfano.n)
        finally:
            g.echelon_insert = saved

    n = fig2.n
    by_max = [[] for _ in range(n)]
    for c in fig2.matroid.circuits():
        s = sorted(c.support)
        m = sum(1 << i for i in s[1:])
        by_max[s[-1]].append(m)

    def nbc(mod):
        mod.nbc_faces(n, by_max, fig2.rank)

    from otarrange.arrmat.hypergraph import _line_closed_tables

    pc, flat = _line_closed_tables(fig2)

    def line_closed(mod):
        mod.first_line_closed_nonflat(n, pc, flat)

    return {
        "bareiss_rank (20 x 24x24)": bareiss,
        "echelon_insert (nonFano, D=7)": echelon,
        "nbc_faces (15-element 3-tree)": nbc,
        "line_closed scan (2^15 subsets)": line_closed,
    }


def best(fn, mod, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mod)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _speedups is None:
        print("compiled kernels not available; build with `pip install -e . --no-build-isolation`")
    print(f"{'kernel':<34} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for name, fn in workloads().items():
        tp = best(fn, _fallback, args.repeat)
        if _speedups is None:
            print(f"{name:<34} {tp:9.4f} {'-':>9} {'-':>8}")
            continue
        tc = best(fn, _speedups, args.repeat)
        print(f"{name:<34} {tp:9.4f} {tc:9.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
