"""Time the compiled kernels against the pure-Python backend.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each case is run on every available backend; the table shows the best of
``--repeat`` runs and the speedup of the compiled backend.
"""
import argparse
import timeit

from posetcorr import kernels
from posetcorr.enumeration import count_linear_extensions, count_p_partitions, enumerate_p_partitions
from posetcorr.instances import random_posets
from posetcorr.lattice import ad_check, fishburn_indicators, ppartition_lattice, shepp_lattice, verify_lattice
from posetcorr.poly import MultiPoly
from posetcorr.poset import antichain


def cases(quick):
    scale = 1 if quick else 2
    big = random_posets(1, (14 + 2 * scale, 14 + 2 * scale), seed=1, bipartite=True)[0]
    mid = random_posets(1, (6, 6), seed=2)[0]
    f = MultiPoly.univariate(list(range(1, 150 * scale)))
    L = ppartition_lattice(antichain(4 + scale), 3)
    S = shepp_lattice(mid, 2, 0)
    A = ppartition_lattice(antichain(3 + scale), 3)
    w = fishburn_indicators(A, [0, 1], [1, 2], [], [])
    return [
        (f"linear extensions, n={big.n}", lambda: count_linear_extensions(big)),
        (f"P-partitions, n={mid.n}, t=6", lambda: count_p_partitions(mid, 6)),
        (f"P-partition listing, n={mid.n}, t=3", lambda: enumerate_p_partitions(mid, 3)),
        (f"poly product, degree {f.degree()}", lambda: f * f),
        (f"lattice build, |L|={len(L)}", lambda: ppartition_lattice(antichain(4 + scale), 3)),
        (f"lattice axioms, |L|={len(S)}", lambda: verify_lattice(S)),
        (f"AD check, |L|={len(A)}", lambda: ad_check(A, *w)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    backends = kernels.available()
    print(f"{'case':40s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for label, fn in cases(args.quick):
        times = {}
        for b in backends:
            with kernels.using(b):
                times[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        row = f"{label:40s}" + "".join(f"{times[b]:11.4f}s" for b in backends)
        if "compiled" in times:
            row += f"  {times['python'] / times['compiled']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
