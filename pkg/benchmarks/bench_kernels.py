"""Compare the compiled and pure-Python kernels on representative workloads.

Usage: python benchmarks/bench_kernels.py [--repeat R]
"""
import argparse
import random
import timeit

from posetramsey import kernels
from posetramsey.core import N_POSET, V, GroundSet, Subposet
from posetramsey.ramsey import _perm_maps


def workloads():
    rng = random.Random(0)
    g = GroundSet.of_size(4)
    fams = [Subposet.from_bits(g, rng.getrandbits(16)) for _ in range(200)]
    fams = [f for f in fams if f.vertices]
    y = g.last(2)

    def avoiding_hom(mod):
        for f in fams:
            mod.avoiding_hom(list(f.vertices), y, list(f.down))

    up, down = kernels._pykernels.lattice_relations(4)

    def induced_copy(mod):
        for f in fams:
            allowed = sum(1 << v for v in f.vertices)
            mod.induced_copy(list(N_POSET.up), list(N_POSET.down), up, down, allowed)

    maps = _perm_maps(3)

    def ramsey_scan(mod):
        mod.ramsey_scan(3, list(V.up), list(V.down), 1, 0, 256, maps)

    return {"avoiding_hom": avoiding_hom, "induced_copy": induced_copy, "ramsey_scan": ramsey_scan}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backs = kernels.backends()
    if "cython" not in backs:
        print("compiled backend not built; only the pure-Python timings are shown")
    print(f"{'kernel':<14}" + "".join(f"{name:>12}" for name in backs) + f"{'speedup':>10}")
    for name, fn in workloads().items():
        times = {b: min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for b, mod in backs.items()}
        row = f"{name:<14}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
