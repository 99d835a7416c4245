"""Benchmark the hot kernels: compiled extension vs pure-Python fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py

The three kernels dominate the verification suite's runtime: the full
map-space scans behind the correspondence oracle, the batch classification
behind the variance-law table, and the cubic associativity check behind
every table validation.
"""

from __future__ import annotations

import time

from antimorph import _pyops, kernels
from antimorph.corpus import group_corpus
from antimorph.maps import ANTI, STRAIGHT
from antimorph.morphisms import enumerate_morphisms

try:
    from antimorph import _fastops
except ImportError:
    _fastops = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(name, fn_name, *args, repeat=3):
    t_py, r_py = timed(getattr(_pyops, fn_name), *args, repeat=repeat)
    if _fastops is None:
        print(f"{name:<42} pure {t_py * 1e3:9.2f} ms   (no compiled backend)")
        return
    t_cy, r_cy = timed(getattr(_fastops, fn_name), *args, repeat=repeat)
    assert r_py == r_cy, f"backend mismatch in {fn_name}"
    print(f"{name:<42} pure {t_py * 1e3:9.2f} ms   "
          f"compiled {t_cy * 1e3:8.2f} ms   {t_py / t_cy:7.1f}x")


def main():
    groups = group_corpus()
    s3, z6, d4 = groups["s3"], groups["z6"], groups["d4"]
    print(f"active backend: {kernels.BACKEND}")
    for g in (s3, z6):
        ca = kernels.flatten(g.cayley)
        bench(f"map-space scan {g.name}->{g.name} ({g.order}^{g.order})",
              "scan_morphism_space", g.order, g.order, ca, ca)
    ca = kernels.flatten(d4.cayley)
    left = [m.images for m in enumerate_morphisms(d4, d4, STRAIGHT)]
    left += [m.images for m in enumerate_morphisms(d4, d4, ANTI)]
    bench(f"classify {len(left)}x{len(left)} composite pairs on {d4.name}",
          "compose_classify_pairs", d4.order, d4.order, ca, ca, left, left)
    from antimorph.corpus import ring_corpus

    m2 = ring_corpus()["m2f2"]
    mul = kernels.flatten(m2.mul)
    bench("associativity witness scan (16^3 triples)",
          "associativity_witness", m2.order, mul, repeat=20)


if __name__ == "__main__":
    main()
