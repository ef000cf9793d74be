"""Benchmark the compiled term-map kernels against the pure-Python ones.

Runs the same workloads under each available backend and prints a small
table with per-operation times and the compiled/pure speedup.

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import random
import time
from fractions import Fraction

from cremona3 import _backend, decompose, reconstruct, standard_objects, variables
from cremona3.verify import random_decomposition


def build_workloads():
    x, y, z = variables(3)
    dense_a = (x + 2 * y + 3 * z + 1) ** 8
    dense_b = (x - y + z - 1) ** 8
    objs = standard_objects()
    nagata_x = objs.h.components[0]
    shear = list(objs.h_prime.components)
    rng = random.Random(12345)
    triples = [random_decomposition(rng) for _ in range(30)]

    def bench_mul():
        dense_a * dense_b

    def bench_pow():
        (x * z - Fraction(1, 2) * y ** 2) ** 12

    def bench_substitute():
        nagata_x.substitute(shear)

    def bench_decompose_roundtrip():
        for d in triples:
            assert decompose(reconstruct(d)) == d

    return (
        ("mul deg-8 dense", bench_mul, 20),
        ("pow p^12", bench_pow, 20),
        ("substitute shear into nagata_x", bench_substitute, 50),
        ("decompose/reconstruct x30", bench_decompose_roundtrip, 3),
    )


def time_workload(fn, inner, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            fn()
        best = min(best, (time.perf_counter() - start) / inner)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = _backend.available_backends()
    workloads = build_workloads()
    results = {}
    for backend in backends:
        _backend.use_backend(backend)
        for name, fn, inner in workloads:
            fn()  # warm-up
            results[(backend, name)] = time_workload(fn, inner, args.repeats)

    both = "cython" in backends and "python" in backends
    width = max(len(name) for name, _, _ in workloads)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if both:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, _, _ in workloads:
        row = f"{name:<{width}}  "
        for backend in backends:
            row += f"{results[(backend, name)] * 1000:>10.3f}ms"
        if both:
            row += f"{results[('python', name)] / results[('cython', name)]:>9.2f}x"
        print(row)
    if not both:
        print("\n(compiled backend not built; only pure Python was measured)")


if __name__ == "__main__":
    main()
