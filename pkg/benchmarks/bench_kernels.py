"""Compare the compiled and pure-Python membership kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Workloads are the tables the verification suites build: conductors of
maximal-conductor semigroups for larger degrees and of coprime pairs.
"""
from __future__ import annotations

import argparse
import timeit

from amsemigroup.classification import divisor_chains, extremal_generators
from amsemigroup.errors import MAX_TABLE_BOUND
from amsemigroup.kernels import compiled_backend, python_backend


def workloads():
    extremal = [extremal_generators(c) for n in (40, 64, 90) for c in divisor_chains(n)]
    pairs = [(a, a + 1) for a in (101, 211, 307)]
    return {
        "scan_conductor/extremal n in {40,64,90}": ("scan", extremal),
        "scan_conductor/consecutive pairs": ("scan", pairs),
        "fill_table/extremal bound 20000": ("fill", extremal),
    }


def run(backend, kind, cases):
    if kind == "scan":
        for gens in cases:
            backend.scan_conductor(gens, MAX_TABLE_BOUND)
    else:
        for gens in cases:
            backend.fill_table(gens, 20_000)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {"python": python_backend}
    if compiled_backend is not None:
        backends["cython"] = compiled_backend
    else:
        print("compiled kernels not built; timing pure Python only")

    for name, (kind, cases) in workloads().items():
        times = {}
        for label, backend in backends.items():
            times[label] = min(
                timeit.repeat(lambda: run(backend, kind, cases), number=1, repeat=args.repeat)
            )
        row = "  ".join(f"{k} {v * 1e3:9.2f} ms" for k, v in times.items())
        speedup = ""
        if "cython" in times and times["cython"] > 0:
            speedup = f"  x{times['python'] / times['cython']:.0f}"
        print(f"{name:<42} {row}{speedup}")


if __name__ == "__main__":
    main()
