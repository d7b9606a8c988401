#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python mirror.

The workload is the hot loop of the package: exact min/max over every digit
continuation of a cylinder (the tail-extrema oracle).  Run after an editable
install:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from cantorkit import kernels, parse_family
from cantorkit.cylinders import _oracle_levels


def _workloads():
    out = []
    for text, depth in (
        ("S(s=3)", 14),
        ("S(s=4)", 11),
        ("S(s=5)", 10),
        ("Su(s=5,u=2)", 11),
        ("NSu(s=4,u=0)", 11),
        ("Sminus(s=4)", 11),
        ("Tilde(s=4)", 6),
    ):
        fam = parse_family(text)
        levels, parity, tnum, tden = _oracle_levels(fam, depth, 0)
        out.append((f"{text} depth={depth}", fam.s, levels, parity, tnum, tden))
    return out


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not kernels.HAVE_C:
        print("compiled kernel unavailable: timing the pure-Python backend only")
    print(f"{'workload':<24} {'leaves':>9} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, s, levels, parity, tnum, tden in _workloads():
        leaves = kernels.leaf_count(levels)
        t_py = _time(
            lambda: kernels.local_extrema(s, levels, parity, tnum, tden, backend="python"),
            args.repeat,
        )
        if kernels.HAVE_C:
            t_c = _time(
                lambda: kernels.local_extrema(s, levels, parity, tnum, tden, backend="cython"),
                args.repeat,
            )
            r_py = kernels.local_extrema(s, levels, parity, tnum, tden, backend="python")
            r_c = kernels.local_extrema(s, levels, parity, tnum, tden, backend="cython")
            assert r_py == r_c, f"backend mismatch on {name}"
            print(f"{name:<24} {leaves:>9} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<24} {leaves:>9} {t_py:>9.3f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
