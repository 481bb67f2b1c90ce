"""Compare the compiled and pure-Python kernel backends.

Runs the three hot kernels (min_weight, weight_counts,
covering_min_weights) on generator matrices of growing dimension and
prints a timing table plus a result-equality check.

Usage: python benchmarks/bench_backends.py [--max-k 12]
"""

from __future__ import annotations

import argparse
import time

from lrc4 import _kernels_py
from lrc4 import constructions as cons

try:
    from lrc4 import _kernels_c
except ImportError:
    _kernels_c = None


def _cases(max_k: int):
    """Generator matrices of catalog instances with k up to max_k."""
    picks = [
        ("C02 s=2", cons.BuildRequest("C02", {"s": 2})),   # k = 5
        ("C10 s=2", cons.BuildRequest("C10", {"s": 2})),   # k = 7
        ("C15 s=2", cons.BuildRequest("C15", {"s": 2})),   # k = 10
        ("C18 s=2", cons.BuildRequest("C18", {"s": 2})),   # k = 13
        ("C17 s=2", cons.BuildRequest("C17", {"s": 2})),   # k = 14
    ]
    for name, req in picks:
        code = cons.build(req).code
        if code.k <= max_k:
            yield name, code


def _time(fn, *args) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=13,
                        help="largest code dimension to benchmark")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled backend not available; showing pure-Python times only")

    header = f"{'case':10s} {'kernel':22s} {'py [s]':>10s} {'c [s]':>10s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name, code in _cases(args.max_k):
        g = code.generator.array
        for kernel in ("min_weight", "weight_counts", "covering_min_weights"):
            t_py, out_py = _time(getattr(_kernels_py, kernel), g)
            if _kernels_c is None:
                print(f"{name:10s} {kernel:22s} {t_py:10.4f} {'-':>10s} {'-':>9s}")
                continue
            t_c, out_c = _time(getattr(_kernels_c, kernel), g)
            same = list(out_py) == list(out_c) if kernel != "min_weight" else out_py == out_c
            flag = "" if same else "  RESULTS DIFFER"
            print(f"{name:10s} {kernel:22s} {t_py:10.4f} {t_c:10.4f} "
                  f"{t_py / t_c:8.1f}x{flag}")
            if not same:
                return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
