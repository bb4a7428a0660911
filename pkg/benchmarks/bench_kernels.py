"""Compare the compiled triple-scan kernel against the numpy fallback.

Runs the dangerous-triple scan for each position flag over a wide
reduction-style profile and a random profile, timing both backends. The
compiled row only appears when the extension was built.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from prefdomains import Graph, GenParams, generate, reduce_to_profile
from prefdomains import _scan, _scan_py
from prefdomains.minors import _tables


def _time_scan(fn, dom, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for j in (1, 2, 3):
            fn(dom, j)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    wide = reduce_to_profile(Graph(4, frozenset()), 3).profile
    dense = generate(GenParams(n=50, m=40, k=1, seed=1, model="impartial"))
    print("active kernel: %s" % _scan.IMPLEMENTATION)
    for label, p in (("reduction 19x243", wide), ("impartial 50x40", dense)):
        dom = _tables(p).dom
        t_py = _time_scan(_scan_py.dangerous_scan, dom, args.repeat)
        line = "%-18s fallback %8.4fs" % (label, t_py)
        if _scan.IMPLEMENTATION == "compiled":
            t_c = _time_scan(_scan.dangerous_scan, dom, args.repeat)
            line += "   compiled %8.4fs   speedup %5.1fx" % (t_c, t_py / t_c)
        print(line)


if __name__ == "__main__":
    main()
