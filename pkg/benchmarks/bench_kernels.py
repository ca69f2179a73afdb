"""Benchmark the compiled geometry kernels against the pure-Python twin.

The backend is chosen at import time, so each measurement runs in a child
interpreter: once with the default selection (compiled when built) and once
with PI1LAB_PURE=1. Outputs are bit-identical either way; only the wall
clock differs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOADS = ["disjointness", "hausdorff", "supdist", "probe"]

_CHILD = r"""
import json, sys, time
from fractions import Fraction

import pi1lab.kernels as kernels
from pi1lab.loops import realize_word, standard_f, standard_fn
from pi1lab.pi1 import probe_discreteness_x
from pi1lab.spaces import SpaceKind, compact_y, hausdorff_convergence, verify_disjointness
from pi1lab.geometry import sup_distance
from pi1lab.words import parse_word

def run(workload, repeat):
    y = compact_y(hint=40)
    x = y.sibling(SpaceKind.BOUQUET_X)
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        if workload == "disjointness":
            assert verify_disjointness(y, 24).passed
        elif workload == "hausdorff":
            assert hausdorff_convergence(y, 16).passed
        elif workload == "supdist":
            f = standard_f(y)
            for n in range(2, 33):
                sup_distance(standard_fn(n, y).path, f.path)
        elif workload == "probe":
            lp = realize_word(parse_word("g2 g3^-1 g4"), x)
            assert probe_discreteness_x(lp, 60, Fraction(1, 1000), seed=5).passed
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best

workload, repeat = sys.argv[1], int(sys.argv[2])
print(json.dumps({"backend": kernels.BACKEND, "seconds": run(workload, repeat)}))
"""


def measure(workload: str, repeat: int, pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["PI1LAB_PURE"] = "1"
    else:
        env.pop("PI1LAB_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", _CHILD, workload, str(repeat)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()
    print(f"{'workload':<14} {'pure (s)':>10} {'selected (s)':>13} {'backend':>9} {'speedup':>8}")
    for workload in WORKLOADS:
        pure = measure(workload, args.repeat, pure=True)
        fast = measure(workload, args.repeat, pure=False)
        speedup = pure["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(
            f"{workload:<14} {pure['seconds']:>10.4f} {fast['seconds']:>13.4f} "
            f"{fast['backend']:>9} {speedup:>7.2f}x"
        )
    if fast["backend"] == "pure":
        print("note: compiled kernels not built; both columns ran the pure twin")
    return 0


if __name__ == "__main__":
    sys.exit(main())
