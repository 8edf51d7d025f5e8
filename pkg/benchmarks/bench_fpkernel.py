"""Timing comparison of the sweep kernel backends.

Runs the same exhaustive sweeps through every importable backend
(compiled extension and vectorized fallback), checks that they return
identical hit lists, and prints the wall times with the speedup of the
fastest over the slowest.

    python3 benchmarks/bench_fpkernel.py          # full workload
    python3 benchmarks/bench_fpkernel.py --quick  # small sanity sizes
"""

import argparse
import sys
import time

from postlie.catalog import builtin_algebra
from postlie.fields import GF
from postlie.fpkernel import backends
from postlie.search import flat_bracket_tensor


def _workloads(quick):
    pp, pd = (3, 2) if quick else (5, 2)
    prod_field = GF(pp)
    zero = [0] * (pd ** 3)
    fp = 3 if quick else 5
    phi_alg = builtin_algebra("sl2", field=GF(fp))
    cn = flat_bracket_tensor(phi_alg)
    return [
        ("product_sweep GF(%d) dim %d full" % (pp, pd),
         lambda kern: kern.product_sweep(pp, pd, zero, zero, False, 0,
                                         pp ** (pd ** 3))),
        ("phi_sweep sl2 GF(%d)" % fp,
         lambda kern: kern.phi_sweep(fp, 3, cn, 0,
                                     fp ** (phi_alg.dim ** 2))),
    ]


def run(quick=False, out=sys.stdout):
    mods = backends()
    if len(mods) < 2:
        print("only the %s backend is importable; timing it alone"
              % mods[0].NAME, file=out)
    failures = 0
    for label, work in _workloads(quick):
        print(label, file=out)
        results = {}
        times = {}
        for kern in mods:
            begin = time.perf_counter()
            hits = work(kern)
            times[kern.NAME] = time.perf_counter() - begin
            results[kern.NAME] = list(hits)
            print("  %-10s %8.3fs   %d hits"
                  % (kern.NAME, times[kern.NAME], len(hits)), file=out)
        distinct = {tuple(v) for v in results.values()}
        if len(distinct) != 1:
            failures += 1
            print("  MISMATCH: backends disagree on the hit list", file=out)
        elif len(times) > 1:
            fastest = min(times, key=times.get)
            slowest = max(times, key=times.get)
            if times[fastest] > 0:
                print("  %s is %.1fx faster than %s"
                      % (fastest, times[slowest] / times[fastest], slowest),
                      file=out)
    return failures


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true",
                        help="small workloads for a fast smoke run")
    args = parser.parse_args(argv)
    return run(quick=args.quick)


if __name__ == "__main__":
    sys.exit(main())
