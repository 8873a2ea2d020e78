"""Compare the compiled and pure-Python coboundary kernels.

Runs the same coboundary-table and first-violation workloads through both
backends, checks that the outputs agree bit for bit, and prints a timing
table.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from twogrp import _kernels_py, kernels
from twogrp.coeff import AbelianGroup
from twogrp.group import dihedral, group_construct


def workloads():
    rng = random.Random(7)
    out = []
    for G, A, degree in [
        (group_construct("cyclic:4"), AbelianGroup([4]), 3),
        (dihedral(3), AbelianGroup([6]), 3),
        (dihedral(4), AbelianGroup([2, 2]), 3),
        (dihedral(4), AbelianGroup([8]), 2),
    ]:
        gtable = [x for row in G.table for x in row]
        values = [rng.randrange(A.order) for _ in range(G.order**degree)]
        out.append(
            (
                "%s / %s / deg %d" % (G.name, list(A.invariant_factors), degree),
                gtable, G.order, degree, values,
                A.addition_table(), A.negation_table(), A.order,
            )
        )
    return out


def run_pure(args, repeat):
    gtable, ng, degree, values, add, neg, na = args
    out = [0] * ng ** (degree + 1)
    start = time.perf_counter()
    for _ in range(repeat):
        _kernels_py.coboundary_table(gtable, ng, degree, values, add, neg, na, out)
        _kernels_py.first_coboundary_violation(gtable, ng, degree, values, add, neg, na)
    return time.perf_counter() - start, list(out)


def run_backend(args, repeat):
    gtable, ng, degree, values, add, neg, na = args
    start = time.perf_counter()
    for _ in range(repeat):
        out = kernels.coboundary_table(gtable, ng, degree, values, add, neg, na)
        kernels.first_coboundary_violation(gtable, ng, degree, values, add, neg, na)
    return time.perf_counter() - start, [int(x) for x in out]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=50)
    opts = parser.parse_args()

    print("active backend: %s" % kernels.BACKEND)
    print("%-36s %12s %12s %9s" % ("workload", "pure (s)", "backend (s)", "speedup"))
    for name, *args in workloads():
        t_pure, out_pure = run_pure(tuple(args), opts.repeat)
        t_back, out_back = run_backend(tuple(args), opts.repeat)
        if out_pure != out_back:
            raise SystemExit("backend disagreement on %s" % name)
        speedup = t_pure / t_back if t_back else float("inf")
        print("%-36s %12.4f %12.4f %8.1fx" % (name, t_pure, t_back, speedup))


if __name__ == "__main__":
    main()
