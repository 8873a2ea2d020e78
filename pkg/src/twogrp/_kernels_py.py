"""Pure-Python bar-coboundary scan kernels.

Same contract as the compiled module twogrp._speedups; selected at import
time by twogrp.kernels.  All arguments are flat integer sequences: the group
table row-major, cochain values as coefficient-element indices in the
lexicographic enumeration of the coefficient group, and coefficient
addition/negation tables.
"""


def coboundary_table(gtable, ng, degree, values, add, neg, na, out):
    """Fill out (length ng^(degree+1)) with the degree+1 coboundary of
    values (length ng^degree) under the inhomogeneous bar formula with
    trivial action."""
    n = degree
    strides = [ng**i for i in range(n + 1)]
    total = ng ** (n + 1)
    tup = [0] * (n + 1)
    for flat in range(total):
        r = flat
        for pos in range(n, -1, -1):
            tup[n - pos] = r // strides[pos]
            r %= strides[pos]
        # leading term c(g2..g_{n+1})
        idx = 0
        for i in range(1, n + 1):
            idx = idx * ng + tup[i]
        acc = values[idx]
        sign = -1
        for i in range(1, n + 1):
            idx = 0
            for jpos in range(n + 1):
                if jpos == i - 1:
                    idx = idx * ng + gtable[tup[i - 1] * ng + tup[i]]
                elif jpos != i:
                    idx = idx * ng + tup[jpos]
            term = values[idx]
            acc = add[acc * na + term] if sign > 0 else add[acc * na + neg[term]]
            sign = -sign
        idx = 0
        for i in range(n):
            idx = idx * ng + tup[i]
        term = values[idx]
        acc = add[acc * na + term] if sign > 0 else add[acc * na + neg[term]]
        out[flat] = acc
    return out


def first_coboundary_violation(gtable, ng, degree, values, add, neg, na):
    """Flat index of the lexicographically first tuple where the coboundary
    of values is nonzero, or -1."""
    n = degree
    strides = [ng**i for i in range(n + 1)]
    total = ng ** (n + 1)
    tup = [0] * (n + 1)
    for flat in range(total):
        r = flat
        for pos in range(n, -1, -1):
            tup[n - pos] = r // strides[pos]
            r %= strides[pos]
        idx = 0
        for i in range(1, n + 1):
            idx = idx * ng + tup[i]
        acc = values[idx]
        sign = -1
        for i in range(1, n + 1):
            idx = 0
            for jpos in range(n + 1):
                if jpos == i - 1:
                    idx = idx * ng + gtable[tup[i - 1] * ng + tup[i]]
                elif jpos != i:
                    idx = idx * ng + tup[jpos]
            term = values[idx]
            acc = add[acc * na + term] if sign > 0 else add[acc * na + neg[term]]
            sign = -sign
        idx = 0
        for i in range(n):
            idx = idx * ng + tup[i]
        term = values[idx]
        acc = add[acc * na + term] if sign > 0 else add[acc * na + neg[term]]
        if acc != 0:
            return flat
    return -1
