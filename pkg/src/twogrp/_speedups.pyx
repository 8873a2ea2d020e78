# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bar-coboundary scan kernels; see twogrp._kernels_py for the
reference implementation and argument contract."""


def coboundary_table(long[::1] gtable, long ng, long degree,
                     long[::1] values, long[::1] add, long[::1] neg,
                     long na, long[::1] out):
    cdef long n = degree
    cdef long total = 1
    cdef long i, flat, r, pos, idx, acc, term, sign, jpos
    cdef long tup[8]
    for i in range(n + 1):
        total *= ng
    cdef long strides[8]
    strides[0] = 1
    for i in range(1, n + 1):
        strides[i] = strides[i - 1] * ng
    for flat in range(total):
        r = flat
        for pos in range(n, -1, -1):
            tup[n - pos] = r / strides[pos]
            r = r % strides[pos]
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
            if sign > 0:
                acc = add[acc * na + term]
            else:
                acc = add[acc * na + neg[term]]
            sign = -sign
        idx = 0
        for i in range(n):
            idx = idx * ng + tup[i]
        term = values[idx]
        if sign > 0:
            acc = add[acc * na + term]
        else:
            acc = add[acc * na + neg[term]]
        out[flat] = acc
    return out


def first_coboundary_violation(long[::1] gtable, long ng, long degree,
                               long[::1] values, long[::1] add,
                               long[::1] neg, long na):
    cdef long n = degree
    cdef long total = 1
    cdef long i, flat, r, pos, idx, acc, term, sign, jpos
    cdef long tup[8]
    for i in range(n + 1):
        total *= ng
    cdef long strides[8]
    strides[0] = 1
    for i in range(1, n + 1):
        strides[i] = strides[i - 1] * ng
    for flat in range(total):
        r = flat
        for pos in range(n, -1, -1):
            tup[n - pos] = r / strides[pos]
            r = r % strides[pos]
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
            if sign > 0:
                acc = add[acc * na + term]
            else:
                acc = add[acc * na + neg[term]]
            sign = -sign
        idx = 0
        for i in range(n):
            idx = idx * ng + tup[i]
        term = values[idx]
        if sign > 0:
            acc = add[acc * na + term]
        else:
            acc = add[acc * na + neg[term]]
        if acc != 0:
            return flat
    return -1
