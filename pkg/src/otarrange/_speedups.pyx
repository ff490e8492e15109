# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_fallback``; same signatures."""
from math import gcd
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


def bareiss_rank(rows, Py_ssize_t ncols):
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef list p, r
    cdef object prev = 1, a, b
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if (<list>m[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        p = <list>m[rank]
        a = p[col]
        for i in range(rank + 1, nrows):
            r = <list>m[i]
            b = r[col]
            if b:
                for j in range(col + 1, ncols):
                    r[j] = (a * r[j] - b * p[j]) // prev
                r[col] = 0
            elif a != prev:
                for j in range(col + 1, ncols):
                    r[j] = (a * r[j]) // prev
        prev = a
        rank += 1
    return rank


def echelon_insert(dict pivots, dict row):
    cdef dict new, prow
    cdef object p, a, b, g, ma, mb, k, v, w
    if not row:
        return -1
    while True:
        p = max(row)
        prow = pivots.get(p)
        if prow is None:
            g = 0
            for v in row.values():
                g = gcd(g, v)
            if row[p] < 0:
                g = -g
            if g != 1:
                row = {k: v // g for k, v in row.items()}
            pivots[p] = row
            return p
        a = row[p]
        b = prow[p]
        g = gcd(a, b)
        ma = b // g
        mb = a // g
        if ma == 1:
            new = dict(row)
        else:
            new = {k: v * ma for k, v in row.items()}
        for k, v in prow.items():
            w = new.get(k, 0) - v * mb
            if w:
                new[k] = w
            else:
                del new[k]
        if not new:
            return -1
        row = new


def nbc_faces(int n, broken_by_max, int max_size):
    cdef list faces = [0]
    cdef list stack_mask = [0]
    cdef list stack_size = [0]
    cdef list stack_top = [-1]
    cdef uint64_t mask, new, bm
    cdef int size, top, j
    cdef bint ok
    cdef list bl
    while stack_mask:
        mask = stack_mask.pop()
        size = stack_size.pop()
        top = stack_top.pop()
        if size == max_size:
            continue
        for j in range(top + 1, n):
            new = mask | ((<uint64_t>1) << j)
            ok = True
            bl = <list>broken_by_max[j]
            for b in bl:
                bm = b
                if bm & ~new == 0:
                    ok = False
                    break
            if ok:
                faces.append(new)
                stack_mask.append(new)
                stack_size.append(size + 1)
                stack_top.append(j)
    return faces


def first_line_closed_nonflat(int n, pair_closure, is_flat):
    cdef Py_ssize_t total = (<Py_ssize_t>1) << n
    cdef uint64_t *pc = <uint64_t *>malloc(n * n * sizeof(uint64_t))
    cdef const unsigned char[:] flat = bytes(is_flat)
    cdef uint64_t s
    cdef int i, j
    cdef bint closed
    cdef Py_ssize_t result = -1
    if pc == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            pc[i] = pair_closure[i]
        for s in range(<uint64_t>total):
            if flat[s]:
                continue
            closed = True
            for i in range(n):
                if not (s >> i) & 1:
                    continue
                for j in range(i + 1, n):
                    if (s >> j) & 1 and pc[i * n + j] & ~s:
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                result = <Py_ssize_t>s
                break
    finally:
        free(pc)
    return result
