"""Pure-Python versions of the hot kernels.

Every function here has a twin with the same signature in ``_speedups``
(Cython).  ``otarrange.kernels`` picks one at import time.
"""
from math import gcd


def bareiss_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free elimination.

    ``rows`` is consumed (rows are copied first, so callers may reuse them).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        p = m[rank]
        a = p[col]
        for i in range(rank + 1, nrows):
            r = m[i]
            b = r[col]
            for j in range(col + 1, ncols):
                r[j] = (a * r[j] - b * p[j]) // prev
            r[col] = 0
        prev = a
        rank += 1
    return rank


def echelon_insert(pivots, row):
    """Reduce an integer sparse row against ``pivots`` and store the remainder.

    ``pivots`` maps a column index to the stored row whose largest column is
    that index.  Returns the new pivot column, or -1 if the row reduced to 0.
    ``row`` is not modified.
    """
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


def nbc_faces(n, broken_by_max, max_size):
    """All subsets of range(n) (as bitmasks) containing no listed mask.

    ``broken_by_max[j]`` lists forbidden masks whose highest bit is ``j``.
    Faces larger than ``max_size`` are not explored.
    """
    faces = [0]
    stack = [(0, 0, -1)]
    while stack:
        mask, size, top = stack.pop()
        if size == max_size:
            continue
        for j in range(top + 1, n):
            new = mask | (1 << j)
            for b in broken_by_max[j]:
                if b & ~new == 0:
                    break
            else:
                faces.append(new)
                stack.append((new, size + 1, j))
    return faces


def first_line_closed_nonflat(n, pair_closure, is_flat):
    """Smallest bitmask that is line-closed but not a flat, or -1.

    ``pair_closure[i * n + j]`` is the closure mask of {i, j};
    ``is_flat[mask]`` is truthy for flats.
    """
    for s in range(1 << n):
        if is_flat[s]:
            continue
        closed = True
        i = 0
        rest = s
        while rest and closed:
            if rest & 1:
                base = i * n
                rest2 = s >> (i + 1)
                j = i + 1
                while rest2:
                    if rest2 & 1 and pair_closure[base + j] & ~s:
                        closed = False
                        break
                    rest2 >>= 1
                    j += 1
            rest >>= 1
            i += 1
        if closed:
            return s
    return -1
