"""Exact linear algebra over Q."""
from fractions import Fraction
from math import lcm

from ..errors import DimensionMismatchError
from ..kernels import bareiss_rank


def _width(rows):
    rows = list(rows)
    if not rows:
        return rows, 0
    w = len(rows[0])
    for r in rows:
        if len(r) != w:
            raise DimensionMismatchError(f"row of length {len(r)} in a matrix of width {w}")
    return rows, w


def integer_rows(rows):
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        m = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * m) for x in fr])
    return out


def exact_rank(rows):
    """Rank of the row span over Q (fraction-free elimination)."""
    rows, w = _width(rows)
    if not rows or w == 0:
        return 0
    return bareiss_rank(integer_rows(rows), w)


def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows, w = _width(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(w):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols=None):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    rows, w = _width(rows)
    if ncols is None:
        ncols = w
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def transpose(rows, ncols=None):
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return [[r[j] for r in rows] for j in range(ncols)]


def in_span(vector, rows):
    return exact_rank(list(rows) + [vector]) == exact_rank(rows)


def express_in_basis(vector, basis):
    """Coefficients c with sum c_i basis_i = vector, or None if impossible."""
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in vector) else None
    cols = transpose(basis, len(vector))
    aug = [list(c) + [Fraction(x)] for c, x in zip(cols, vector)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row[k]
    return coeffs
