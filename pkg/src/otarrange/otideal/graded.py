"""Degree-by-degree linear algebra for homogeneous ideals.

I_d is the span of m*g over generators g and monomials m; it is built
incrementally as I_d = S_1 * I_{d-1} + span(generators of degree d).
Columns of degree d are monomials sorted by the term order, and rows are
reduced against the pivot with the largest column, so the pivot columns
are exactly the degree-d part of the initial ideal.
"""
from itertools import combinations_with_replacement
from math import comb, lcm

from ..exactcore import Monomial, TermOrder
from ..kernels import echelon_insert


def degree_monomials(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def _integer_terms(poly):
    m = lcm(*(c.denominator for c in poly.terms.values()))
    return {mono: int(c * m) for mono, c in poly.terms.items()}


class GradedIdealView:
    """Per-degree echelon bases of a homogeneous ideal up to degree D."""

    def __init__(self, generators, D, nvars, order=None):
        self.nvars = nvars
        self.D = D
        self.order = order or TermOrder.lex_descending(nvars)
        if self.order.nvars != nvars:
            raise ValueError("term order has the wrong number of variables")
        self.generators = []
        by_degree = {}
        for g in generators:
            if not g:
                continue
            d = g.homogeneous_degree()
            if d is None:
                raise ValueError(f"generator {g} is not homogeneous")
            if any(v >= nvars for v in g.variables()):
                raise ValueError(f"generator {g} uses a variable outside 0..{nvars - 1}")
            self.generators.append(g)
            by_degree.setdefault(d, []).append(g)
        self._by_degree = by_degree
        self._monos = {}
        self._index = {}
        self.pivots = {}
        prev = {}
        for d in range(D + 1):
            piv = {}
            if prev:
                self._extend(d, prev, piv)
            for g in by_degree.get(d, ()):
                idx = self.index(d)
                row = {idx[m.dense(nvars)]: c for m, c in _integer_terms(g).items()}
                echelon_insert(piv, row)
            self.pivots[d] = piv
            prev = piv

    def monomials(self, d):
        ms = self._monos.get(d)
        if ms is None:
            ms = sorted(degree_monomials(self.nvars, d), key=self.order.dense_key)
            self._monos[d] = ms
            self._index[d] = {m: k for k, m in enumerate(ms)}
        return ms

    def index(self, d):
        self.monomials(d)
        return self._index[d]

    def _extend(self, d, prev, piv):
        src = self.monomials(d - 1)
        idx = self.index(d)
        n = self.nvars
        cache = {}
        for row in prev.values():
            for v in range(n):
                new = {}
                for k, c in row.items():
                    key = (k, v)
                    col = cache.get(key)
                    if col is None:
                        e = list(src[k])
                        e[v] += 1
                        col = idx[tuple(e)]
                        cache[key] = col
                    new[col] = c
                echelon_insert(piv, new)

    def n_monomials(self, d):
        return comb(self.nvars - 1 + d, d) if self.nvars else int(d == 0)

    def ideal_dim(self, d):
        return len(self.pivots[d])

    def quotient_dim(self, d):
        return self.n_monomials(d) - len(self.pivots[d])

    def ideal_dims(self):
        return [self.ideal_dim(d) for d in range(self.D + 1)]

    def hilbert(self):
        """dim (S/I)_d for d = 0..D."""
        return [self.quotient_dim(d) for d in range(self.D + 1)]

    def leading_monomials(self, d):
        ms = self.monomials(d)
        return {Monomial.from_dense(ms[k]) for k in self.pivots[d]}

    def contains(self, poly):
        if not poly:
            return True
        d = poly.homogeneous_degree()
        if d is None or d > self.D:
            raise ValueError("need a homogeneous polynomial of degree <= D")
        idx = self.index(d)
        row = {idx[m.dense(self.nvars)]: c for m, c in _integer_terms(poly).items()}
        return echelon_insert(dict(self.pivots[d]), row) == -1


def graded_view(generators, D, nvars, order=None):
    """Return (view, quotient Hilbert function up to D)."""
    view = GradedIdealView(generators, D, nvars, order)
    return view, view.hilbert()


def monomial_budget_degree(nvars, D, budget=25000):
    """Largest d <= D with at most ``budget`` monomials of degree d."""
    d = 0
    while d < D and comb(nvars + d, d + 1) <= budget:
        d += 1
    return d
