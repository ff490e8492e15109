"""Matroid data of a realization: ranks, closures, circuits, flats.

Subsets of the ground set are Python ints used as bitmasks.  All linear
algebra is fraction-free over the integers (each row is first scaled to a
primitive integer vector; circuit coefficients are scaled back).
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arrangement import primitive


def bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Circuit:
    """Minimal dependency sum(coeffs[k] * f[support[k]]) == 0.

    The coefficient on the least support element is 1.
    """

    support: tuple
    coeffs: tuple

    @property
    def mask(self):
        return to_mask(self.support)

    def __len__(self):
        return len(self.support)


def _reduce(echelon, vec, combo=None):
    """Reduce an int vector against (pivot, row, combo) triples in order."""
    v = list(vec)
    c = dict(combo) if combo is not None else None
    for p, row, rcombo in echelon:
        b = v[p]
        if not b:
            continue
        a = row[p]
        g = gcd(a, b)
        a //= g
        b //= g
        v = [a * x - b * y for x, y in zip(v, row)]
        if c is not None:
            c = {k: a * w for k, w in c.items()}
            for k, w in rcombo.items():
                nw = c.get(k, 0) - b * w
                if nw:
                    c[k] = nw
                else:
                    c.pop(k, None)
    return v, c


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x:
            return i
    return -1


class Realization:
    """Matroid of a finite list of nonzero rational vectors."""

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.n = len(self.rows)
        self.int_rows = []
        self.scales = []
        for r in self.rows:
            p = primitive(r)
            nz = next(k for k, x in enumerate(r) if x)
            self.int_rows.append(p)
            # f_i = p_i / scale_i
            self.scales.append(Fraction(p[nz]) / r[nz])
        self._rank = {0: 0}
        self._echelon = {0: []}
        self._circuits = None
        self._flats = None

    @property
    def ground(self):
        return (1 << self.n) - 1

    def echelon(self, mask):
        """Echelon basis of the span of ``mask`` (built incrementally, memoized)."""
        e = self._echelon.get(mask)
        if e is not None:
            return e
        top = mask.bit_length() - 1
        base = self.echelon(mask & ~(1 << top))
        v, _ = _reduce(base, self.int_rows[top])
        p = _first_nonzero(v)
        e = base if p < 0 else base + [(p, primitive(v), None)]
        if len(self._echelon) < 200_000:
            self._echelon[mask] = e
        return e

    def rank(self, mask):
        r = self._rank.get(mask)
        if r is None:
            r = len(self.echelon(mask))
            self._rank[mask] = r
        return r

    def residue_key(self, echelon, i):
        """Canonical direction of f_i modulo span(echelon); () if in the span."""
        v, _ = _reduce(echelon, self.int_rows[i])
        if _first_nonzero(v) < 0:
            return ()
        return primitive(v)

    def closure(self, mask):
        e = self.echelon(mask)
        out = mask
        for i in range(self.n):
            if not (mask >> i) & 1 and _first_nonzero(_reduce(e, self.int_rows[i])[0]) < 0:
                out |= 1 << i
        return out

    def is_independent(self, mask):
        return self.rank(mask) == bin(mask).count("1")

    @property
    def full_rank(self):
        return self.rank(self.ground)

    def _circuit_combos(self):
        n, rk = self.n, self.full_rank
        stack = [((), [])]
        while stack:
            indep, ech = stack.pop()
            start = indep[-1] + 1 if indep else 0
            for j in range(start, n):
                v, combo = _reduce(ech, self.int_rows[j], {j: 1})
                p = _first_nonzero(v)
                if p < 0:
                    if len(combo) == len(indep) + 1:
                        yield combo
                elif len(indep) < rk:
                    stack.append((indep + (j,), ech + [(p, v, combo)]))

    def circuits(self):
        """All circuits, ordered by (size, support)."""
        if self._circuits is None:
            found = [self._make_circuit(c) for c in self._circuit_combos()]
            found.sort(key=lambda c: (len(c.support), c.support))
            self._circuits = found
        return self._circuits

    def circuit_supports(self):
        """Supports only, in the same order as ``circuits``; skips coefficients."""
        if self._circuits is not None:
            return [c.support for c in self._circuits]
        return sorted((tuple(sorted(c)) for c in self._circuit_combos()), key=lambda s: (len(s), s))

    def _make_circuit(self, combo):
        support = tuple(sorted(combo))
        raw = [Fraction(combo[i]) * self.scales[i] for i in support]
        lead = raw[0]
        return Circuit(support, tuple(x / lead for x in raw))

    def flats(self):
        """Flats grouped by rank, as lists of bitmasks, plus the cover relation."""
        if self._flats is not None:
            return self._flats
        rk = self.full_rank
        levels = [[0]]
        covers = {0: []}
        for r in range(rk):
            nxt = {}
            for f in levels[r]:
                e = self.echelon(f)
                classes = {}
                for j in range(self.n):
                    if (f >> j) & 1:
                        continue
                    key = self.residue_key(e, j)
                    classes[key] = classes.get(key, 0) | (1 << j)
                ups = []
                for cls in classes.values():
                    g = f | cls
                    nxt.setdefault(g, None)
                    ups.append(g)
                covers[f] = sorted(ups)
            level = sorted(nxt, key=lambda m: bits(m))
            for g in level:
                covers.setdefault(g, [])
                self._rank[g] = r + 1
            levels.append(level)
        self._flats = (levels, covers)
        return self._flats
