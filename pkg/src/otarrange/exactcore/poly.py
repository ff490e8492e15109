"""Sparse multivariate polynomials over Q and monomial orders."""
from fractions import Fraction


class Monomial:
    """Product of variables, stored sparsely as sorted ``(var, exp)`` pairs."""

    __slots__ = ("exps", "degree", "_hash")

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = exps.items()
        else:
            items = exps
        acc = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                acc[v] = acc.get(v, 0) + e
        self.exps = tuple(sorted(acc.items()))
        self.degree = sum(acc.values())
        self._hash = hash(self.exps)

    @classmethod
    def from_dense(cls, dense):
        return cls((i, e) for i, e in enumerate(dense) if e)

    @classmethod
    def of(cls, *variables):
        """Squarefree-or-not product of the listed variable indices."""
        acc = {}
        for v in variables:
            acc[v] = acc.get(v, 0) + 1
        return cls(acc)

    def dense(self, nvars):
        out = [0] * nvars
        for v, e in self.exps:
            out[v] = e
        return tuple(out)

    def exponent(self, var):
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    @property
    def variables(self):
        return tuple(v for v, _ in self.exps)

    def __mul__(self, other):
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = acc.get(v, 0) + e
        return Monomial(acc)

    def divides(self, other):
        mine = dict(other.exps)
        return all(mine.get(v, 0) >= e for v, e in self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({dict(self.exps)})"

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"y{v + 1}" if e == 1 else f"y{v + 1}^{e}" for v, e in self.exps)


class TermOrder:
    """Lex or graded reverse lex with an explicit variable priority.

    ``priority`` lists variable indices from the largest variable to the
    smallest, e.g. ``(n-1, ..., 0)`` makes y_n the largest.
    """

    KINDS = ("lex", "grevlex")

    def __init__(self, kind, priority):
        if kind not in self.KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        priority = tuple(priority)
        if sorted(priority) != list(range(len(priority))):
            raise ValueError("priority must be a permutation of 0..N-1")
        self.kind = kind
        self.priority = priority

    @classmethod
    def lex_descending(cls, nvars):
        """lex with y_n > ... > y_1."""
        return cls("lex", range(nvars - 1, -1, -1))

    @property
    def nvars(self):
        return len(self.priority)

    def ground_order(self):
        """Ground order (least first) paired with this variable priority.

        The smallest variable is the least element, so that the leading
        term of a circuit relation omits the least element of the circuit.
        """
        return tuple(reversed(self.priority))

    def dense_key(self, dense):
        """Sort key on a dense exponent tuple; larger key = larger monomial."""
        if self.kind == "lex":
            return tuple(dense[v] for v in self.priority)
        return (sum(dense),) + tuple(-dense[v] for v in reversed(self.priority))

    def key(self, mono):
        return self.dense_key(mono.dense(self.nvars))

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (self.kind, self.priority) == (other.kind, other.priority)

    def __hash__(self):
        return hash((self.kind, self.priority))

    def __repr__(self):
        return f"TermOrder({self.kind!r}, {self.priority})"


class MultiPoly:
    """Polynomial as a mapping Monomial -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                c = Fraction(c)
                if c:
                    acc[m] = acc.get(m, 0) + c
        self.terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls({mono: coeff})

    @classmethod
    def variable(cls, index):
        return cls({Monomial(((index, 1),)): 1})

    @classmethod
    def constant(cls, c):
        return cls({Monomial(): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return MultiPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            return MultiPoly({m: v * c for m, v in self.terms.items()})
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return MultiPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = MultiPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def homogeneous_degree(self):
        """The common degree of all terms, or None if not homogeneous.

        The zero polynomial has no degree and also returns None.
        """
        degs = {m.degree for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    @property
    def degree(self):
        return max((m.degree for m in self.terms), default=-1)

    def variables(self):
        return sorted({v for m in self.terms for v in m.variables})

    def leading_term(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def set_zero(self, variables):
        """Image under y_v -> 0 for every v in ``variables``."""
        kill = set(variables)
        return MultiPoly({m: c for m, c in self.terms.items() if not kill.intersection(m.variables)})

    def rename(self, mapping):
        """Relabel variables by ``mapping`` (old index -> new index)."""
        return MultiPoly(
            {Monomial((mapping[v], e) for v, e in m.exps): c for m, c in self.terms.items()}
        )

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    def normalized(self, order):
        """Scalar multiple whose leading coefficient is 1."""
        _, c = self.leading_term(order)
        return self * (1 / c)

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        order = TermOrder("grevlex", range(max(self.variables(), default=0), -1, -1))
        items = sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)
        out = ""
        for m, c in items:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(m) if mag == 1 and m.degree else (f"{mag}" if not m.degree else f"{mag}*{m}")
            out += (f"{sign}{body}" if not out and sign == "-" else body) if not out else f" {sign} {body}"
        return out
