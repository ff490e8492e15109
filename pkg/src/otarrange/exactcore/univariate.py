"""Dense univariate polynomials and rational functions in one variable ``t``."""
from fractions import Fraction
from math import comb

from ..errors import PoleAtOriginError


class UniPoly:
    """Polynomial with rational coefficients, ``coeffs[k]`` multiplying t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result = UniPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else ())

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def negate_variable(self):
        """p(-t)."""
        return UniPoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _lift(x):
    return x if isinstance(x, UniPoly) else UniPoly((x,))


def one_minus_t_power(k):
    """(1 - t)^k, built from binomials."""
    return UniPoly((-1) ** j * comb(k, j) for j in range(k + 1))


class RatFun:
    """Quotient ``num / den`` of univariate polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = _lift(num)
        self.den = _lift(1 if den is None else den)
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            other = RatFun(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(("RatFun",))

    def __repr__(self):
        return f"RatFun(({self.num}) / ({self.den}))"


def series_expand(f, D):
    """First ``D + 1`` Taylor coefficients of ``f`` at t = 0."""
    if not isinstance(f, RatFun):
        f = RatFun(f)
    d0 = f.den[0]
    if d0 == 0:
        raise PoleAtOriginError("denominator vanishes at t = 0")
    den = f.den.coeffs
    out = []
    for k in range(D + 1):
        acc = f.num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return out


def substitute_t_over_1mt(p):
    """p(t / (1 - t)) with the denominator (1 - t)^deg(p) kept explicit."""
    p = _lift(p)
    d = max(p.degree, 0)
    t = UniPoly.t()
    num = UniPoly()
    for k, c in enumerate(p.coeffs):
        if c:
            num = num + c * (t ** k) * one_minus_t_power(d - k)
    return RatFun(num, one_minus_t_power(d))
