"""Closed-form Betti data for generic arrangements, checked by series algebra."""
from dataclasses import dataclass
from math import comb

from ..errors import InvariantViolation, PreconditionError
from ..exactcore import UniPoly
from .common import fragment


def q_poly(n, ell):
    """Q_{n,l}(t) = sum_p C(n-1, l+p) C(l-1+p, l-1) t^p, p < n - l."""
    if not n > ell:
        raise PreconditionError("need n > l")
    return UniPoly(comb(n - 1, ell + p) * comb(ell - 1 + p, ell - 1) for p in range(n - ell))


# Truncated multivariate series as dicts {exponent tuple: int}.

def _mul(a, b, caps):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if all(x <= c for x, c in zip(e, caps)):
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _inverse(a, caps, var):
    """1/a for a series with constant term 1, truncated at ``caps``.

    Uses 1/(1 - u) = sum u^k, where u = 1 - a has positive order in ``var``
    (so the sum terminates at caps[var]).
    """
    zero = tuple(0 for _ in caps)
    if a.get(zero) != 1:
        raise ValueError("constant term must be 1")
    u = {e: -c for e, c in a.items() if e != zero}
    if any(e[var] == 0 for e in u):
        raise ValueError("1 - a must be divisible by the chosen variable")
    out = {zero: 1}
    power = {zero: 1}
    for _ in range(caps[var]):
        power = _mul(power, u, caps)
        if not power:
            break
        out = _add(out, power)
    return out


def _inverse_by_recursion(a, caps):
    """1/a by solving a*b = 1 coefficientwise in graded-lex order."""
    zero = tuple(0 for _ in caps)
    a0 = a[zero]
    out = {}
    ranges = [range(c + 1) for c in caps]
    from itertools import product

    for e in sorted(product(*ranges), key=lambda t: (sum(t), t)):
        acc = 1 if e == zero else 0
        for ea, ca in a.items():
            if ea == zero:
                continue
            rest = tuple(x - y for x, y in zip(e, ea))
            if min(rest) >= 0:
                acc -= ca * out.get(rest, 0)
        if acc % a0:
            raise ValueError("non-integral coefficient")
        if acc:
            out[e] = acc // a0
    return out


@dataclass(frozen=True)
class BettiData:
    n: int
    ell: int
    Q: UniPoly
    P: dict
    caps: tuple

    def coefficient(self, s_deg, t_deg):
        return self.P.get((s_deg, t_deg), 0)


def _st_poly(q, s_shift, t_shift, caps):
    """s^a t^b Q(st) as an (s, t) dict."""
    out = {}
    for p, c in enumerate(q.coeffs):
        e = (p + s_shift, p + t_shift)
        if c and e[0] <= caps[0] and e[1] <= caps[1]:
            out[e] = int(c)
    return out


def betti_series(n, ell, Ds=6, Dt=8):
    """P_{n,l}(s,t) = (1 + st)^n / (1 - s^2 t^l Q(st)) truncated at (Ds, Dt), two ways."""
    q = q_poly(n, ell)
    caps = (Ds, Dt)
    num = {}
    for k in range(n + 1):
        if k <= Ds and k <= Dt:
            num[(k, k)] = comb(n, k)
    den = _add({(0, 0): 1}, {e: -c for e, c in _st_poly(q, 2, ell, caps).items()})
    p1 = _mul(num, _inverse(den, caps, 0), caps)
    p2 = _mul(num, _inverse_by_recursion(den, caps), caps)
    if p1 != p2:
        raise InvariantViolation(f"Betti series routes disagree for ({n}, {ell})")
    return p1


def extracted_q(n, ell):
    """Coefficient of x^l y^n in y/(1-y) (1-(1+t)y)/(1-(1+t+x)y), as a poly in t.

    Variables are ordered (x, y, t); t-degree never exceeds n.
    """
    caps = (ell, n, n)
    one = {(0, 0, 0): 1}
    y = {(0, 1, 0): 1}
    g1 = _mul(y, _inverse(_add(one, {(0, 1, 0): -1}), caps, 1), caps)
    g2 = _add(one, {(0, 1, 0): -1, (0, 1, 1): -1})
    g3 = _inverse(_add(one, {(0, 1, 0): -1, (0, 1, 1): -1, (1, 1, 0): -1}), caps, 1)
    g = _mul(_mul(g1, g2, caps), g3, caps)
    return UniPoly(g.get((ell, n, k), 0) for k in range(n + 1))


def generic_betti(n, ell, Ds=6, Dt=8, detail=False):
    if not n > ell >= 3:
        raise PreconditionError("need n > l >= 3")
    q = q_poly(n, ell)
    extracted = extracted_q(n, ell)
    if extracted != q:
        raise InvariantViolation(f"generating function gives {extracted}, formula gives {q}")
    data = BettiData(n, ell, q, betti_series(n, ell, Ds, Dt), (Ds, Dt))
    if not detail:
        return data
    return fragment(
        "generic-betti", {"n": n, "rank": ell, "caps": [Ds, Dt]}, True, Dt,
        {"Q": str(q), "extracted": str(extracted),
         "P": {f"s^{a} t^{b}": c for (a, b), c in sorted(data.P.items())}},
    )
