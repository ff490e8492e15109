"""Circuit relations r_c and their relative versions."""
from dataclasses import dataclass

from ..errors import PreconditionError
from ..exactcore import Monomial, MultiPoly


@dataclass(frozen=True)
class CircuitRelation:
    circuit: object
    polynomial: MultiPoly

    @property
    def degree(self):
        return len(self.circuit.support) - 1


def _product(indices):
    return Monomial.of(*indices)


def circuit_relation(c):
    """sum_i c_i prod_{j != i} y_j over the support of ``c``."""
    if len(c.support) < 3:
        raise PreconditionError(f"circuit {c.support} has fewer than 3 elements")
    terms = {}
    for i, ci in zip(c.support, c.coeffs):
        terms[_product(j for j in c.support if j != i)] = ci
    return CircuitRelation(c, MultiPoly(terms))


def relative_relation(c, i):
    """r_c if i is off the support, else the monomial prod_{j != i} y_j."""
    poly = circuit_relation(c).polynomial
    if i not in c.support:
        return poly
    return MultiPoly.monomial(_product(j for j in c.support if j != i))


def ot_generators(matroid, support=None, max_degree=None):
    """Circuit relations of a realization, optionally only circuits inside ``support``."""
    keep = None if support is None else set(support)
    out = []
    for c in matroid.circuits():
        if keep is not None and not keep.issuperset(c.support):
            continue
        if max_degree is not None and len(c.support) - 1 > max_degree:
            continue
        out.append(circuit_relation(c).polynomial)
    return out


def eliminate(generators, nvars, zero):
    """Images of ``generators`` under y_v -> 0 (v in ``zero``), variables renumbered.

    Returns ``(polys, nvars', kept)`` where ``kept[k]`` is the old index of
    new variable k.  S/(I + (y_v)) is S'/(image of I).
    """
    zero = set(zero)
    kept = [v for v in range(nvars) if v not in zero]
    mapping = {v: k for k, v in enumerate(kept)}
    polys = []
    for g in generators:
        h = g.set_zero(zero)
        if h:
            polys.append(h.rename(mapping))
    return polys, len(kept), kept
