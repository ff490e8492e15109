"""Broken-circuit complexes, Stanley-Reisner Hilbert functions, and the
modularity criteria phrased through them."""
from math import comb

from .arrmat import lattice_of, principal_truncation
from .arrmat.modular import is_modular
from .errors import InvariantViolation
from .kernels import nbc_faces


class SimplicialComplex:
    """Abstract simplicial complex stored as its full face set."""

    def __init__(self, vertices, faces):
        self.vertices = tuple(vertices)
        self.faces = frozenset(frozenset(f) for f in faces)
        vs = set(self.vertices)
        for f in self.faces:
            if not f <= vs:
                raise ValueError(f"face {sorted(f)} uses vertices outside the vertex set")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __contains__(self, face):
        return frozenset(face) in self.faces

    def __le__(self, other):
        return self.faces <= other.faces

    @property
    def f_vector(self):
        """Counts of faces by cardinality, starting with the empty face."""
        top = max((len(f) for f in self.faces), default=-1)
        out = [0] * (top + 1)
        for f in self.faces:
            out[len(f)] += 1
        return out

    @property
    def max_face_size(self):
        return len(self.f_vector) - 1

    def facets(self):
        fs = sorted(self.faces, key=len, reverse=True)
        out = []
        for f in fs:
            if not any(f < g for g in out):
                out.append(f)
        return sorted(tuple(sorted(f)) for f in out)

    def is_pure(self):
        sizes = {len(f) for f in self.facets()}
        return len(sizes) <= 1

    def is_closed(self):
        return all(f - {v} in self.faces for f in self.faces for v in f)

    def restrict(self, vertices):
        vs = frozenset(vertices)
        return SimplicialComplex(
            [v for v in self.vertices if v in vs], [f for f in self.faces if f <= vs]
        )

    def join(self, other):
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join needs disjoint vertex sets")
        return SimplicialComplex(
            self.vertices + other.vertices, [a | b for a in self.faces for b in other.faces]
        )

    def cone(self, apex):
        return SimplicialComplex(
            (apex,) + self.vertices, list(self.faces) + [f | {apex} for f in self.faces]
        )

    def relabel(self, mapping):
        return SimplicialComplex(
            [mapping[v] for v in self.vertices], [{mapping[v] for v in f} for f in self.faces]
        )

    def __repr__(self):
        return f"SimplicialComplex(vertices={len(self.vertices)}, f={self.f_vector})"


def _nbc_sets(arrangement, order):
    n = arrangement.n
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the hyperplane indices")
    pos = {e: k for k, e in enumerate(order)}
    by_max = [[] for _ in range(n)]
    for c in arrangement.matroid.circuits():
        ps = sorted(pos[i] for i in c.support)
        broken = 0
        for p in ps[1:]:
            broken |= 1 << p
        by_max[ps[-1]].append(broken)
    masks = nbc_faces(n, by_max, arrangement.rank)
    faces = []
    for m in masks:
        faces.append(frozenset(order[k] for k in range(n) if (m >> k) & 1))
    return order, faces


def bc_complex(arrangement, order=None):
    """Complex of subsets containing no broken circuit (``order`` least first)."""
    order, faces = _nbc_sets(arrangement, order)
    cx = SimplicialComplex(order, faces)
    ell = arrangement.rank
    if any(len(f) != ell for f in cx.facets()):
        raise InvariantViolation(f"bc complex is not pure with facets of size {ell}")
    return cx


def reduced_bc_complex(arrangement, order=None):
    """bc_0: nbc sets avoiding the least element; bc is the cone over it."""
    order, faces = _nbc_sets(arrangement, order)
    e = order[0]
    reduced = SimplicialComplex(order[1:], [f for f in faces if e not in f])
    full = SimplicialComplex(order, faces)
    if reduced.cone(e) != full:
        raise InvariantViolation("bc complex is not the cone over the reduced complex")
    ell = arrangement.rank
    if any(len(f) != ell - 1 for f in reduced.facets()):
        raise InvariantViolation(f"reduced bc complex is not pure with facets of size {ell - 1}")
    return reduced


def sr_hilbert(cx, D):
    """Hilbert function of the Stanley-Reisner ring in degrees 0..D."""
    f = cx.f_vector
    out = [1]
    for d in range(1, D + 1):
        out.append(sum(f[i] * comb(d - 1, i - 1) for i in range(1, len(f))))
    return out


def initial_order(arrangement, x):
    """Ground order with [X] first, each block in index order."""
    return list(x.indices) + [i for i in range(arrangement.n) if i not in x]


def truncation_reduced_complex(arrangement, x, trunc=None, seed=0):
    """bc_0(T_X(A)) with element 0 least, relabelled to original indices.

    The new element 0 is dropped by bc_0, so every vertex is an original
    hyperplane outside [X].
    """
    if trunc is None:
        trunc = principal_truncation(arrangement, x, seed=seed)
    tarr = trunc.arrangement()
    rest = [i for i in range(arrangement.n) if i not in x]
    position = {e: k for k, e in enumerate(trunc.elements) if e is not None}
    order = [0] + [position[i] for i in rest]
    red = reduced_bc_complex(tarr, order)
    return red.relabel({k: trunc.elements[k] for k in red.vertices}), trunc


def bc_modular_check(arrangement, x, seed=0):
    """(bc_0(T_X) subset of bc|rest, equality, modularity); equality must match modularity."""
    x = lattice_of(arrangement).flat(x)
    rest = [i for i in range(arrangement.n) if i not in x]
    delta = bc_complex(arrangement, initial_order(arrangement, x)).restrict(rest)
    delta0, _ = truncation_reduced_complex(arrangement, x, seed=seed)
    sub = delta0 <= delta
    equal = delta0 == delta
    modular = is_modular(arrangement, x)[0]
    if not sub:
        raise InvariantViolation(f"bc_0(T_X) is not a subcomplex of bc|rest for X={list(x.indices)}")
    if equal != modular:
        raise InvariantViolation(
            f"bc equality {equal} disagrees with modularity {modular} for X={list(x.indices)}"
        )
    return sub, equal, modular


def join_decomposition_check(arrangement, x):
    """Does bc(A) split as bc|[X] * bc|rest (with [X] first in the order)?"""
    x = lattice_of(arrangement).flat(x)
    rest = [i for i in range(arrangement.n) if i not in x]
    bc = bc_complex(arrangement, initial_order(arrangement, x))
    joined = bc.restrict(x.indices).join(bc.restrict(rest))
    return bc == joined
