"""Modular flats and supersolvability."""
from ..errors import InvariantViolation
from ..exactcore import UniPoly, exact_rank
from .lattice import lattice_of, poincare


def _basis(lat, x):
    cache = lat.__dict__.setdefault("_bases", {})
    b = cache.get(x.mask)
    if b is None:
        b = lat.subspace_basis(x)
        cache[x.mask] = b
    return b


def modular_by_subspace_sum(arrangement, x):
    """X + Y is an intersection subspace for every flat Y."""
    lat = lattice_of(arrangement)
    bx = _basis(lat, x)
    ell = arrangement.dim
    for y in lat:
        dim_sum = exact_rank(bx + _basis(lat, y))
        if dim_sum != ell - lat.meet(x, y).rank:
            return False
    return True


def modular_by_rank_identity(arrangement, x):
    """rank X + rank Y == rank(X v Y) + rank(X ^ Y) for every flat Y."""
    lat = lattice_of(arrangement)
    rank = arrangement.matroid.rank
    for y in lat:
        # the rank of a join is the matroid rank of the union
        if x.rank + y.rank != rank(x.mask | y.mask) + lat.meet(x, y).rank:
            return False
    return True


def modular_by_short_circuit(arrangement, x):
    """Every circuit meeting both [X] and its complement short-circuits into [X].

    For such a circuit C, some q in [X] must make (C - [X]) + q dependent.
    """
    m = arrangement.matroid
    xs = x.indices
    for c in m.circuits():
        cm = c.mask
        outside = cm & ~x.mask
        if not outside or outside == cm:
            continue
        size = bin(outside).count("1")
        if not any(m.rank(outside | (1 << q)) == size for q in xs):
            return False
    return True


def is_modular(arrangement, x):
    """Decide modularity three ways; returns (verdict, (sum, rank, short)).

    Raises InvariantViolation if the three criteria disagree.
    """
    x = lattice_of(arrangement).flat(x)
    certs = (
        modular_by_subspace_sum(arrangement, x),
        modular_by_rank_identity(arrangement, x),
        modular_by_short_circuit(arrangement, x),
    )
    if len(set(certs)) != 1:
        raise InvariantViolation(
            f"modularity criteria disagree on {list(x.indices)}: "
            f"subspace-sum={certs[0]} rank-identity={certs[1]} short-circuit={certs[2]}"
        )
    return certs[0], certs


def modular_flats(arrangement):
    """Masks of all modular flats (rank-identity criterion)."""
    lat = lattice_of(arrangement)
    cache = lat.__dict__.get("_modular")
    if cache is None:
        cache = {f.mask for f in lat if modular_by_rank_identity(arrangement, f)}
        lat.__dict__["_modular"] = cache
    return cache


def supersolvable_chain(arrangement):
    """A maximal chain of modular flats with its exponents, or None.

    Returns ``(chain, exponents)`` with ``chain[i]`` of rank i + 1.
    """
    lat = lattice_of(arrangement)
    ell = lat.rank
    known = lat.__dict__.setdefault("_modular_memo", {})
    dead = set()

    def modular(f):
        v = known.get(f.mask)
        if v is None:
            v = known[f.mask] = modular_by_rank_identity(arrangement, f)
        return v

    def search(current, chain):
        if current.rank == ell:
            return chain
        for up in lat.covers[current.mask]:
            if up.mask not in dead and modular(up):
                found = search(up, chain + [up])
                if found is not None:
                    return found
                dead.add(up.mask)
        return None

    chain = search(lat.bottom, [])
    if chain is None:
        return None
    sizes = [0] + [len(f) for f in chain]
    exponents = [b - a for a, b in zip(sizes, sizes[1:])]
    product = UniPoly((1,))
    for e in exponents:
        product = product * UniPoly((1, e))
    pi, _ = poincare(arrangement)
    if product != pi:
        raise InvariantViolation(f"exponents {exponents} do not factor {pi}")
    for f in chain:
        if not is_modular(arrangement, f)[0]:
            raise InvariantViolation(f"chain flat {list(f.indices)} is not modular")
    return chain, exponents
