"""Intersection lattice, Moebius function, Poincare polynomial, restriction."""
from dataclasses import dataclass, field
from functools import cached_property

from ..errors import PreconditionError
from ..exactcore import UniPoly, nullspace
from .arrangement import Arrangement, essentialize
from .matroid import bits, to_mask


@dataclass(frozen=True)
class Flat:
    """A flat, identified with the set [X] of hyperplanes containing it."""

    mask: int
    rank: int
    indices: tuple = field(compare=False)

    def __contains__(self, i):
        return bool((self.mask >> i) & 1)

    def __len__(self):
        return len(self.indices)

    def __le__(self, other):
        return self.mask & ~other.mask == 0


class FlatLattice:
    def __init__(self, arrangement):
        self.arrangement = arrangement
        self.matroid = arrangement.matroid
        levels, covers = self.matroid.flats()
        self.levels = [[Flat(m, r, tuple(bits(m))) for m in lvl] for r, lvl in enumerate(levels)]
        self.by_mask = {f.mask: f for lvl in self.levels for f in lvl}
        self.covers = {m: [self.by_mask[g] for g in ups] for m, ups in covers.items()}
        self.mobius = self._mobius()

    @property
    def rank(self):
        return len(self.levels) - 1

    @property
    def bottom(self):
        return self.levels[0][0]

    @property
    def top(self):
        return self.levels[-1][0]

    def __iter__(self):
        for lvl in self.levels:
            yield from lvl

    def __len__(self):
        return len(self.by_mask)

    def _mobius(self):
        mu = {0: 1}
        done = [(0, 1)]
        for lvl in self.levels[1:]:
            new = []
            for f in lvl:
                m = f.mask
                val = -sum(v for g, v in done if g & ~m == 0)
                mu[m] = val
                new.append((m, val))
            done.extend(new)
        return mu

    def flat(self, indices):
        """The flat with exactly these hyperplanes; raises if not closed."""
        if isinstance(indices, Flat):
            return indices
        m = to_mask(indices)
        f = self.by_mask.get(m)
        if f is None:
            raise PreconditionError(f"{sorted(indices)} is not a flat")
        return f

    def closure(self, mask):
        if mask in self.by_mask:
            return self.by_mask[mask]
        return self.by_mask[self.matroid.closure(mask)]

    def join(self, x, y):
        return self.closure(x.mask | y.mask)

    def meet(self, x, y):
        return self.by_mask[x.mask & y.mask]

    def below(self, x):
        return [f for f in self if f.mask & ~x.mask == 0]

    def subspace_basis(self, x):
        """Basis of X as a subspace of V (dimension l - rank)."""
        rows = [self.arrangement.rows[i] for i in x.indices]
        return nullspace(rows, self.arrangement.dim)


def lattice_of(arrangement):
    """FlatLattice of an arrangement, memoized on the (immutable) arrangement."""
    lat = arrangement.__dict__.get("_lattice")
    if lat is None:
        lat = FlatLattice(arrangement)
        arrangement.__dict__["_lattice"] = lat
    return lat


flats_lattice = lattice_of


def poincare(arrangement):
    """Return (pi(A, t), pi(PA, t)) where pi(PA, t) = pi(A, t) / (1 + t)."""
    lat = lattice_of(arrangement)
    coeffs = [0] * (lat.rank + 1)
    for f in lat:
        coeffs[f.rank] += lat.mobius[f.mask] * (-1) ** f.rank
    pi = UniPoly(coeffs)
    q, r = divmod(pi, UniPoly((1, 1)))
    if r:
        raise AssertionError(f"1 + t does not divide {pi}")
    return pi, q


def restrict(arrangement, x):
    """The subarrangement A_X realized in V / X."""
    lat = lattice_of(arrangement)
    x = lat.flat(x) if not isinstance(x, Flat) else x
    if x.rank == 0:
        raise PreconditionError("the bottom flat has an empty subarrangement")
    rows = essentialize([arrangement.rows[i] for i in x.indices])
    return Arrangement(
        rows,
        labels=[arrangement.labels[i] for i in x.indices],
        name=f"{arrangement.name or 'A'}_X",
        check=False,
    )
