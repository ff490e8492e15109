"""Fibre arrangements A_{v,X} and complete principal truncations T_X."""
import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import GenericityFailure, InvalidBasepointError, PreconditionError
from ..exactcore import nullspace
from ..exactcore.linalg import rref
from .arrangement import Arrangement, primitive
from .lattice import lattice_of
from .matroid import Realization, bits
from .modular import is_modular


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def quotient_coordinates(arrangement, x):
    """Pivot columns J such that K^J is a complement of X in V."""
    _, piv = rref([arrangement.rows[i] for i in x.indices])
    return piv


@dataclass(frozen=True)
class FibreArrangement:
    """Rows indexed by {0} + ([n] - [X]); row 0 is the coordinate t."""

    base: object
    basepoint: tuple
    lift: tuple
    elements: tuple
    labels: tuple
    rows: tuple
    parallel_classes: tuple

    @property
    def degenerate(self):
        return any(len(c) > 1 for c in self.parallel_classes)

    @property
    def distinct_hyperplanes(self):
        return len(self.parallel_classes)

    @property
    def rank(self):
        return len(self.rows[0])

    def realization(self):
        return Realization(self.rows)

    def arrangement(self):
        """The fibre as an Arrangement; only valid for non-degenerate fibres."""
        if self.degenerate:
            raise PreconditionError("degenerate fibre has parallel hyperplanes")
        return Arrangement(self.rows, labels=self.labels, name="fibre", check=True)


def _random_point(rng, k, height):
    return [Fraction(rng.randint(-height, height)) for _ in range(k)]


def fibre_arrangement(arrangement, x, v="random", seed=0, height=10):
    """A_{v,X}; ``v`` is a point of V/X in the pivot-column coordinates.

    With ``v="random"`` a valid basepoint is drawn from ``seed``.
    """
    lat = lattice_of(arrangement)
    x = lat.flat(x)
    if x.rank == 0:
        raise PreconditionError("fibre arrangements need a flat of positive rank")
    cols = quotient_coordinates(arrangement, x)
    rows_x = [arrangement.rows[i] for i in x.indices]
    if isinstance(v, str):
        if v != "random":
            raise ValueError(f"unknown basepoint spec {v!r}")
        rng = random.Random(seed)
        for _ in range(1000):
            cand = _random_point(rng, len(cols), height)
            if all(_dot(r, _embed(cand, cols, arrangement.dim)) != 0 for r in rows_x):
                v = cand
                break
        else:
            raise GenericityFailure("no basepoint off the hyperplanes of A_X", seed)
    v = tuple(Fraction(a) for a in v)
    if len(v) != len(cols):
        raise InvalidBasepointError(f"basepoint needs {len(cols)} coordinates, got {len(v)}")
    lift = _embed(v, cols, arrangement.dim)
    for i in x.indices:
        if _dot(arrangement.rows[i], lift) == 0:
            raise InvalidBasepointError(
                f"basepoint lies on hyperplane {arrangement.labels[i]} of A_X"
            )
    xbasis = nullspace(rows_x, arrangement.dim)
    others = [i for i in range(arrangement.n) if i not in x]
    rows = [tuple([Fraction(1)] + [Fraction(0)] * len(xbasis))]
    for i in others:
        f = arrangement.rows[i]
        rows.append(tuple([_dot(f, lift)] + [_dot(f, b) for b in xbasis]))
    classes = {}
    for k, r in enumerate(rows):
        classes.setdefault(primitive(r), []).append(k)
    return FibreArrangement(
        base=x,
        basepoint=v,
        lift=tuple(lift),
        elements=(None, *others),
        labels=("0", *(arrangement.labels[i] for i in others)),
        rows=tuple(rows),
        parallel_classes=tuple(tuple(c) for c in classes.values()),
    )


def _embed(v, cols, dim):
    out = [Fraction(0)] * dim
    for a, c in zip(v, cols):
        out[c] = Fraction(a)
    return out


def count_independent_sets(realization):
    n = realization.n
    count = 0
    stack = [0]
    # independent sets are closed under subsets: grow by larger elements only
    while stack:
        mask = stack.pop()
        count += 1
        top = mask.bit_length()
        for j in range(top, n):
            new = mask | (1 << j)
            if realization.is_independent(new):
                stack.append(new)
    return count


@dataclass(frozen=True)
class Truncation:
    """T_X(M(A)) realized by a generic fibre; element 0 is the new element."""

    base: object
    fibre: FibreArrangement
    circuits: tuple
    samples: int
    majority: int
    height: int

    @property
    def witness(self):
        return self.fibre.basepoint

    @property
    def labels(self):
        return self.fibre.labels

    @property
    def elements(self):
        return self.fibre.elements

    def arrangement(self):
        return self.fibre.arrangement()

    def circuit_labels(self):
        return [tuple(self.labels[k] for k in c) for c in self.circuits]


def principal_truncation(arrangement, x, samples=7, seed=0, max_retries=6):
    """Matroid of the fibre at a generic point, certified by majority vote.

    Results are memoized per (flat, samples, seed) on the arrangement.
    """
    lat = lattice_of(arrangement)
    x = lat.flat(x)
    cache = arrangement.__dict__.setdefault("_truncations", {})
    key = (x.mask, samples, seed, max_retries)
    if key not in cache:
        cache[key] = _principal_truncation(arrangement, x, samples, seed, max_retries)
    return cache[key]


def _principal_truncation(arrangement, x, samples, seed, max_retries):
    if x.rank == 0:
        raise PreconditionError("truncation needs a flat of positive rank")
    rng = random.Random(seed)
    height = 10
    for _ in range(max_retries):
        tally = {}
        for _ in range(samples):
            fib = fibre_arrangement(arrangement, x, "random", seed=rng.randrange(2**62), height=height)
            real = fib.realization()
            key = tuple(real.circuit_supports())
            entry = tally.get(key)
            if entry is None:
                tally[key] = [1, count_independent_sets(real), fib]
            else:
                entry[0] += 1
        key, (hits, _, fib) = max(tally.items(), key=lambda kv: kv[1][1])
        if 2 * hits > samples:
            return Truncation(x, fib, key, samples, hits, height)
        height *= 2
    raise GenericityFailure(
        f"no majority matroid for the truncation at {list(x.indices)}", seed
    )


def truncation_lattice_check(arrangement, x, samples=7, seed=0):
    """Compare L(T_X) with {Y : X ^ Y = bottom or X <= Y} and its rank rule."""
    lat = lattice_of(arrangement)
    x = lat.flat(x)
    if not is_modular(arrangement, x)[0]:
        raise PreconditionError(f"flat {list(x.indices)} is not modular")
    trunc = principal_truncation(arrangement, x, samples=samples, seed=seed)
    elements = trunc.elements
    position = {e: k for k, e in enumerate(elements) if e is not None}
    expected = set()
    for y in lat:
        if x.mask & y.mask == 0:
            expected.add((frozenset(position[i] for i in y.indices), y.rank))
        elif x <= y:
            members = {0} | {position[i] for i in y.indices if i not in x}
            expected.add((frozenset(members), y.rank - x.rank + 1))
    tlat = lattice_of(trunc.arrangement())
    actual = {(frozenset(f.indices), f.rank) for f in tlat}
    return actual == expected
