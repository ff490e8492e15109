"""Arrangements as rational realization matrices, plus JSON I/O."""
import json
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from ..errors import ArrangementError
from ..exactcore import exact_rank, format_rational, parse_rational
from ..exactcore.linalg import rref


def primitive(vec):
    """Integer multiple of ``vec`` with coprime entries, first nonzero > 0."""
    if all(type(x) is int for x in vec):
        ints = list(vec)
    else:
        fr = [Fraction(x) for x in vec]
        m = lcm(*(x.denominator for x in fr)) if fr else 1
        ints = [int(x * m) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    first = next(x for x in ints if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in ints)


def essentialize(rows):
    """Express rows in coordinates of the quotient by their common kernel.

    Keeps a maximal independent set of columns, so integer input stays
    integer: restricting to those columns is an isomorphism on the row span.
    """
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return []
    _, colpiv = rref(rows)
    return [[r[c] for c in colpiv] for r in rows]


class Arrangement:
    """Central essential arrangement given by an n x l rational matrix.

    Row i is the linear form f_i; hyperplanes are indexed 0..n-1 internally
    and carry display labels (default "1".."n").
    """

    def __init__(self, matrix, labels=None, name=None, provenance=None, check=True):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in matrix)
        self.rows = rows
        self.n = len(rows)
        self.dim = len(rows[0]) if rows else 0
        self.labels = tuple(str(x) for x in labels) if labels is not None else tuple(
            str(i + 1) for i in range(self.n)
        )
        self.name = name
        self.provenance = provenance
        if check:
            self._validate()

    def _validate(self):
        if self.n == 0:
            raise ArrangementError("nonempty", "an arrangement needs at least one hyperplane")
        for i, r in enumerate(self.rows):
            if len(r) != self.dim:
                raise ArrangementError("rectangular", f"row {i + 1} has length {len(r)}, expected {self.dim}")
        if len(self.labels) != self.n:
            raise ArrangementError("labels", "one label per hyperplane is required")
        seen = {}
        for i, r in enumerate(self.rows):
            if all(x == 0 for x in r):
                raise ArrangementError("no-zero-row", f"row {i + 1} is zero")
            key = primitive(r)
            if key in seen:
                raise ArrangementError(
                    "simple", f"rows {seen[key] + 1} and {i + 1} are proportional"
                )
            seen[key] = i
        if exact_rank(self.rows) != self.dim:
            raise ArrangementError(
                "essential", f"rank {exact_rank(self.rows)} is less than the dimension {self.dim}"
            )

    @property
    def rank(self):
        """The rank l (equal to the ambient dimension, by essentiality)."""
        return self.dim

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Arrangement) and self.rows == other.rows and self.labels == other.labels

    def __hash__(self):
        return hash((self.rows, self.labels))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Arrangement{tag} n={self.n} rank={self.rank}>"

    @cached_property
    def matroid(self):
        from .matroid import Realization

        return Realization(self.rows)

    def subarrangement(self, indices, labels=None):
        """Rows ``indices`` kept in the same ambient space (maybe not essential)."""
        idx = list(indices)
        return [self.rows[i] for i in idx], [self.labels[i] for i in idx]

    def reordered(self, order):
        """Same arrangement with rows listed in ``order``."""
        order = list(order)
        return Arrangement(
            [self.rows[i] for i in order],
            labels=[self.labels[i] for i in order],
            name=self.name,
            provenance=self.provenance,
            check=False,
        )

    def to_json(self):
        out = {"matrix": [[format_rational(x) for x in r] for r in self.rows]}
        if self.name:
            out["name"] = self.name
        if self.labels != tuple(str(i + 1) for i in range(self.n)):
            out["labels"] = list(self.labels)
        return out

    def summary(self):
        return {"name": self.name, "n": self.n, "rank": self.rank, "labels": list(self.labels)}


def from_json(data):
    if not isinstance(data, dict) or "matrix" not in data:
        raise ArrangementError("schema", "expected an object with a 'matrix' field")
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ArrangementError("schema", "'matrix' must be a list of rows")
    try:
        rows = [[parse_rational(x) for x in r] for r in matrix]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ArrangementError("schema", f"bad matrix entry: {exc}") from None
    return Arrangement(rows, labels=data.get("labels"), name=data.get("name"))


def load(path):
    """Read and validate an arrangement JSON file."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ArrangementError("json", str(exc)) from None
    return from_json(data)


def dump(arrangement, path):
    with open(path, "w") as fh:
        json.dump(arrangement.to_json(), fh, indent=2)
