"""The hypergraph of rank-2 flats and the line-closed property."""
from dataclasses import dataclass

from ..errors import PreconditionError
from ..kernels import first_line_closed_nonflat
from .lattice import lattice_of
from .matroid import bits

MAX_EXHAUSTIVE = 16


@dataclass(frozen=True)
class Hypergraph3:
    vertices: int
    edges: tuple

    def is_acyclic(self):
        """Berge-acyclic: the vertex/edge incidence graph is a forest."""
        parent = list(range(self.vertices + len(self.edges)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for k, e in enumerate(self.edges):
            node = self.vertices + k
            for v in e:
                ra, rb = find(v), find(node)
                if ra == rb:
                    return False
                parent[ra] = rb
        return True

    def components(self):
        seen = {}
        comps = []
        for e in self.edges:
            hit = {seen[v] for v in e if v in seen}
            merged = set(e)
            for c in hit:
                merged |= comps[c]
                comps[c] = set()
            comps.append(merged)
            for v in merged:
                seen[v] = len(comps) - 1
        return [c for c in comps if c]


def rank2_hypergraph(arrangement, include_pairs=False):
    """Return (G(A), is_3graph, is_3forest, triple_count).

    Edges are the rank-2 flats with at least 3 hyperplanes unless
    ``include_pairs`` is set, which keeps every rank-2 flat.
    """
    lat = lattice_of(arrangement)
    level = lat.levels[2] if lat.rank >= 2 else []
    edges = tuple(f.indices for f in level if include_pairs or len(f) >= 3)
    g = Hypergraph3(arrangement.n, edges)
    is3 = all(len(e) == 3 for e in edges)
    for f in level:
        assert len(f) == 1 + lat.mobius[f.mask], "rank-2 Moebius value"
    triples = sum(1 for f in level if len(f) == 3)
    return g, is3, is3 and g.is_acyclic(), triples


def _line_closed_tables(arrangement):
    """Pairwise closures (flattened n x n) and the flat indicator over all masks."""
    n = arrangement.n
    lat = lattice_of(arrangement)
    is_flat = bytearray(1 << n)
    for f in lat:
        is_flat[f.mask] = 1
    pair = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            if i != j:
                pair[i * n + j] = lat.closure((1 << i) | (1 << j)).mask
    return pair, is_flat


def line_closed_witness(arrangement):
    """A line-closed set that is not a flat (as an index tuple), or None."""
    n = arrangement.n
    if n > MAX_EXHAUSTIVE:
        raise PreconditionError(f"exhaustive line-closure sweep limited to n <= {MAX_EXHAUSTIVE}")
    pair, is_flat = _line_closed_tables(arrangement)
    s = first_line_closed_nonflat(n, pair, is_flat)
    return None if s < 0 else tuple(bits(s))


def is_line_closed(arrangement):
    return line_closed_witness(arrangement) is None
