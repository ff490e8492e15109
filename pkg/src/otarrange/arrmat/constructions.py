"""Generators: Boolean, graphic, 3-tree (parallel connections of triangles), generic."""
import random
from itertools import combinations

from ..errors import GenericityFailure, InvalidSpecError, PreconditionError
from ..exactcore import exact_rank
from .arrangement import Arrangement, essentialize

# Reference 3-tree with 7 triangles (n=15, rank 8): base triangle {1,2,3};
# triangles glued at 1 and 2, two more on
# each new vertex of the first, and two on one vertex of the second.
FIGURE2_STEPS = (1, 2, 4, 5, 7, 7)


def boolean(n):
    return Arrangement(
        [[int(i == j) for j in range(n)] for i in range(n)], name=f"boolean:{n}"
    )


def graphic(edges, nvertices, name=None):
    """Graphic arrangement x_u - x_v = 0, essentialized."""
    rows = []
    for u, v in edges:
        r = [0] * nvertices
        r[u] = 1
        r[v] = -1
        rows.append(r)
    return Arrangement(essentialize(rows), name=name)


def build_3tree(steps, name=None):
    """Iterated parallel connection of triangles.

    Start from one triangle (elements 1, 2, 3).  Each step names the element
    (1-based) along which the next triangle is glued; that element's graph
    edge {u, v} gets a new vertex w and the edges {u, w}, {v, w} are appended
    as the next two elements.  A step naming two or more elements would
    close a hypergraph cycle and is rejected.
    """
    edges = [(0, 1), (1, 2), (0, 2)]
    nv = 3
    for k, step in enumerate(steps):
        glue = (step,) if isinstance(step, int) else tuple(step)
        if len(glue) == 0:
            raise InvalidSpecError(f"step {k + 1}: a triangle must share one element")
        if len(glue) > 1:
            raise InvalidSpecError(
                f"step {k + 1}: sharing {len(glue)} elements creates a hypergraph cycle"
            )
        e = glue[0]
        if not 1 <= e <= len(edges):
            raise InvalidSpecError(f"step {k + 1}: no element {e} (have {len(edges)})")
        u, v = edges[e - 1]
        edges.append((u, nv))
        edges.append((v, nv))
        nv += 1
    return graphic(edges, nv, name=name or f"3tree:{','.join(map(str, steps)) or '-'}")


def random_3tree_steps(triangles, seed):
    """Glue steps for a random 3-tree with ``triangles`` triangles."""
    rng = random.Random(seed)
    steps = []
    n = 3
    for _ in range(triangles - 1):
        steps.append(rng.randint(1, n))
        n += 2
    return steps


def generic_arrangement(n, ell, seed=0, height=10, retries=20):
    """n hyperplanes of rank ell in general position (matroid U_{ell,n})."""
    if not n > ell >= 3:
        raise PreconditionError(f"generic arrangements need n > l >= 3, got n={n}, l={ell}")
    rng = random.Random(seed)
    for _ in range(retries):
        rows = [[rng.randint(-height, height) for _ in range(ell)] for _ in range(n)]
        if all(exact_rank([rows[i] for i in s]) == ell for s in combinations(range(n), ell)):
            return Arrangement(rows, name=f"generic:{n}:{ell}:{seed}")
    raise GenericityFailure(f"no generic {n}x{ell} matrix found", seed)
