"""Named arrangements, hard-coded in the factor order of their defining polynomials."""
import os
from dataclasses import dataclass

from ..arrmat import FIGURE2_STEPS, Arrangement, boolean, build_3tree, generic_arrangement
from ..arrmat import load as load_json
from ..errors import InvalidSpecError, UnknownCatalogName


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matrix: tuple
    provenance: str


# coordinates (x, y, z)
FIXED = {
    "A3": CatalogEntry(
        "A3",
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)),
        "braid arrangement xyz(x-y)(x-z)(y-z)",
    ),
    "X3": CatalogEntry(
        "X3",
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
        "xyz(x+y)(x+z)(y+z), same Poincare polynomial as A3, not supersolvable",
    ),
    "X2": CatalogEntry(
        "X2",
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, -1), (0, 1, -1), (1, 1, -2)),
        "xyz(x+y)(x-z)(y-z)(x+y-2z), quadratic but not Koszul",
    ),
    "nonFano": CatalogEntry(
        "nonFano",
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 1, -1)),
        "non-Fano arrangement xyz(x-y)(x-z)(y-z)(x+y-z): 2-formal, not quadratic",
    ),
}

PATTERNS = ("boolean:n", "3tree:spec", "generic:n:l:seed")


def names():
    """Fixed names followed by the parametric patterns."""
    return list(FIXED) + list(PATTERNS)


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise UnknownCatalogName(f"{what} must be an integer, got {text!r}") from None


def parse_3tree_spec(spec):
    """'figure2', '-' (one triangle) or comma-separated glue elements."""
    if spec == "figure2":
        return FIGURE2_STEPS
    if spec in ("", "-"):
        return ()
    steps = []
    for part in spec.split(","):
        glue = [_int(x, "3tree step") for x in part.split("+")]
        steps.append(glue[0] if len(glue) == 1 else tuple(glue))
    return tuple(steps)


def catalog(name):
    if name in FIXED:
        e = FIXED[name]
        return Arrangement(e.matrix, name=e.name, provenance=e.provenance)
    head, _, rest = name.partition(":")
    if head == "boolean" and rest:
        A = boolean(_int(rest, "boolean size"))
        A.provenance = "Boolean arrangement (coordinate hyperplanes)"
        return A
    if head == "3tree":
        try:
            A = build_3tree(parse_3tree_spec(rest), name=name)
        except InvalidSpecError as exc:
            raise UnknownCatalogName(f"bad 3-tree spec {rest!r}: {exc}") from None
        A.provenance = "iterated parallel connection of triangles (a 3-tree)"
        return A
    if head == "generic":
        parts = rest.split(":")
        if len(parts) != 3:
            raise UnknownCatalogName(f"expected generic:n:l:seed, got {name!r}")
        n, ell, seed = (_int(p, "generic parameter") for p in parts)
        A = generic_arrangement(n, ell, seed)
        A.provenance = "random integer matrix in general position"
        return A
    raise UnknownCatalogName(f"unknown catalog name {name!r}; known: {', '.join(names())}")


def resolve(token):
    """A path to an existing JSON file, else a catalog name."""
    if os.path.exists(token):
        return load_json(token)
    return catalog(token)
