"""Arrangements, their matroids and lattices, and constructive generators."""
from ..errors import ArrangementError
from .arrangement import Arrangement, dump, essentialize, from_json, load
from .constructions import (
    FIGURE2_STEPS,
    boolean,
    build_3tree,
    generic_arrangement,
    graphic,
    random_3tree_steps,
)
from .fibre import (
    FibreArrangement,
    Truncation,
    fibre_arrangement,
    principal_truncation,
    truncation_lattice_check,
)
from .hypergraph import Hypergraph3, is_line_closed, line_closed_witness, rank2_hypergraph
from .lattice import Flat, FlatLattice, flats_lattice, lattice_of, poincare, restrict
from .matroid import Circuit, Realization, bits, to_mask
from .modular import is_modular, modular_flats, supersolvable_chain


def circuits(arrangement):
    """All circuits with normalized coefficients, ordered by (size, support)."""
    return list(arrangement.matroid.circuits())


__all__ = [
    "Arrangement",
    "Circuit",
    "FibreArrangement",
    "Flat",
    "FlatLattice",
    "FIGURE2_STEPS",
    "Hypergraph3",
    "Realization",
    "Truncation",
    "bits",
    "boolean",
    "build_3tree",
    "circuits",
    "dump",
    "essentialize",
    "fibre_arrangement",
    "flats_lattice",
    "from_json",
    "generic_arrangement",
    "graphic",
    "is_line_closed",
    "is_modular",
    "lattice_of",
    "line_closed_witness",
    "load",
    "modular_flats",
    "poincare",
    "principal_truncation",
    "random_3tree_steps",
    "rank2_hypergraph",
    "restrict",
    "supersolvable_chain",
    "to_mask",
    "truncation_lattice_check",
]
