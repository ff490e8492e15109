import json
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otarrange.arrmat import (
    FIGURE2_STEPS,
    Arrangement,
    boolean,
    build_3tree,
    circuits,
    fibre_arrangement,
    generic_arrangement,
    graphic,
    is_line_closed,
    is_modular,
    lattice_of,
    line_closed_witness,
    load,
    poincare,
    principal_truncation,
    random_3tree_steps,
    rank2_hypergraph,
    restrict,
    supersolvable_chain,
    truncation_lattice_check,
)
from otarrange.arrmat.modular import (
    modular_by_rank_identity,
    modular_by_short_circuit,
    modular_by_subspace_sum,
)
from otarrange.errors import (
    ArrangementError,
    InvalidBasepointError,
    InvalidSpecError,
    PreconditionError,
)
from otarrange.exactcore import UniPoly, exact_rank

t = UniPoly.t()


def brute_circuits(A):
    """Minimal dependent subsets by exhaustive rank computation."""
    out = []
    for k in range(2, A.rank + 2):
        for s in combinations(range(A.n), k):
            rows = [A.rows[i] for i in s]
            if exact_rank(rows) == k - 1 and all(
                exact_rank([A.rows[i] for i in s if i != j]) == k - 1 for j in s
            ):
                out.append(s)
    return out


def brute_flats(A):
    """Closed subsets by exhaustive search."""
    flats = set()
    for mask in range(1 << A.n):
        s = [i for i in range(A.n) if mask >> i & 1]
        r = exact_rank([A.rows[i] for i in s]) if s else 0
        closed = all(
            exact_rank([A.rows[i] for i in s + [j]]) > r for j in range(A.n) if j not in s
        )
        if closed:
            flats.add((frozenset(s), r))
    return flats


class TestValidation:
    def test_zero_row(self):
        with pytest.raises(ArrangementError) as e:
            Arrangement([[1, 0], [0, 0], [0, 1]])
        assert e.value.invariant == "no-zero-row"

    def test_proportional(self):
        with pytest.raises(ArrangementError) as e:
            Arrangement([[1, 0], [2, 0], [0, 1]])
        assert e.value.invariant == "simple"

    def test_not_essential(self):
        with pytest.raises(ArrangementError) as e:
            Arrangement([[1, 0, 0], [0, 1, 0]])
        assert e.value.invariant == "essential"

    def test_ragged(self):
        with pytest.raises(ArrangementError) as e:
            Arrangement([[1, 0], [0, 1, 1]])
        assert e.value.invariant == "rectangular"

    def test_json_roundtrip(self, tmp_path, X2):
        p = tmp_path / "x2.json"
        p.write_text(json.dumps({"name": "X2", "matrix": [[str(x) for x in r] for r in X2.rows]}))
        assert load(p).rows == X2.rows
        p.write_text("{not json")
        with pytest.raises(ArrangementError):
            load(p)
        p.write_text(json.dumps({"matrix": [["1/2", "0"], ["0", "3"]]}))
        assert load(p).rows[0] == (Fraction(1, 2), 0)


class TestCircuits:
    def test_boolean(self):
        assert circuits(boolean(4)) == []

    def test_pencil(self, pencil):
        (c,) = circuits(pencil)
        assert c.support == (0, 1, 2) and c.coeffs == (1, 1, -1)

    def test_a3(self, A3):
        cs = circuits(A3)
        assert sorted(len(c) for c in cs) == [3, 3, 3, 3, 4, 4, 4]

    @pytest.mark.parametrize("name", ["A3", "X3", "X2", "nonFano"])
    def test_against_brute_force(self, name):
        from otarrange.cli import catalog

        A = catalog(name)
        assert sorted(c.support for c in circuits(A)) == sorted(brute_circuits(A))
        for c in circuits(A):
            assert c.coeffs[0] == 1
            for j in range(A.dim):
                assert sum(a * A.rows[i][j] for i, a in zip(c.support, c.coeffs)) == 0


class TestLattice:
    def test_boolean2(self):
        lat = lattice_of(boolean(2))
        assert len(lat) == 4 and lat.mobius[lat.top.mask] == 1

    def test_a3_levels(self, A3):
        lat = lattice_of(A3)
        assert [len(lv) for lv in lat.levels] == [1, 6, 7, 1]
        assert sorted(len(f) for f in lat.levels[2]) == [2, 2, 2, 3, 3, 3, 3]

    def test_x3_center(self, X3):
        # x, y, x+y are rows 0, 1, 3
        assert lattice_of(X3).flat([0, 1, 3]).rank == 2

    @pytest.mark.parametrize("name", ["A3", "X3", "X2", "nonFano"])
    def test_against_brute_force(self, name):
        from otarrange.cli import catalog

        A = catalog(name)
        got = {(frozenset(f.indices), f.rank) for f in lattice_of(A)}
        assert got == brute_flats(A)

    def test_mobius_sums(self, X2):
        lat = lattice_of(X2)
        for x in lat:
            total = sum(lat.mobius[y.mask] for y in lat.below(x))
            assert total == (1 if x.rank == 0 else 0)

    def test_not_a_flat(self, A3):
        with pytest.raises(PreconditionError):
            lattice_of(A3).flat([0, 1])


class TestPoincare:
    def test_boolean(self):
        for ell in range(1, 5):
            assert poincare(boolean(ell))[0] == (1 + t) ** ell

    def test_a3(self, A3):
        pi, ppi = poincare(A3)
        assert pi == (1 + t) * (1 + 2 * t) * (1 + 3 * t)
        assert ppi == (1 + 2 * t) * (1 + 3 * t)

    def test_reference_tree(self):
        A = build_3tree(FIGURE2_STEPS)
        assert (A.n, A.rank) == (15, 8)
        assert poincare(A)[0] == (1 + t) * (1 + 2 * t) ** 7

    def test_x3(self, X3):
        assert poincare(X3)[0] == UniPoly((1, 6, 12, 7))


class TestRestrict:
    def test_hyperplane(self, A3):
        R = restrict(A3, [2])
        assert (R.n, R.rank) == (1, 1)

    def test_rank2(self, A3, X3):
        for A in (A3, X3):
            R = restrict(A, [0, 1, 3])
            assert (R.n, R.rank) == (3, 2)

    def test_bottom(self, A3):
        with pytest.raises(PreconditionError):
            restrict(A3, [])


class TestModular:
    def test_atoms(self, X3):
        for i in range(X3.n):
            assert is_modular(X3, [i]) == (True, (True, True, True))

    def test_a3_vs_x3(self, A3, X3):
        assert is_modular(A3, [0, 1, 3])[0]
        assert not is_modular(X3, [0, 1, 3])[0]

    @pytest.mark.parametrize("name", ["A3", "X3", "X2", "nonFano"])
    def test_three_criteria_agree(self, name):
        from otarrange.cli import catalog

        A = catalog(name)
        for x in lattice_of(A):
            a = modular_by_subspace_sum(A, x)
            assert a == modular_by_rank_identity(A, x) == modular_by_short_circuit(A, x)

    def test_supersolvable(self, A3, X2):
        assert supersolvable_chain(boolean(3))[1] == [1, 1, 1]
        chain, exps = supersolvable_chain(A3)
        assert exps == [1, 2, 3]
        assert [f.rank for f in chain] == [1, 2, 3]
        assert supersolvable_chain(X2) is None


class TestFibre:
    def test_a3_generic_point(self, A3):
        fib = fibre_arrangement(A3, [0, 1, 3], v=[1, 2])
        assert not fib.degenerate and fib.distinct_hyperplanes == 4
        M = fib.realization()
        assert [c.support for c in M.circuits()] == [s for s in combinations(range(4), 3)]

    def test_x3_degenerate_point(self, X3):
        fib = fibre_arrangement(X3, [0, 1, 3], v=[1, 1])
        assert fib.degenerate and fib.distinct_hyperplanes == 3

    def test_boolean_center(self):
        fib = fibre_arrangement(boolean(2), [0, 1], v=[1, 1])
        assert fib.elements == (None,) and fib.rank == 1

    def test_bad_basepoint(self, A3):
        # v = (1, 1) lies on x - y = 0
        with pytest.raises(InvalidBasepointError):
            fibre_arrangement(A3, [0, 1, 3], v=[1, 1])


class TestTruncation:
    def test_a3(self, A3):
        tr = principal_truncation(A3, [0, 1, 3])
        assert tr.labels == ("0", "3", "5", "6")
        assert tr.circuits == tuple(combinations(range(4), 3))

    def test_a3_with_x_initial(self, A3):
        # with [X] listed first, the complement sits in positions 4, 5, 6
        B = Arrangement(A3.reordered([0, 1, 3, 2, 4, 5]).rows)
        tr = principal_truncation(B, [0, 1, 2])
        assert tr.labels == ("0", "4", "5", "6")
        assert tr.circuits == tuple(combinations(range(4), 3))

    def test_x3(self, X3):
        tr = principal_truncation(X3, [0, 1, 3])
        assert tr.circuits == tuple(combinations(range(4), 3))

    def test_boolean_center(self):
        tr = principal_truncation(boolean(2), [0, 1])
        assert tr.circuits == () and tr.arrangement().rank == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_seed_independent(self, X2, seed):
        for x in lattice_of(X2):
            if 0 < x.rank < 3:
                assert (
                    principal_truncation(X2, x, seed=seed).circuits
                    == principal_truncation(X2, x, seed=99).circuits
                )

    def test_lattice_check(self, A3):
        assert truncation_lattice_check(A3, [0, 1, 3])
        assert truncation_lattice_check(A3, [2])
        assert all(truncation_lattice_check(boolean(3), x) for x in lattice_of(boolean(3)) if x.rank)
        with pytest.raises(PreconditionError):
            truncation_lattice_check(A3, [0, 5])

    @pytest.mark.parametrize("name", ["A3", "X2", "nonFano"])
    def test_pi_factorization(self, name):
        from otarrange.cli import catalog

        A = catalog(name)
        lat = lattice_of(A)
        for x in lat:
            if 0 < x.rank < A.rank and is_modular(A, x)[0]:
                pi_x = poincare(restrict(A, x))[0]
                pt = poincare(principal_truncation(A, x).arrangement())[1]
                assert poincare(A)[0] == pi_x * pt


class TestHypergraph:
    def test_boolean(self):
        g, is3, forest, triples = rank2_hypergraph(boolean(3))
        assert len(g.edges) == 0 and forest and triples == 0

    def test_a3(self, A3):
        g, is3, forest, triples = rank2_hypergraph(A3)
        assert len(g.edges) == 4 and is3 and not forest and triples == 4

    def test_reference_tree(self):
        g, is3, forest, triples = rank2_hypergraph(build_3tree(FIGURE2_STEPS))
        assert len(g.edges) == 7 and is3 and forest and triples == 7

    def test_include_pairs(self, A3):
        g, is3, _, _ = rank2_hypergraph(A3, include_pairs=True)
        assert len(g.edges) == 7 and not is3

    def test_line_closed(self, A3):
        assert is_line_closed(boolean(4))
        assert is_line_closed(A3)
        G = generic_arrangement(4, 3, seed=1)
        assert not is_line_closed(G)
        assert len(line_closed_witness(G)) == 3


class TestConstructions:
    def test_one_triangle(self):
        A = build_3tree(())
        assert (A.n, A.rank) == (3, 2)

    def test_two_triangles(self, two_triangles):
        A = two_triangles
        assert (A.n, A.rank) == (5, 3)
        assert poincare(A)[0] == (1 + t) * (1 + 2 * t) ** 2

    def test_cycle_rejected(self):
        with pytest.raises(InvalidSpecError):
            build_3tree(((1, 2),))
        with pytest.raises(InvalidSpecError):
            build_3tree((9,))

    def test_generic(self):
        G = generic_arrangement(4, 3, seed=0)
        assert all(exact_rank([G.rows[i] for i in s]) == 3 for s in combinations(range(4), 3))
        G = generic_arrangement(5, 3, seed=0)
        assert [c.support for c in circuits(G)] == list(combinations(range(5), 4))
        with pytest.raises(PreconditionError):
            generic_arrangement(3, 3)

    def test_graphic_k4_is_a3(self, A3):
        K4 = graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4)
        assert poincare(K4)[0] == poincare(A3)[0]


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_3tree_properties(triangles, seed):
    A = build_3tree(random_3tree_steps(triangles, seed))
    assert is_line_closed(A)
    _, is3, forest, triples = rank2_hypergraph(A)
    assert is3 and forest and triples == A.n - A.rank
    _, exps = supersolvable_chain(A)
    assert set(exps) <= {1, 2}
    assert not divmod(poincare(A)[0], 1 + t)[1]
