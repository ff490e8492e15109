"""Verification engines for the Hilbert-series, Groebner, Fitting,
factorization and presentation statements about I(A)."""
from itertools import combinations, permutations

from ..arrmat import is_modular, lattice_of, poincare, principal_truncation
from ..errors import ConventionMismatch, InvariantViolation, PreconditionError
from ..exactcore import Monomial, MultiPoly, TermOrder, UniPoly, exact_rank
from ..exactcore.linalg import rref
from ..nbc import bc_complex, sr_hilbert
from .common import arr_inputs, convolve, flat_of, fragment, ot_view, pi_of, terao_series
from .graded import GradedIdealView, degree_monomials
from .relations import circuit_relation, eliminate, ot_generators


def _ret(detail, frag):
    return frag if detail else frag["verdict"]


def terao_check(A, D=None, detail=False):
    """Hilbert function of S/I(A) against pi(A, t/(1-t)) through degree D."""
    D = A.n if D is None else D
    got = ot_view(A, D).hilbert()
    want = terao_series(pi_of(A), D)
    frag = fragment(
        "terao", arr_inputs(A), got == want, D,
        {"hilbert": got, "expected": want, "pi": str(pi_of(A))},
    )
    return _ret(detail, frag)


def relative_view(A, zero, D, order=None):
    """View of S/(I(A) + (y_v : v in zero)) in the surviving variables."""
    gens, m, kept = eliminate(ot_generators(A.matroid, max_degree=D), A.n, zero)
    return GradedIdealView(gens, D, m, order), kept


def relative_hilbert_check(A, H, D=None, detail=False):
    """OT_H(A) against pi(PA, t/(1-t)), plus h(OT) = h(OT_H) / (1 - t)."""
    D = A.n if D is None else D
    view, _ = relative_view(A, [H], D)
    got = view.hilbert()
    want = terao_series(poincare(A)[1], D)
    full = ot_view(A, D).hilbert()
    partial = [sum(got[: d + 1]) for d in range(D + 1)]
    frag = fragment(
        "relative", arr_inputs(A, hyperplane=A.labels[H]),
        got == want and full == partial, D,
        {"hilbert": got, "expected": want, "exact_sequence": full == partial},
    )
    return _ret(detail, frag)


def broken_circuit_monomial(circuit, ground_order):
    pos = {e: k for k, e in enumerate(ground_order)}
    least = min(circuit.support, key=pos.__getitem__)
    return Monomial.of(*(j for j in circuit.support if j != least))


def groebner_degree_check(A, order=None, D=None, detail=False):
    """Circuit relations as a Groebner basis, certified degree by degree.

    (a) lt(r_C) is the broken-circuit monomial for the paired ground order;
    (b) the leading-term ideal M and I(A) have the same initial monomials
        in each degree <= D; (c) S/M has the Hilbert function of bc(A).
    """
    order = order or TermOrder.lex_descending(A.n)
    D = max(A.rank + 2, 6) if D is None else D
    ground = order.ground_order()
    leads = []
    for c in A.matroid.circuits():
        r = circuit_relation(c).polynomial
        lt, _ = r.leading_term(order)
        want = broken_circuit_monomial(c, ground)
        if lt != want:
            raise ConventionMismatch(
                f"circuit {c.support}: leading term {lt}, broken circuit monomial {want}"
            )
        if lt.degree <= D:
            leads.append(MultiPoly.monomial(lt))
    ideal = ot_view(A, D, order)
    mono = GradedIdealView(leads, D, A.n, order)
    same = all(set(ideal.pivots[d]) == set(mono.pivots[d]) for d in range(D + 1))
    sr = sr_hilbert(bc_complex(A, ground), D)
    sr_ok = mono.hilbert() == sr
    frag = fragment(
        "groebner", arr_inputs(A, order=order.kind, priority=list(order.priority)),
        same and sr_ok, D,
        {"ideal_dims": ideal.ideal_dims(), "lead_dims": mono.ideal_dims(),
         "initial_sets_equal": same, "sr_hilbert": sr},
    )
    return _ret(detail, frag)


def relative_initial_check(A, k, D=None, detail=False):
    """S/((y_1..y_{k-1}) + I(A)) against the face ring of bc(A) restricted to {k..n}.

    Besides the Hilbert function, the initial monomials of the eliminated
    ideal (lex, y_n largest) are compared with the non-faces of bc|_{k..n}.
    """
    if not 1 <= k <= A.n:
        raise PreconditionError(f"k must lie in 1..{A.n}")
    D = A.n if D is None else D
    view, kept = relative_view(A, range(k - 1), D)
    cx = bc_complex(A).restrict(kept)
    want = sr_hilbert(cx, D)
    got = view.hilbert()
    initial_ok = True
    for d in range(D + 1):
        ms = view.monomials(d)
        nonfaces = {
            j for j, e in enumerate(ms)
            if frozenset(kept[v] for v, x in enumerate(e) if x) not in cx
        }
        if nonfaces != set(view.pivots[d]):
            initial_ok = False
            break
    frag = fragment(
        "relative-initial", arr_inputs(A, k=k), got == want and initial_ok, D,
        {"hilbert": got, "expected": want, "initial_ideal_matches": initial_ok},
    )
    return _ret(detail, frag)


def _det(m):
    k = len(m)
    total = MultiPoly()
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = MultiPoly.constant(-1 if inv % 2 else 1)
        for r, c in enumerate(perm):
            term = term * m[r][c]
            if not term:
                break
        total = total + term
    return total


def span_rank(polys):
    monos = sorted({m for p in polys for m in p.terms}, key=lambda m: m.exps)
    if not monos:
        return 0
    return exact_rank([[p.coefficient(m) for m in monos] for p in polys])


class FittingMatrix:
    """(n_X - 1) x rank(X) matrix of linear forms in y attached to a flat."""

    def __init__(self, A, x):
        self.flat = x
        basis, piv = rref([A.rows[i] for i in x.indices])
        self.coords = piv
        idx = x.indices
        last = idx[-1]
        self.rows = []
        for i in idx[:-1]:
            self.rows.append([
                MultiPoly.variable(i) * A.rows[i][c] - MultiPoly.variable(last) * A.rows[last][c]
                for c in piv
            ])

    def minors(self):
        k = len(self.coords)
        return [_det([self.rows[r] for r in rs]) for rs in combinations(range(len(self.rows)), k)]


def fitting_check(A, x, detail=False):
    """Maximal minors of the Fitting matrix span the relations of circuits spanning X.

    Witnesses also record the structure that always holds: the minor on
    rows R is a scalar multiple of y_{T-C} r_C, where T = R + {last} and C
    is the unique circuit inside T (zero when T has rank < k).  When X has
    dependent subflats of lower rank, such products make the minor span
    strictly larger than the span of the r_C with cl(C) = [X].
    """
    x = flat_of(A, x)
    k = x.rank
    if len(x) <= k:
        raise PreconditionError(f"flat {list(x.indices)} is independent")
    fm = FittingMatrix(A, x)
    idx = x.indices
    circuits = [c for c in A.matroid.circuits() if set(c.support) <= set(idx)]
    structure_ok = True
    extra = []
    minors = []
    for rs, minor in zip(combinations(range(len(idx) - 1), k), fm.minors()):
        t = {idx[r] for r in rs} | {idx[-1]}
        inside = [c for c in circuits if set(c.support) <= t]
        if A.matroid.rank(sum(1 << i for i in t)) < k:
            structure_ok &= not minor
            continue
        (c,) = inside
        expected = MultiPoly.monomial(Monomial.of(*(t - set(c.support)))) * circuit_relation(c).polynomial
        structure_ok &= span_rank([minor, expected]) == 1
        if len(c.support) < k + 1:
            extra.append([A.labels[i] for i in sorted(t)])
        minors.append(minor)
    rels = [circuit_relation(c).polynomial for c in circuits if len(c.support) == k + 1]
    a, b, ab = span_rank(minors), span_rank(rels), span_rank(minors + rels)
    view = ot_view(A, k)
    in_ideal = all(view.contains(m) for m in minors)
    ok = a == b == ab
    frag = fragment(
        "fitting", arr_inputs(A, flat=[A.labels[i] for i in idx]), ok, k,
        {"minor_rank": a, "relation_rank": b, "joint_rank": ab,
         "minor_structure": structure_ok, "minors_in_ideal": in_ideal, "lower_rank_minors": extra},
    )
    if not (structure_ok and in_ideal):
        raise InvariantViolation(f"a Fitting minor at X={list(idx)} is not y_(T-C) r_C")
    return _ret(detail, frag)


def _pi_below(A, x):
    lat = lattice_of(A)
    coeffs = [0] * (x.rank + 1)
    for f in lat.below(x):
        coeffs[f.rank] += lat.mobius[f.mask] * (-1) ** f.rank
    return UniPoly(coeffs)


def modular_factorization_check(A, x, D=None, seed=0, detail=False):
    """Hilbert, Poincare and fibre factorizations at X, each matched to modularity."""
    x = flat_of(A, x)
    if not 0 < x.rank < A.rank:
        raise PreconditionError("need a proper flat of positive rank")
    D = A.n if D is None else D
    modular = is_modular(A, x)[0]
    inside = list(x.indices)
    outside = [i for i in range(A.n) if i not in x]

    gens_x, m_x, _ = eliminate(ot_generators(A.matroid, support=inside, max_degree=D), A.n, outside)
    h_x = GradedIdealView(gens_x, D, m_x).hilbert()
    rest, kept = relative_view(A, inside, D)
    h_rest = rest.hilbert()
    h_full = ot_view(A, D).hilbert()
    hilbert_factors = h_full == convolve(h_x, h_rest, D)

    trunc = principal_truncation(A, x, seed=seed)
    tarr = trunc.arrangement()
    pi_ax = _pi_below(A, x)
    pi_pt = poincare(tarr)[1]
    pi_factors = pi_of(A) == pi_ax * pi_pt

    fib_gens = ot_generators(tarr.matroid, max_degree=D)
    fg, fm, fkept = eliminate(fib_gens, tarr.n, [0])
    h_fib = GradedIdealView(fg, D, fm).hilbert()
    if [trunc.elements[k] for k in fkept] != kept:
        raise AssertionError("fibre variables are not aligned with [n] - [X]")
    if any(a < b for a, b in zip(h_rest, h_fib)):
        raise InvariantViolation(
            f"dim OT_rest < dim OT_X(A_v) at X={inside}: {h_rest} vs {h_fib}"
        )
    fibre_match = h_rest == h_fib

    out = {
        "hilbert_factors": hilbert_factors,
        "pi_factors": pi_factors,
        "fibre_match": fibre_match,
        "modular": modular,
    }
    if not hilbert_factors == pi_factors == fibre_match == modular:
        raise InvariantViolation(f"factorization sub-checks disagree at X={inside}: {out}")
    if not detail:
        return out
    return fragment(
        "factorization", arr_inputs(A, flat=[A.labels[i] for i in inside], seed=seed),
        out, D,
        {"h_A": h_full, "h_AX": h_x, "h_rest": h_rest, "h_fibre": h_fib,
         "pi_AX": str(pi_ax), "pi_PT": str(pi_pt), "truncation_witness": [str(v) for v in trunc.witness]},
    )


def coatom_composition(A, x, i, j):
    """(k, a, b) with k the unique element of [X] in cl{i, j} and f_k = a f_i + b f_j."""
    lat = lattice_of(A)
    line = lat.closure((1 << i) | (1 << j))
    ks = [k for k in line.indices if k in x]
    if len(ks) != 1:
        raise PreconditionError(f"pair ({i}, {j}) meets [X] in {len(ks)} elements")
    k = ks[0]
    fi, fj, fk = A.rows[i], A.rows[j], A.rows[k]
    # solve on two coordinates where (f_i, f_j) is invertible
    for p, q in combinations(range(A.dim), 2):
        det = fi[p] * fj[q] - fi[q] * fj[p]
        if det:
            a = (fk[p] * fj[q] - fk[q] * fj[p]) / det
            b = (fi[p] * fk[q] - fi[q] * fk[p]) / det
            break
    if any(fk[c] != a * fi[c] + b * fj[c] for c in range(A.dim)):
        raise AssertionError("f_{i o j} is not in the span of f_i, f_j")
    return k, a, b


def coatom_presentation_check(A, x, D=None, detail=False):
    """I(A_X) plus z_i z_j - y_k (a z_j + b z_i) generate I(A) through degree D."""
    x = flat_of(A, x)
    if x.rank != A.rank - 1 or not is_modular(A, x)[0]:
        raise PreconditionError(f"{list(x.indices)} is not a modular coatom")
    D = 6 if D is None else D
    outside = [i for i in range(A.n) if i not in x]
    quads = []
    comps = []
    for i, j in combinations(outside, 2):
        k, a, b = coatom_composition(A, x, i, j)
        zi, zj, yk = MultiPoly.variable(i), MultiPoly.variable(j), MultiPoly.variable(k)
        quads.append(zi * zj - yk * (zj * a + zi * b))
        comps.append([A.labels[i], A.labels[j], A.labels[k], str(a), str(b)])
    gens = ot_generators(A.matroid, support=x.indices, max_degree=D) + quads
    small = GradedIdealView(gens, D, A.n)
    full = ot_view(A, D)
    inside = all(full.contains(q) for q in quads) if D >= 2 else True
    ok = inside and small.ideal_dims() == full.ideal_dims()
    frag = fragment(
        "coatom", arr_inputs(A, flat=[A.labels[i] for i in x.indices]), ok, D,
        {"compositions": comps, "presented_dims": small.ideal_dims(), "ideal_dims": full.ideal_dims()},
    )
    return _ret(detail, frag)
