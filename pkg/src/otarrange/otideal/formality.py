"""Quadraticity, 2-formality, quadratic complete intersections, and a
numerical Koszul obstruction."""
from ..arrmat import is_line_closed, rank2_hypergraph, supersolvable_chain
from ..errors import InvariantViolation
from ..exactcore import RatFun, UniPoly, exact_rank, nullspace, series_expand, substitute_t_over_1mt
from ..exactcore.linalg import transpose
from .common import arr_inputs, fragment, pi_of
from .graded import GradedIdealView, monomial_budget_degree
from .relations import ot_generators


def _ret(detail, frag):
    return frag if detail else frag["verdict"]


def quadratic_degree(A, budget=25000):
    """Degree up to which quadraticity is checked: l, or less if the monomial budget bites."""
    return monomial_budget_degree(A.n, A.rank, budget)


def is_quadratic(A, D=None, detail=False):
    """I(A) = (I_2(A)) in every degree <= D (default l).

    I(A) is generated by circuit relations, of degree at most l, so
    agreement through degree l is a certificate.
    """
    D = quadratic_degree(A) if D is None else D
    gens = ot_generators(A.matroid, max_degree=D)
    full = GradedIdealView(gens, D, A.n)
    quad = GradedIdealView([g for g in gens if g.homogeneous_degree() == 2], D, A.n)
    a, b = full.ideal_dims(), quad.ideal_dims()
    first_bad = next((d for d in range(D + 1) if a[d] != b[d]), None)
    frag = fragment(
        "quadratic", arr_inputs(A), first_bad is None, D,
        {"ideal_dims": a, "quadric_dims": b, "first_extra_degree": first_bad,
         "certified": D >= A.rank},
    )
    return _ret(detail, frag)


def linear_relations(A):
    """Basis of {lambda : sum lambda_i f_i = 0}."""
    return nullspace(transpose(A.rows, A.dim), A.n)


def is_2formal(A, detail=False):
    """Linear relations among the f_i spanned by those of 3-element circuits."""
    space = linear_relations(A)
    vecs = []
    for c in A.matroid.circuits():
        if len(c.support) == 3:
            v = [0] * A.n
            for i, a in zip(c.support, c.coeffs):
                v[i] = a
            vecs.append(v)
    r = exact_rank(vecs) if vecs else 0
    frag = fragment(
        "2formal", arr_inputs(A), r == len(space), 1,
        {"relation_dim": len(space), "triple_span_dim": r},
    )
    return _ret(detail, frag)


def qci_check(A, detail=False):
    """Five characterizations of a quadratic complete intersection, compared.

    (b) and (c) are stated for arrangements with quadratic I(A); their raw
    combinatorial values are reported, and the verdicts are gated on the
    quadraticity computed in (a).
    """
    n, ell = A.n, A.rank
    quad = is_quadratic(A, detail=True)
    dim_i2 = quad["witnesses"]["ideal_dims"][2] if quad["degree_bound"] >= 2 else None
    a = quad["verdict"] and dim_i2 == n - ell
    _, is_3graph, is_3forest, triples = rank2_hypergraph(A)
    from ..arrmat import lattice_of

    lat = lattice_of(A)
    max_line = max((len(f) for f in lat.levels[2]), default=0) if ell >= 2 else 0
    b_raw = max_line <= 3 and triples == n - ell
    b = b_raw and quad["verdict"]
    pi = pi_of(A)
    c_raw = 2 * ell >= n and pi == UniPoly((1, 1)) ** (2 * ell - n) * UniPoly((1, 2)) ** (n - ell)
    c = c_raw and quad["verdict"]
    ss = supersolvable_chain(A)
    exps = ss[1] if ss else None
    d = ss is not None and set(exps) <= {1, 2}
    line_closed = is_line_closed(A)
    e = line_closed and is_3graph and is_3forest
    out = {
        "qci": a,
        "mu_bound_and_count": b,
        "pi_form": c,
        "ss_exponents12": d,
        "lineclosed_3forest": e,
    }
    if len(set(out.values())) != 1:
        raise InvariantViolation(f"q.c.i. conditions disagree on {A.name or 'input'}: {out}")
    if not detail:
        return out
    return fragment(
        "qci", arr_inputs(A), out, quad["degree_bound"],
        {"dim_I2": dim_i2, "n_minus_l": n - ell, "quadratic": quad["verdict"],
         "quadratic_certified": quad["witnesses"]["certified"],
         "max_line_size": max_line, "triple_count": triples,
         "mu_bound_and_count_raw": b_raw, "pi": str(pi), "pi_form_raw": c_raw,
         "exponents": exps, "line_closed": line_closed, "is_3graph": is_3graph,
         "is_3forest": is_3forest},
    )


def koszul_necessary(A, D=None, detail=False):
    """Nonnegativity of 1/h(-t) through degree D, with h the OT Hilbert series."""
    D = A.n if D is None else D
    h = substitute_t_over_1mt(pi_of(A))
    inv = RatFun(h.den.negate_variable(), h.num.negate_variable())
    coeffs = series_expand(inv, D)
    ok = all(c >= 0 for c in coeffs)
    frag = fragment(
        "koszul-necessary", arr_inputs(A), ok, D, {"coefficients": [str(c) for c in coeffs]}
    )
    return _ret(detail, frag)
