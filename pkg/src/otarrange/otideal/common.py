"""Shared helpers: cached OT views, Terao expansions, JSON fragments."""
from ..arrmat import lattice_of, poincare
from ..exactcore import series_expand, substitute_t_over_1mt
from .graded import GradedIdealView
from .relations import ot_generators


def fragment(check, inputs, verdict, degree_bound, witnesses):
    """The JSON record every check emits for the report runner."""
    return {
        "check": check,
        "inputs": inputs,
        "verdict": verdict,
        "degree_bound": degree_bound,
        "witnesses": witnesses,
    }


def arr_inputs(arrangement, **extra):
    out = {"arrangement": arrangement.name or "custom", "n": arrangement.n, "rank": arrangement.rank}
    out.update(extra)
    return out


def ot_view(arrangement, D, order=None):
    """GradedIdealView of I(A) up to D, memoized per (D, order) on the arrangement."""
    cache = arrangement.__dict__.setdefault("_ot_views", {})
    key = (D, order)
    view = cache.get(key)
    if view is None:
        gens = ot_generators(arrangement.matroid, max_degree=D)
        view = GradedIdealView(gens, D, arrangement.n, order)
        cache[key] = view
    return view


def terao_series(pi, D):
    """Coefficients of pi(t / (1 - t)) through degree D, as ints."""
    vals = series_expand(substitute_t_over_1mt(pi), D)
    out = []
    for v in vals:
        if v.denominator != 1:
            raise AssertionError(f"non-integral Hilbert coefficient {v}")
        out.append(int(v))
    return out


def pi_of(arrangement):
    return poincare(arrangement)[0]


def flat_of(arrangement, x):
    return lattice_of(arrangement).flat(x)


def convolve(a, b, D):
    return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(D + 1)]


def default_degree(arrangement):
    return arrangement.n
