"""Batch runner: every requested check as a JSON fragment, errors included."""
import random
import time
from concurrent.futures import ProcessPoolExecutor

from ..arrmat import from_json, lattice_of, poincare, supersolvable_chain
from ..arrmat.modular import is_modular
from ..errors import InvariantViolation
from ..exactcore import TermOrder
from ..nbc import bc_modular_check
from ..otideal import (
    coatom_presentation_check,
    fitting_check,
    generic_betti,
    groebner_degree_check,
    is_2formal,
    is_quadratic,
    koszul_necessary,
    modular_factorization_check,
    qci_check,
    relative_hilbert_check,
    terao_check,
)
from ..otideal.common import arr_inputs, fragment

SCHEMA = "otarrange.report/1"

CHECKS = (
    "terao",
    "relative",
    "groebner",
    "bc-modular",
    "factorization",
    "fitting",
    "coatom",
    "quadratic",
    "2formal",
    "qci",
    "koszul-necessary",
    "generic-betti",
)


def _labels(A, x):
    return [A.labels[i] for i in x.indices]


def select_flats(A, flats):
    """All flats, or those named by label sets like [['1','2','4'], ['3']]."""
    lat = lattice_of(A)
    if flats in (None, "all"):
        return list(lat)
    pos = {lab: i for i, lab in enumerate(A.labels)}
    out = []
    for group in flats:
        out.append(lat.flat([pos[lab] for lab in group]))
    return sorted(set(out), key=lambda f: (f.rank, f.indices))


def plan(A, checks, D, seed, flats="all"):
    """Deterministic task list: (check, key, kwargs)."""
    chosen = select_flats(A, flats)
    proper = [f for f in chosen if 0 < f.rank < A.rank]
    tasks = []
    for name in sorted(checks):
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
        if name == "relative":
            for h in range(A.n):
                tasks.append((name, (h,), {"H": h}))
        elif name == "groebner":
            rng = random.Random(seed)
            orders = [TermOrder.lex_descending(A.n)]
            for _ in range(5):
                pr = list(range(A.n))
                rng.shuffle(pr)
                orders.append(TermOrder("lex", pr))
            for k, o in enumerate(orders):
                tasks.append((name, (k,), {"priority": o.priority}))
        elif name in ("bc-modular", "factorization"):
            for f in proper:
                tasks.append((name, f.indices, {"flat": f.indices}))
        elif name == "fitting":
            for f in chosen:
                if len(f) > f.rank >= 1:
                    tasks.append((name, f.indices, {"flat": f.indices}))
        elif name == "coatom":
            for f in chosen:
                if f.rank == A.rank - 1 and is_modular(A, f)[0]:
                    tasks.append((name, f.indices, {"flat": f.indices}))
        else:
            tasks.append((name, (), {}))
    return tasks


def _execute(A, name, D, seed, kw):
    if name == "terao":
        return terao_check(A, D, detail=True)
    if name == "relative":
        return relative_hilbert_check(A, kw["H"], D, detail=True)
    if name == "groebner":
        return groebner_degree_check(A, TermOrder("lex", kw["priority"]), min(D, 6), detail=True)
    if name == "bc-modular":
        sub, equal, modular = bc_modular_check(A, kw["flat"], seed=seed)
        return fragment(
            "bc-modular", arr_inputs(A, flat=_labels(A, lattice_of(A).flat(kw["flat"])), seed=seed),
            {"subcomplex": sub, "equal": equal, "modular": modular}, None, {},
        )
    if name == "factorization":
        return modular_factorization_check(A, kw["flat"], D, seed=seed, detail=True)
    if name == "fitting":
        return fitting_check(A, kw["flat"], detail=True)
    if name == "coatom":
        return coatom_presentation_check(A, kw["flat"], min(D, 6), detail=True)
    if name == "quadratic":
        return is_quadratic(A, detail=True)
    if name == "2formal":
        return is_2formal(A, detail=True)
    if name == "qci":
        return qci_check(A, detail=True)
    if name == "koszul-necessary":
        return koszul_necessary(A, D, detail=True)
    if name == "generic-betti":
        if not A.n > A.rank >= 3:
            return fragment("generic-betti", arr_inputs(A), None, None,
                            {"skipped": "needs n > l >= 3"})
        return generic_betti(A.n, A.rank, detail=True)
    raise ValueError(name)


def run_one(A, name, key, D, seed, kw):
    """Run one task; returns (record, seconds). Errors become records."""
    t0 = time.perf_counter()
    try:
        rec = _execute(A, name, D, seed, kw)
        rec["status"] = "ok"
    except InvariantViolation as exc:
        rec = {"check": name, "inputs": {"key": list(key)}, "status": "invariant-violation",
               "error": str(exc)}
    except Exception as exc:  # reported, never dropped
        rec = {"check": name, "inputs": {"key": list(key)}, "status": "error",
               "error": f"{type(exc).__name__}: {exc}"}
    return rec, time.perf_counter() - t0


def _worker(payload):
    data, name, key, D, seed, kw = payload
    A = from_json(data)
    return run_one(A, name, key, D, seed, kw)


def arrangement_summary(A):
    pi, _ = poincare(A)
    ss = supersolvable_chain(A)
    return {
        "name": A.name,
        "n": A.n,
        "rank": A.rank,
        "labels": list(A.labels),
        "pi": str(pi),
        "supersolvable": ss is not None,
        "exponents": ss[1] if ss else None,
        "provenance": A.provenance,
    }


def run_report(A, checks=CHECKS, D=None, seed=0, flats="all", jobs=1):
    """Run ``checks`` on A.  Returns (report dict, exit code)."""
    D = max(A.rank + 2, 6) if D is None else D
    tasks = plan(A, checks, D, seed, flats)
    if jobs > 1 and len(tasks) > 1:
        data = A.to_json()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, [(data, n, k, D, seed, kw) for n, k, kw in tasks]))
    else:
        results = [run_one(A, n, k, D, seed, kw) for n, k, kw in tasks]
    records = [r for r, _ in results]
    timings = [
        {"check": n, "key": list(k), "seconds": round(s, 4)} for (n, k, _), (_, s) in zip(tasks, results)
    ]
    violations = sum(r["status"] == "invariant-violation" for r in records)
    errors = sum(r["status"] == "error" for r in records)
    report = {
        "schema": SCHEMA,
        "arrangement": arrangement_summary(A),
        "seed": seed,
        "degree_bound": D,
        "checks": records,
        "summary": {"tasks": len(records), "invariant_violations": violations, "errors": errors},
        "timings": timings,
    }
    return report, (2 if violations else 0)

