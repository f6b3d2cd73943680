"""JSON-ready report builders shared by the CLI and the experiment scripts."""
from __future__ import annotations

from math import gcd
from typing import Any

from .conformal_check import obstruction_search, verify_exceptional_automorphism
from .curve_family import CurveParams, branch_set, chart_exponents
from .cyclic_genvec import (
    MOVE_SETS,
    CyclicGenVec,
    classify_orbits,
    period_preserving_permutations,
    scalar_equivalent,
    units,
)
from .group_algebra import (
    ActionModel,
    GroupElement,
    GroupSpec,
    conjugate_subgroups,
    subgroup_signature,
    verify_presentation,
)
from .rotation import RotationNumber, generator_change_consistency, harvey_xi
from .signature import InconsistentDataError, Signature

GENERIC_CAVEAT = "generic Aut(S) assumption: G is the full automorphism group only for all but finitely many lambda"


def twist_json(spec: GroupSpec) -> dict[str, Any]:
    return {"e": spec.twist, "abelian": spec.is_abelian}


def _conjugacy_class(spec: GroupSpec, H: frozenset[GroupElement]) -> list[list[int]]:
    """Conjugates of H, each given by its least generator."""
    conj = {frozenset(spec.conjugate(g, h) for h in H) for g in spec.elements()}
    reps = []
    for K in conj:
        gens = [k for k in K if len(spec.generated_subgroup([k])) == len(K)]
        reps.append(list(min(gens)))
    return sorted(reps)


def subgroup_report(action: ActionModel, name: str, gen: GroupElement) -> dict[str, Any]:
    spec = action.spec
    H = spec.generated_subgroup([gen])
    res = subgroup_signature(action, H)
    return {
        "name": name,
        "n": action.n,
        "a": action.a,
        "c": action.c,
        "twist": twist_json(spec),
        "subgroup": {"generators": [list(gen)], "words": [gen.label()], "order": len(H)},
        "signature": res.signature.to_json(),
        "signature_text": str(res.signature),
        "fixed_points": res.fixed_points,
        "quotient_genus": res.quotient_genus,
        "conjugacy_class": _conjugacy_class(spec, H),
    }


def family_report(params: CurveParams) -> dict[str, Any]:
    n, a = params.n, params.a
    info = params.case
    out: dict[str, Any] = {
        "n": n,
        "a": a,
        "lambda": "symbolic" if params.lam is None else str(params.lam),
        "c": params.c,
        "case": info.case,
        "singular_points": list(info.singular_points),
        "genus": params.genus,
        "branch_points": branch_set(params).to_json(),
        "chart_exponents": {p: list(chart_exponents(p, info.case, n, a)) for p in info.singular_points},
        "caveats": [GENERIC_CAVEAT],
    }
    if info.external:
        out["caveats"].append(f"case {info.case}: {info.external}")
    if params.c is None:
        out["caveats"].append("2^(n-1) does not divide 2a+2: no tau2, only the cyclic group <tau1>")
        return out
    action = ActionModel.for_curve(n, a)
    spec = action.spec
    checks = action.check()
    if not all(checks.values()):
        raise InconsistentDataError(f"generating vector checks failed: {checks}")
    which = "group2n" if params.c % 2 == 0 else "exnon"
    pres = verify_presentation(spec, which, params.c)
    if not pres.ok:
        raise InconsistentDataError(f"presentation {which} fails: {pres.failing}")
    if which == "exnon" and n == 3:
        out["caveats"].append("exnon presentation checked at n = 3 with horizontal exponent 2")
    full = subgroup_signature(action, spec.elements())
    if full.signature != action.signature:
        raise InconsistentDataError(f"full-group signature {full.signature} != {action.signature}")
    named = action.named_subgroups()
    subgroups = [subgroup_report(action, name, g) for name, g in named.items()]
    out.update(
        {
            "twist": twist_json(spec),
            "group_order": spec.order,
            "generating_vector": [list(g) for g in action.vector],
            "action_signature": action.signature.to_json(),
            "vector_checks": checks,
            "presentation": pres.to_json(),
            "order_two_tau2_exponents": spec.order_two_tau2_exponents(),
            "subgroups": subgroups,
        }
    )
    if "H5" in named:
        H4 = spec.generated_subgroup([named["H4"]])
        H5 = spec.generated_subgroup([named["H5"]])
        g = conjugate_subgroups(spec, H4, H5)
        out["H4_H5_conjugator"] = None if g is None else list(g)
    return out


def classify_report(n: int, sig: Signature, moves: str) -> dict[str, Any]:
    return classify_orbits(n, sig, moves).to_json()


def _require_generating(name: str, v: CyclicGenVec) -> None:
    n = v.modulus
    if sum(v.entries) % n or gcd(n, *v.entries) != 1:
        raise ValueError(f"{name} = {v.to_text()} is not a generating vector of Z/{n} (sum {sum(v.entries)} mod {n})")


def equiv_report(n: int, v1: tuple[int, ...], v2: tuple[int, ...], moves: str) -> dict[str, Any]:
    """Direct topological equivalence of two genus-0 cyclic generating vectors."""
    if moves not in MOVE_SETS:
        raise ValueError(f"unknown move set {moves!r}")
    g1, g2 = CyclicGenVec(n, v1), CyclicGenVec(n, v2)
    _require_generating("v1", g1)
    _require_generating("v2", g2)
    if sorted(g1.periods) != sorted(g2.periods):
        raise ValueError(f"period multisets differ: {g1.periods} vs {g2.periods}")
    perms = [tuple(range(len(v1)))]
    if moves != "scalar":
        perms = list(period_preserving_permutations(g1.periods))
    s, witness = None, None
    for perm in perms:
        w = g1.permuted(perm)
        if w.periods != g2.periods:
            continue
        s = scalar_equivalent(w, g2)
        if s is not None:
            witness = perm
            break
    out: dict[str, Any] = {
        "modulus": n,
        "v1": list(g1.entries),
        "v2": list(g2.entries),
        "move_set": moves,
        "s": s,
        "equivalent": s is not None,
    }
    if moves != "scalar":
        out["permutation"] = None if witness is None else list(witness)
    return out


def conformal_report(n: int, a: int) -> dict[str, Any]:
    rep = obstruction_search(n, a).to_json()
    rep["exceptional_automorphism"] = verify_exceptional_automorphism(n, a).to_json()
    return rep


def harvey_report(m: int, eta: int) -> dict[str, Any]:
    xi = harvey_xi(eta, m)
    rot = RotationNumber(eta, m)
    return {
        "m": m,
        "eta": eta % m,
        "rotation": rot.to_json(),
        "xi": xi,
        "round_trip": (eta * xi) % m == 1,
        "generator_change_consistent": all(generator_change_consistency(eta, m, t) for t in units(m)),
    }
