"""Deterministic JSON reports with method-tagged numbers and certificates."""

from __future__ import annotations

import json
from typing import Any

from .affine import AffineGroup
from .core import Group, Index, Subgroup, commensurable, subgroup_index
from .fc import BoundCertificate, FCChain, Unbounded, class_size, fc_bound, fc_centralizer_subgroup
from .oracle import brute_check
from .perm import PermGroup, conjugacy_classes
from .series import derived_series, upper_central_series
from .theorems import DecompositionResult, SolvableResult, TowerTrace, neumann_decompose

REPORT_SCHEMA_TAG = "fc-report/1"


def claim(value, method: str) -> dict:
    if isinstance(value, Index):
        value = value.to_json()
    return {"value": value, "method": method}


def elements(group: Group, xs) -> list:
    return [group.format_element(x) for x in xs]


def describe(S: Subgroup, G: Subgroup | None = None) -> dict:
    group = S.group
    order = S.order
    out: dict[str, Any] = {
        "generators": elements(group, S.small_gens),
        "order": claim(order if order is not None else "infinite",
                       "bsgs" if isinstance(group, PermGroup) else "closure-data"),
    }
    if isinstance(group, AffineGroup):
        out["finite_image_order"] = len(S.data.P)
        out["lattice_basis"] = [list(b) for b in S.data.L.basis]
        out["lattice_rank"] = S.data.L.rank
    if G is not None:
        out["index_in_G"] = claim(subgroup_index(G, S), "exact-index")
    return out


def bound_json(group: Group, b: BoundCertificate | Unbounded | None):
    if b is None:
        return None
    if isinstance(b, Unbounded):
        return {"unbounded": True, "reason": b.reason, "method": b.method}
    return {"value": b.bound, "method": b.method,
            "attained_by": group.format_element(b.element)}


def chain_json(chain: FCChain) -> dict:
    group = chain.group
    G = group.whole
    return {
        "kind": chain.kind,
        "valid": chain.valid,
        "structure_error": chain.structure_error,
        "levels": [describe(S, G) for S in chain.levels],
        "level_checks": [
            {"level": r.level, "normal": r.normal, "inside_fc": r.inside,
             "bound": bound_json(group, r.bound), "diagnostic": r.diagnostic}
            for r in chain.reports],
    }


def tower_json(trace: TowerTrace) -> dict:
    group = trace.group
    G = group.whole
    steps = []
    for s in trace.steps:
        steps.append({
            "step": s.i,
            "modulus": describe(s.modulus),
            "fc_centralizer": describe(s.nstar, G),
            "fc_centralizer_index_in_previous": claim(s.nstar_index, "exact-index"),
            "x_generators_mod_modulus": elements(group, s.x_gens),
            "x_index_over_modulus": claim(s.x_index, "exact-index"),
            "F": describe(s.F, G),
            "H": [describe(h) for h in s.H],
            "flags": dict(sorted(s.flags.items())),
        })
    return {
        "steps": steps,
        "F": describe(trace.F),
        "index": claim(trace.index, "exact-index"),
        "nilpotency_class": claim(trace.nilpotency_class, "lower-central-series"),
        "class_bound": trace.class_bound,
        "accepted": trace.ok,
    }


def decomposition_json(d: DecompositionResult) -> dict:
    group = d.derived.group
    return {
        "derived_subgroup": describe(d.derived),
        "derived_order": claim(d.derived_order, "closure-data"),
        "centralizer_of_derived": describe(d.centralizer),
        "centralizer_index": claim(d.index, "exact-index"),
        "centralizer_class": claim(d.nilpotency_class, "lower-central-series"),
        "fc_bound": bound_json(group, d.bound),
    }


def solvable_json(res: SolvableResult) -> dict:
    return {
        "subgroup": describe(res.subgroup),
        "index": claim(res.index, "exact-index"),
        "derived_length": claim(res.derived_length, "derived-series"),
        "derived_series": [describe(S) for S in res.derived_series],
        "levels": [describe(S) for S in res.levels],
    }


def analyze(group: Group) -> dict:
    """FC-centralizer of G, its bound, and the structure that follows from it."""
    G = group.whole
    FC = fc_centralizer_subgroup(G, G)
    ok, i1, i2 = commensurable(FC, G)
    out: dict[str, Any] = {
        "order": describe(G)["order"],
        "fc_centralizer": describe(FC, G),
        "fc_commensurable_with_G": ok,
        "fc_bound": bound_json(group, fc_bound(FC, G)),
        "generator_class_sizes": [
            {"element": group.format_element(g), "size": claim(class_size(G, g), "exact-index")}
            for g in G.small_gens],
    }
    if FC == G:
        out["neumann"] = decomposition_json(neumann_decompose(G))
    else:
        bad = next(g for g in G.small_gens if g not in FC)
        out["neumann"] = {"error": f"not an FC-group: {group.format_element(bad)} has an infinite class"}
    if isinstance(group, PermGroup):
        ucs = upper_central_series(G)
        series, solvable = derived_series(G)
        out["conjugacy_class_sizes"] = claim(
            [size for _, size in conjugacy_classes(G)], "orbit-enumeration")
        out["upper_central_series_orders"] = [S.order for S in ucs.terms]
        out["nilpotent"] = ucs.nilpotent
        out["derived_series_orders"] = [S.order for S in series]
        out["solvable"] = solvable
    return out


def oracle_crosscheck(group: Group, radius: int) -> dict:
    """Exact class sizes of the generators against the ball oracle."""
    G = group.whole
    rows = []
    agree = True
    for g in G.small_gens:
        exact = class_size(G, g)
        rep = brute_check("class-size", {"group": group, "conjugators": G.small_gens,
                                         "element": g}, radius)
        if exact.finite:
            ok = rep.stabilized and rep.value == exact.value
        else:
            counts = rep.counts[3:]
            ok = not rep.stabilized and all(a < b for a, b in zip(counts, counts[1:]))
        agree &= ok
        rows.append({"element": group.format_element(g),
                     "exact": claim(exact, "exact-index"),
                     "oracle_counts": rep.counts,
                     "oracle_stabilized": rep.stabilized,
                     "agree": ok})
    return {"radius": radius, "checks": rows, "all_agree": agree}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

