"""FC-centralizers, boundedness certificates and chain validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any

from .core import (Group, GroupError, Index, Subgroup, _element_normalizes,
                   centralizer_mod, commensurable, normalizes, resolve_modulus,
                   subgroup_index)
from .oracle import ball_enumerate, brute_check

__all__ = [
    "BoundCertificate", "Unbounded", "FCChain", "LevelReport", "ChainError",
    "VerificationError", "class_size", "fc_membership", "fc_centralizer_subgroup",
    "fc_bound", "commensurable", "check_bounded_fc_nilpotent_chain",
    "check_bounded_fc_solvable_chain", "make_chain",
]


class VerificationError(GroupError):
    """A computed object failed its own post-condition check."""


class ChainError(GroupError):
    """A chain was used before it validated."""


@dataclass(frozen=True)
class BoundCertificate:
    bound: int
    element: Any
    method: str


@dataclass(frozen=True)
class Unbounded:
    reason: str
    method: str = "exact"


def class_size(H: Subgroup, k, N: Subgroup | None = None) -> Index:
    """``[H : C_H(k/N)]``."""
    return subgroup_index(H, centralizer_mod(H, k, N))


def show(group: Group, g) -> str:
    return json.dumps(group.format_element(g), separators=(",", ":"))


def fc_membership(K: Subgroup, H: Subgroup, mod, k) -> bool:
    """True iff k normalizes N and ``C_H(k/N)`` has finite index in H."""
    if k not in K:
        raise GroupError(f"{show(K.group, k)} is not in K")
    N = resolve_modulus(mod, H)
    if N is not None and not _element_normalizes(K.group, k, N):
        return False
    return class_size(H, k, N).finite


def fc_centralizer_subgroup(K: Subgroup, H: Subgroup, mod=None,
                            check_radius: int = 0) -> Subgroup:
    """``FC_K(H/N)``, with both inclusions checked.

    Every generator of the result must be an FC-element, and every element of
    K within ``check_radius`` outside the result must fail membership.
    """
    N = resolve_modulus(mod, H)
    group = K.group
    S = group._fc_subgroup(K, H, N)
    for g in S.small_gens:
        if not fc_membership(K, H, N, g):
            raise VerificationError(f"FC generator {show(group, g)} has an infinite class")
    if check_radius:
        for g in ball_enumerate(group, K.small_gens, check_radius).elements:
            if g not in S and fc_membership(K, H, N, g):
                raise VerificationError(f"FC element {show(group, g)} missing from subgroup")
    return S


def fc_bound(K: Subgroup, H: Subgroup, mod=None, sample_radius: int = 2,
             oracle_radius: int = 4) -> BoundCertificate | Unbounded:
    """Least n bounding ``[H : C_H(k/N)]`` over ``k ∈ FC_K(H/N)``.

    The backend supplies the bound and an attaining element.  The element's
    exact index is recomputed, members near the identity are sampled, and the
    ball oracle re-derives the attaining class when it stabilizes.
    """
    N = resolve_modulus(mod, H)
    group = K.group
    FC = fc_centralizer_subgroup(K, H, N)
    cert = group._fc_bound(K, H, N)
    if isinstance(cert, Unbounded):
        return cert
    exact = class_size(H, cert.element, N)
    if exact.value != cert.bound:
        raise VerificationError(
            f"attaining element {show(group, cert.element)} has class size {exact}, "
            f"not {cert.bound}")
    if sample_radius:
        for g in ball_enumerate(group, FC.small_gens, sample_radius).elements:
            size = class_size(H, g, N)
            if not size.finite or size.value > cert.bound:
                raise VerificationError(f"{show(group, g)} exceeds the bound {cert.bound}")
    method = cert.method
    if oracle_radius and method != "exhaustive":
        inst = {"group": group, "conjugators": H.small_gens, "element": cert.element}
        if N is not None:
            inst["mod_member"] = N.__contains__
        rep = brute_check("class-size", inst, oracle_radius)
        if rep.stabilized:
            if rep.value != cert.bound:
                raise VerificationError(
                    f"oracle class size {rep.value} disagrees with bound {cert.bound}")
            method += "+oracle-checked"
    return replace(cert, method=method)


@dataclass(frozen=True)
class LevelReport:
    level: int
    normal: bool
    inside: bool
    bound: BoundCertificate | Unbounded | None = None
    diagnostic: str | None = None

    @property
    def ok(self) -> bool:
        return (self.normal and self.inside and isinstance(self.bound, BoundCertificate)
                and self.diagnostic is None)


@dataclass(frozen=True)
class FCChain:
    """``1 = H_0 ≤ H_1 ≤ … ≤ H_n = G`` with per-level reports once validated."""

    group: Group
    levels: tuple[Subgroup, ...]
    kind: str = "nilpotent"
    reports: tuple[LevelReport, ...] = ()
    structure_error: str | None = None
    validated: bool = False

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    @property
    def valid(self) -> bool:
        return (self.validated and self.structure_error is None
                and all(r.ok for r in self.reports))

    @property
    def bounds(self) -> list[int | None]:
        return [r.bound.bound if isinstance(r.bound, BoundCertificate) else None
                for r in self.reports]

    def first_failure(self) -> str | None:
        if self.structure_error:
            return self.structure_error
        for r in self.reports:
            if not r.ok:
                return f"level {r.level}: {r.diagnostic}"
        return None

    def require_valid(self, kind: str | None = None) -> None:
        if kind is not None and self.kind != kind:
            raise ChainError(f"expected a {kind} chain, got {self.kind}")
        if not self.validated:
            raise ChainError("chain has not been validated")
        if not self.valid:
            raise ChainError(f"invalid chain: {self.first_failure()}")


def _structure(chain: FCChain) -> str | None:
    levels = chain.levels
    if not levels:
        return "empty chain"
    if any(S.group is not chain.group for S in levels):
        return "levels live in different ambient groups"
    if not levels[0].is_trivial():
        return "H_0 must be trivial"
    if levels[-1] != chain.group.whole:
        return "last level must be the whole group"
    for i in range(1, len(levels)):
        if not levels[i - 1] <= levels[i]:
            return f"H_{i - 1} is not contained in H_{i}"
    return None


def _check(chain: FCChain, kind: str) -> FCChain:
    error = _structure(chain)
    if error:
        return replace(chain, kind=kind, structure_error=error, validated=True)
    group = chain.group
    G = group.whole
    reports = []
    for i in range(1, len(chain.levels)):
        H, prev = chain.levels[i], chain.levels[i - 1]
        if not normalizes(G, H):
            reports.append(LevelReport(i, False, False, None, "not normal in G"))
            continue
        if reports and not reports[-1].normal:
            # the previous level cannot serve as a modulus
            reports.append(LevelReport(i, True, False, None, f"H_{i - 1} is not normal in G"))
            continue
        if kind == "nilpotent":
            FC = fc_centralizer_subgroup(G, G, prev)
            acting = G
        else:
            FC = fc_centralizer_subgroup(H, H, prev)
            acting = H
        bad = next((g for g in H.small_gens if g not in FC), None)
        if bad is not None:
            reports.append(LevelReport(
                i, True, False, None,
                f"not inside FC: {show(group, bad)} has an infinite class modulo H_{i - 1}"))
            continue
        bound = fc_bound(H, acting, prev)
        diag = None if isinstance(bound, BoundCertificate) else f"unbounded: {bound.reason}"
        reports.append(LevelReport(i, True, True, bound, diag))
    return replace(chain, kind=kind, reports=tuple(reports), structure_error=None,
                   validated=True)


def check_bounded_fc_nilpotent_chain(chain: FCChain) -> FCChain:
    """Each ``H_i ⊴ G``, ``H_{i+1} ⊆ FC_G(G/H_i)``, and ``FC_{H_{i+1}}(G/H_i)`` bounded."""
    return _check(chain, "nilpotent")


def check_bounded_fc_solvable_chain(chain: FCChain) -> FCChain:
    """Each ``G_i ⊴ G`` and every factor ``G_{i+1}/G_i`` a bounded FC-group."""
    return _check(chain, "solvable")


def make_chain(group: Group, levels, kind: str = "nilpotent") -> FCChain:
    return FCChain(group, tuple(levels), kind)

