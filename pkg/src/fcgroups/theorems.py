"""Constructive results on FC-nilpotent and FC-solvable groups.

All arithmetic "modulo N" is done on preimages: a subgroup of ``F/M`` is
carried as its full preimage in F, and centrality of ``A/M`` in ``F/M`` is
checked as ``[f, a] ∈ M`` on generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import (Group, GroupError, Index, Subgroup, centralizer_mod, commensurable,
                   contained_up_to_finite_index, join, normalizes, resolve_modulus,
                   subgroup_index, subgroup_intersect)
from .fc import (BoundCertificate, FCChain, Unbounded, check_bounded_fc_nilpotent_chain,
                 fc_bound, fc_centralizer_subgroup, make_chain, show)
from .oracle import ball_enumerate
from .series import derived_series, derived_subgroup, nilpotency_class, upper_central_series


class TheoremError(GroupError):
    """A proof step failed its runtime check; ``step`` names it."""

    def __init__(self, step: str, message: str):
        super().__init__(f"{step}: {message}")
        self.step = step


class HypothesisError(GroupError):
    pass


class SearchExhausted(GroupError):
    """The ball search ran out of budget; this is inconclusive, not a counterexample."""


def _whole(G) -> Subgroup:
    return G.whole if isinstance(G, Group) else G


def _intersect_all(start: Subgroup, parts) -> Subgroup:
    out = start
    for P in parts:
        out = subgroup_intersect(out, P)
    return out


# main theorem


@dataclass
class TowerStep:
    i: int
    modulus: Subgroup
    nstar: Subgroup
    nstar_index: Index
    x_gens: tuple
    x_index: Index
    F: Subgroup
    H: tuple[Subgroup, ...]
    flags: dict[str, bool] = field(default_factory=dict)


@dataclass
class TowerTrace:
    group: Group
    chain: FCChain
    steps: list[TowerStep]
    F: Subgroup
    index: Index
    nilpotency_class: int
    class_bound: int

    @property
    def ok(self) -> bool:
        return all(all(s.flags.values()) for s in self.steps) and (
            self.nilpotency_class <= self.class_bound)


def _flag(step: TowerStep, name: str, value: bool, detail: str = "") -> None:
    step.flags[name] = value
    if not value:
        raise TheoremError(f"step {step.i}: {name}", detail or "check failed")


def nilpotent_tower(G, chain: FCChain) -> TowerTrace:
    """Build ``F_n`` of finite index and nilpotency class at most ``2n``.

    Step i works inside ``F_{i-1}`` modulo ``M = H^{i-1}_{2i-2}``: it takes the
    FC-centralizer ``N* = FC_{F_{i-1}}(A/M)`` of ``A = (N_i ∩ F_{i-1})M``, the
    finite-mod-M commutator group ``X = [N*, A ∩ N*]M``, and the centralizer
    ``F_i = C_{N*}(X/M)``.  Every contract is checked as it is produced.
    """
    Gs = _whole(G)
    group = Gs.group
    chain.require_valid("nilpotent")
    if chain.group is not group:
        raise GroupError("chain lives in a different group")
    n = chain.length
    F_prev = Gs
    H_prev: list[Subgroup] = [group.trivial]
    steps = []
    for i in range(1, n + 1):
        Ni = chain.levels[i]
        M = H_prev[2 * (i - 1)]
        A = join(subgroup_intersect(Ni, F_prev), M)
        nstar = fc_centralizer_subgroup(F_prev, A, M)
        comm_ok, idx, _ = commensurable(nstar, F_prev)
        astar = subgroup_intersect(A, nstar)
        xpre = join(derived_subgroup(nstar, astar), M)
        x_index = subgroup_index(xpre, M)
        x_gens = tuple(x for x in xpre.small_gens if x not in M)
        Fi = _intersect_all(nstar, (centralizer_mod(nstar, x, M) for x in x_gens))
        H = [subgroup_intersect(h, Fi) for h in H_prev[:2 * i - 1]]
        H.append(subgroup_intersect(xpre, Fi))
        H.append(subgroup_intersect(astar, Fi))
        step = TowerStep(i, M, nstar, idx, x_gens, x_index, Fi, tuple(H))
        steps.append(step)
        _flag(step, "symmetry", comm_ok, "FC-centralizer not commensurable with F_{i-1}")
        _flag(step, "x_finite", x_index.finite, "X is infinite modulo the previous level")
        _flag(step, "finite_index", subgroup_index(Gs, Fi).finite, "[G : F_i] is infinite")
        _flag(step, "ascending", all(H[j] <= H[j + 1] for j in range(2 * i)))
        _flag(step, "normal", all(normalizes(Fi, h) for h in H), "H_j not normal in F_i")
        central = all(group.comm(f, h) in H[j]
                      for j in range(2 * i) for f in Fi.small_gens for h in H[j + 1].small_gens)
        _flag(step, "central", central, "a factor H_{j+1}/H_j is not central in F_i/H_j")
        _flag(step, "contains_Ni", subgroup_intersect(Fi, Ni) <= H[2 * i],
              "F_i ∩ N_i is not inside H_{2i}")
        _flag(step, "odd_factor_finite", subgroup_index(H[2 * i - 1], H[2 * i - 2]).finite,
              "H_{2i-1} is infinite modulo H_{2i-2}")
        F_prev, H_prev = Fi, H
    top = H_prev[-1]
    if top != F_prev:
        raise TheoremError("final", "H_{2n} differs from F_n")
    cls = nilpotency_class(F_prev, cap=2 * n + 2)
    if cls is None or cls > 2 * n:
        raise TheoremError("final", f"F_n has nilpotency class {cls}, above {2 * n}")
    return TowerTrace(group, chain, steps, F_prev, subgroup_index(Gs, F_prev), cls, 2 * n)


def witness_from_nilpotent(G, N: Subgroup) -> FCChain:
    """The chain ``1 ≤ Z_1(N) ≤ … ≤ Z_c(N) = N ≤ G`` for a normal nilpotent N of finite index."""
    Gs = _whole(G)
    if not normalizes(Gs, N):
        raise HypothesisError("N is not normal in G")
    k = subgroup_index(Gs, N)
    if not k.finite:
        raise HypothesisError("N has infinite index in G")
    series = upper_central_series(N)
    if not series.nilpotent:
        raise HypothesisError("N is not nilpotent")
    levels = list(series.terms)
    if levels[-1] != Gs:
        levels.append(Gs)
    chain = check_bounded_fc_nilpotent_chain(make_chain(Gs.group, levels))
    chain.require_valid()
    for level, b in enumerate(chain.bounds[:series.nilpotency_class], 1):
        if b > k.value:
            raise TheoremError("witness", f"level {level} bound {b} exceeds index {k.value}")
    return chain


# bounded FC-groups


@dataclass
class DecompositionResult:
    derived: Subgroup
    derived_order: int
    centralizer: Subgroup
    index: Index
    nilpotency_class: int
    bound: BoundCertificate


def _require_bounded_fc(H: Subgroup, what: str = "H") -> BoundCertificate:
    FC = fc_centralizer_subgroup(H, H)
    bad = next((g for g in H.small_gens if g not in FC), None)
    if bad is not None:
        raise HypothesisError(f"{what} is not an FC-group: {show(H.group, bad)} has an infinite class")
    bound = fc_bound(H, H)
    if isinstance(bound, Unbounded):
        raise HypothesisError(f"{what} is not a bounded FC-group: {bound.reason}")
    return bound


def neumann_decompose(H) -> DecompositionResult:
    """For a bounded FC-group H: finite H' and ``C_H(H')`` of finite index, class ≤ 2."""
    H = _whole(H)
    bound = _require_bounded_fc(H)
    D = derived_subgroup(H)
    if D.order is None:
        raise TheoremError("derived", "H' is infinite")
    C = _intersect_all(H, (centralizer_mod(H, x) for x in D.small_gens))
    idx = subgroup_index(H, C)
    if not idx.finite:
        raise TheoremError("centralizer", "C_H(H') has infinite index")
    cls = nilpotency_class(C, cap=4)
    if cls is None or cls > 2:
        raise TheoremError("centralizer", f"C_H(H') has class {cls}")
    return DecompositionResult(D, D.order, C, idx, cls, bound)


@dataclass
class SymmetryVerdict:
    verdict: str
    interpretation: str
    bounded: bool
    h_in_fc: bool
    k_in_fc: bool | None
    indices: dict[str, Any]


SYMMETRY_READING = "FC_H(K/N) bounded"


def symmetry_check(G, H: Subgroup, K: Subgroup, mod=None) -> SymmetryVerdict:
    """Evaluate: FC_H(K/N) bounded and ``H ≲ FC_G(K/N)`` imply ``K ≲ FC_G(H/N)``."""
    Gs = _whole(G)
    N = resolve_modulus(mod, H, K)
    cert = fc_bound(H, K, N, sample_radius=1, oracle_radius=0)
    bounded = isinstance(cert, BoundCertificate)
    fck = fc_centralizer_subgroup(Gs, K, N)
    i_h = subgroup_index(H, fck)
    indices = {"[H:H∩FC_G(K/N)]": i_h.to_json()}
    if not (bounded and i_h.finite):
        return SymmetryVerdict("hypothesis-false", SYMMETRY_READING, bounded, i_h.finite,
                               None, indices)
    fch = fc_centralizer_subgroup(Gs, H, N)
    i_k = subgroup_index(K, fch)
    indices["[K:K∩FC_G(H/N)]"] = i_k.to_json()
    verdict = "verified" if i_k.finite else "VIOLATION"
    return SymmetryVerdict(verdict, SYMMETRY_READING, True, True, i_k.finite, indices)


@dataclass
class CommutatorResult:
    subgroup: Subgroup
    order: int


def commutator_finiteness(H: Subgroup, K: Subgroup) -> CommutatorResult:
    """``[H, K]`` is finite when K normalizes H, each is FC over the other, and FC_K(H) is bounded."""
    group = H.group
    if not normalizes(K, H):
        raise HypothesisError("K does not normalize H")
    for X, Y, name in ((H, K, "FC_H(K)"), (K, H, "FC_K(H)")):
        FC = fc_centralizer_subgroup(X, Y)
        bad = next((g for g in X.small_gens if g not in FC), None)
        if bad is not None:
            raise HypothesisError(f"{name} is proper: {show(group, bad)} has an infinite class")
    cert = fc_bound(K, H)
    if isinstance(cert, Unbounded):
        raise HypothesisError(f"FC_K(H) is unbounded: {cert.reason}")
    C = derived_subgroup(H, K)
    if C.order is None:
        raise TheoremError("commutator", "[H, K] is infinite")
    return CommutatorResult(C, C.order)


# FC-solvable groups


@dataclass
class SolvableResult:
    subgroup: Subgroup
    index: Index
    derived_series: list[Subgroup]
    derived_length: int
    levels: list[Subgroup]


def solvable_resolve(G, chain: FCChain) -> SolvableResult:
    """A finite-index solvable subgroup from a bounded FC-solvable chain.

    Level by level, ``T_i`` is the preimage of ``C(( G_{i+1}/G_i )')``, which is
    nilpotent of class at most 2 modulo ``G_i``, and ``S_{i+1} = C_{T_i}(G_i/S_i)``.
    Each S_i stays normal in G because every level is.
    """
    Gs = _whole(G)
    chain.require_valid("solvable")
    S = Gs.group.trivial
    built = [S]
    for i in range(chain.length):
        lo, hi = chain.levels[i], chain.levels[i + 1]
        D = join(derived_subgroup(hi), lo)
        T = _intersect_all(hi, (centralizer_mod(hi, d, lo) for d in D.small_gens))
        if not subgroup_index(hi, T).finite:
            raise TheoremError(f"level {i + 1}", "T_i has infinite index")
        W = _intersect_all(T, (centralizer_mod(T, g, S) for g in lo.small_gens))
        if not subgroup_index(hi, W).finite:
            raise TheoremError(f"level {i + 1}", "S_{i+1} has infinite index")
        S = W
        built.append(S)
    series, reaches = derived_series(S, cap=4 * chain.length + 4)
    if not reaches:
        raise TheoremError("final", "derived series does not reach the trivial group")
    return SolvableResult(S, subgroup_index(Gs, S), series, len(series) - 1, built)


# covering lemma


def coset_cover_witness(G, cosets, radius: int = 20):
    """An element outside every coset ``g·K`` listed, all K of infinite index."""
    Gs = _whole(G)
    group = Gs.group
    for g, K in cosets:
        if subgroup_index(Gs, K).finite:
            raise HypothesisError("a listed subgroup has finite index")
    if not cosets:
        return group.identity
    inverses = [(group.inv(g), K) for g, K in cosets]
    ball = ball_enumerate(group, Gs.small_gens, radius)
    for x in ball.elements:
        if not any(group.mul(gi, x) in K for gi, K in inverses):
            return x
    raise SearchExhausted(f"no uncovered element within radius {radius}")
