"""Normal closures, commutator subgroups and central series.

Everything here works through the backend contract, so the same code serves
permutation groups and affine groups.  Termination on infinite groups relies
on subgroups of ``Z^n ⋊ F`` being finitely generated (ascending chains stop).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Group, GroupError, NormalityError, Subgroup, centralizer_mod,
                   join, normalizes, resolve_modulus, subgroup_intersect)


def normal_closure(gens, over: Subgroup) -> Subgroup:
    """The smallest subgroup containing ``gens`` and normalized by ``over``."""
    group = over.group
    current = group.subgroup(gens)
    conjugators = over.small_gens
    while True:
        extra = [group.conj(x, c) for x in current.small_gens for c in conjugators]
        extra += [group.conj(x, group.inv(c)) for x in current.small_gens for c in conjugators]
        missing = [y for y in extra if y not in current]
        if not missing:
            return current
        current = group.subgroup(list(current.small_gens) + missing)


def derived_subgroup(H: Subgroup, K: Subgroup | None = None) -> Subgroup:
    """``[H, K]``: the normal closure in ``⟨H, K⟩`` of generator commutators."""
    K = H if K is None else K
    group = H.group
    comms = [group.comm(h, k) for h in H.small_gens for k in K.small_gens]
    return normal_closure(comms, join(H, K))


def center_mod(H: Subgroup, mod=None) -> Subgroup:
    """Preimage in H of the centre of ``H/N``, i.e. ``{h ∈ H : [h, H] ⊆ N}``."""
    N = resolve_modulus(mod, H)
    out = H
    for x in H.small_gens:
        out = subgroup_intersect(out, centralizer_mod(H, x, N))
    return out


@dataclass(frozen=True)
class CentralSeries:
    terms: tuple[Subgroup, ...]
    nilpotent: bool

    @property
    def nilpotency_class(self) -> int | None:
        return len(self.terms) - 1 if self.nilpotent else None


def upper_central_series(N: Subgroup) -> CentralSeries:
    """``1 = Z_0 < Z_1 < …`` until it stabilizes; nilpotent iff it reaches N."""
    terms = [N.group.trivial]
    while True:
        if terms[-1] == N:
            return CentralSeries(tuple(terms), True)
        nxt = center_mod(N, terms[-1])
        if nxt == terms[-1]:
            return CentralSeries(tuple(terms), False)
        terms.append(nxt)


def lower_central_series(H: Subgroup, mod=None, cap: int = 64) -> list[Subgroup]:
    """``γ_1 = H, γ_{k+1} = [γ_k, H]·N`` until it stabilizes or ``cap`` terms."""
    N = resolve_modulus(mod, H)
    base = H.group.trivial if N is None else N
    terms = [H]
    while len(terms) < cap:
        nxt = join(derived_subgroup(terms[-1], H), base)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def nilpotency_class(H: Subgroup, mod=None, cap: int = 64) -> int | None:
    """Least c with ``γ_{c+1}(H) ⊆ N``, or None if the lower series stalls above N."""
    N = resolve_modulus(mod, H)
    base = H.group.trivial if N is None else N
    terms = lower_central_series(H, N, cap)
    for c, term in enumerate(terms):
        if term <= base:
            return c
    return None


def derived_series(H: Subgroup, cap: int = 64) -> tuple[list[Subgroup], bool]:
    """``H ≥ H' ≥ H'' ≥ …``; the flag says whether it reaches the trivial group."""
    terms = [H]
    while len(terms) < cap:
        if terms[-1].is_trivial():
            return terms, True
        nxt = derived_subgroup(terms[-1])
        if nxt == terms[-1]:
            return terms, False
        terms.append(nxt)
    return terms, terms[-1].is_trivial()


def is_normal(H: Subgroup, G: Subgroup) -> bool:
    return normalizes(G, H)


def require_normal(H: Subgroup, G: Subgroup, what: str = "subgroup") -> None:
    if not normalizes(G, H):
        raise NormalityError(f"{what} is not normal")


def ambient_of(*subgroups: Subgroup) -> Group:
    group = subgroups[0].group
    if any(S.group is not group for S in subgroups):
        raise GroupError("subgroups of different ambient groups")
    return group
