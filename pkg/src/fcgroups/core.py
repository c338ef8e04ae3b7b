"""Backend-independent group contract.

Conventions used throughout the package:

* conjugation ``g^h = h⁻¹ g h`` and commutator ``[g, h] = g⁻¹ h⁻¹ g h``;
* permutations compose left to right (``gh`` applies ``g`` first);
* affine products ``(w, g)(v, f) = (w + ρ(g)v, gf)``.

Quotients are never built.  Any operation "modulo N" takes the normal
subgroup N itself and lifts to preimages.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence


class GroupError(Exception):
    """Base class for errors raised by this package."""


class MembershipError(GroupError):
    pass


class WordError(GroupError):
    pass


class NormalityError(GroupError):
    pass


@dataclass(frozen=True)
class Index:
    """A subgroup index: a positive integer, or infinite when ``value`` is None."""

    value: int | None

    def __post_init__(self):
        if self.value is not None and self.value < 1:
            raise ValueError("finite index must be >= 1")

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __str__(self):
        return "infinite" if self.value is None else str(self.value)

    def to_json(self):
        return self.value if self.value is not None else "infinite"


INFINITE = Index(None)


class Group(ABC):
    """An ambient group: element arithmetic plus exact subgroup algorithms.

    Backends implement the underscore methods; everything user-facing goes
    through :class:`Subgroup` and the module-level functions below.
    """

    backend: str
    name: str = ""

    @property
    @abstractmethod
    def identity(self) -> Hashable: ...

    @property
    @abstractmethod
    def generators(self) -> tuple: ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def inv(self, a): ...

    @abstractmethod
    def is_element(self, g) -> bool: ...

    @abstractmethod
    def format_element(self, g) -> Any:
        """JSON-ready form of an element."""

    @abstractmethod
    def parse_element(self, obj) -> Hashable: ...

    # backend algorithms on closure data
    @abstractmethod
    def _close(self, gens: tuple): ...

    @abstractmethod
    def _contains(self, data, g) -> bool: ...

    @abstractmethod
    def _order(self, data) -> int | None: ...

    @abstractmethod
    def _key(self, data) -> Hashable: ...

    @abstractmethod
    def _small_gens(self, H: Subgroup) -> tuple: ...

    @abstractmethod
    def _intersect(self, H: Subgroup, K: Subgroup) -> Subgroup: ...

    @abstractmethod
    def _index(self, H: Subgroup, K: Subgroup) -> Index:
        """``[H : H ∩ K]``."""

    @abstractmethod
    def _centralizer(self, H: Subgroup, k, N: Subgroup | None) -> Subgroup:
        """``{h ∈ H : [h, k] ∈ N}``."""

    @abstractmethod
    def _normalizer(self, K: Subgroup, N: Subgroup) -> Subgroup:
        """``N_K(N)``."""

    @abstractmethod
    def _fc_subgroup(self, K: Subgroup, H: Subgroup, N: Subgroup | None) -> Subgroup: ...

    @abstractmethod
    def _fc_bound(self, K: Subgroup, H: Subgroup, N: Subgroup | None): ...

    def conj(self, g, h):
        return self.mul(self.mul(self.inv(h), g), h)

    def comm(self, g, h):
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    def power(self, g, n: int):
        if n < 0:
            g, n = self.inv(g), -n
        out = self.identity
        while n:
            if n & 1:
                out = self.mul(out, g)
            g = self.mul(g, g)
            n >>= 1
        return out

    def subgroup(self, gens: Iterable = ()) -> Subgroup:
        gens = tuple(gens)
        for g in gens:
            if not self.is_element(g):
                raise MembershipError(f"{g!r} is not an element of {self.name or self.backend}")
        return Subgroup(self, gens, self._close(gens))

    @cached_property
    def whole(self) -> Subgroup:
        gens = self.generators
        return Subgroup(self, gens, self._close(gens))

    @cached_property
    def trivial(self) -> Subgroup:
        return self.subgroup(())

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class Subgroup:
    """A subgroup of a :class:`Group` together with its closure data.

    Closure data is canonical, so equality of subgroups is equality of keys.
    """

    def __init__(self, group: Group, gens: tuple, data):
        self.group = group
        self.gens = gens
        self.data = data

    def __contains__(self, g) -> bool:
        return self.group._contains(self.data, g)

    @property
    def order(self) -> int | None:
        return self.group._order(self.data)

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @cached_property
    def key(self):
        return self.group._key(self.data)

    @cached_property
    def small_gens(self) -> tuple:
        """A short generating set derived from the closure data."""
        return self.group._small_gens(self)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other: Subgroup) -> bool:
        return all(g in other for g in self.small_gens)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        o = self.order
        return f"<Subgroup of {self.group.name or self.group.backend}, order {'inf' if o is None else o}>"


@dataclass(frozen=True)
class Modulus:
    """A subgroup N used as the "/N" of an operation, with its verified normalizer."""

    subgroup: Subgroup
    over: Subgroup

    @classmethod
    def check(cls, N: Subgroup, over: Subgroup) -> Modulus:
        if not normalizes(over, N):
            raise NormalityError("modulus is not normalized by the given subgroup")
        return cls(N, over)


def resolve_modulus(mod, *over) -> Subgroup | None:
    """Unwrap ``mod`` and verify it is normalized by every subgroup/element in ``over``."""
    if mod is None:
        return None
    if isinstance(mod, Modulus):
        N, verified = mod.subgroup, mod.over
    else:
        N, verified = mod, None
    for x in over:
        if isinstance(x, Subgroup):
            if verified is not None and x <= verified:
                continue
            if not normalizes(x, N):
                raise NormalityError("modulus is not normalized by the acting subgroup")
        elif not _element_normalizes(N.group, x, N):
            raise NormalityError(f"element {x!r} does not normalize the modulus")
    return N


def _element_normalizes(group: Group, k, N: Subgroup) -> bool:
    return all(group.conj(n, k) in N for n in N.small_gens)


# ---------------------------------------------------------------------------
# group-core operations

_WORD_OPS = {"mul", "inv", "conj", "comm", "pow"}


def evaluate(group: Group, word) -> Hashable:
    """Evaluate a word given as nested ``(op, *args)`` tuples over elements.

    ``op`` is one of ``mul`` (any arity), ``inv``, ``conj`` (g, h → h⁻¹gh),
    ``comm`` (g, h → g⁻¹h⁻¹gh) and ``pow`` (g, n).  A bare element is a leaf.
    """
    if isinstance(word, (tuple, list)) and word and isinstance(word[0], str):
        op, args = word[0], word[1:]
        if op not in _WORD_OPS:
            raise WordError(f"unknown word operation {op!r}")
        if op == "pow":
            if len(args) != 2 or not isinstance(args[1], int):
                raise WordError("pow takes an element and an integer")
            return group.power(evaluate(group, args[0]), args[1])
        vals = [evaluate(group, a) for a in args]
        if op == "mul":
            out = group.identity
            for v in vals:
                out = group.mul(out, v)
            return out
        if op == "inv":
            if len(vals) != 1:
                raise WordError("inv takes one argument")
            return group.inv(vals[0])
        if len(vals) != 2:
            raise WordError(f"{op} takes two arguments")
        return group.conj(*vals) if op == "conj" else group.comm(*vals)
    if not group.is_element(word):
        raise WordError(f"leaf {word!r} is not an element of {group.name or group.backend}")
    return word


def generate_subgroup(group: Group, gens: Iterable) -> Subgroup:
    return group.subgroup(gens)


def subgroup_contains(H: Subgroup, g) -> bool:
    return g in H


def _same_group(*subgroups: Subgroup) -> Group:
    group = subgroups[0].group
    for S in subgroups[1:]:
        if S.group is not group:
            raise GroupError("subgroups of different ambient groups")
    return group


def subgroup_index(H: Subgroup, K: Subgroup) -> Index:
    """``[H : H ∩ K]``, exact."""
    group = _same_group(H, K)
    if H <= K:
        return Index(1)
    return group._index(H, K)


def subgroup_intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    group = _same_group(H, K)
    if H <= K:
        return H
    if K <= H:
        return K
    return group._intersect(H, K)


def normalizes(H: Subgroup, N: Subgroup) -> bool:
    """True iff every generator of H conjugates every generator of N into N."""
    group = _same_group(H, N)
    return all(_element_normalizes(group, h, N) for h in H.small_gens)


def join(*subgroups: Subgroup) -> Subgroup:
    group = _same_group(*subgroups)
    gens = []
    for S in subgroups:
        gens.extend(S.small_gens)
    return group.subgroup(gens)


def normalizer(K: Subgroup, N: Subgroup) -> Subgroup:
    """``N_K(N)``: the elements of K that normalize N."""
    group = _same_group(K, N)
    if normalizes(K, N):
        return K
    return group._normalizer(K, N)


def centralizer_mod(H: Subgroup, k, mod=None) -> Subgroup:
    """``C_H(k/N) = {h ∈ H : [h, k] ∈ N}``; N must be normalized by H and k."""
    N = resolve_modulus(mod, H, k)
    if N is not None and not H.group.is_element(k):
        raise MembershipError(f"{k!r} is not in the ambient group")
    return H.group._centralizer(H, k, N)


def class_size_mod(H: Subgroup, g, mod=None) -> Index:
    """Size of the H-conjugacy class of g modulo N, i.e. ``[H : C_H(g/N)]``."""
    C = centralizer_mod(H, g, mod)
    return H.group._index(H, C) if not H <= C else Index(1)


def commensurable(H: Subgroup, K: Subgroup) -> tuple[bool, Index, Index]:
    """Return ``(H ∼ K, [H : H∩K], [K : H∩K])``."""
    a, b = subgroup_index(H, K), subgroup_index(K, H)
    return a.finite and b.finite, a, b


def contained_up_to_finite_index(H: Subgroup, K: Subgroup) -> bool:
    """``H ≲ K``."""
    return subgroup_index(H, K).finite


def subgroup_from_elements(group: Group, elements: Sequence) -> Subgroup:
    """The subgroup generated by ``elements``, built greedily with few generators."""
    gens: list = []
    current = group.trivial
    for g in elements:
        if g not in current:
            gens.append(g)
            current = group.subgroup(gens)
    return current
