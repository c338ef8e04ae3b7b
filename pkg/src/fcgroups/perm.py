"""Finite permutation groups: Schreier-Sims, membership, classes.

Permutations are tuples of 0-based images; ``p[i]`` is the image of ``i``.
Products compose left to right, ``mul(a, b)[i] == b[a[i]]``.  Files and
reports use 1-based image arrays.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import Group, GroupError, Index, Subgroup, subgroup_from_elements

Perm = tuple[int, ...]

# groups up to this order also keep their full element set
ENUMERATION_LIMIT = 5000


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[x] for x in a)


def inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def is_identity(a: Perm) -> bool:
    return all(i == x for i, x in enumerate(a))


def first_moved(a: Perm) -> int | None:
    for i, x in enumerate(a):
        if i != x:
            return i
    return None


def check_perm(p: Sequence[int], degree: int) -> None:
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise GroupError(f"{list(p)} is not a permutation of degree {degree}")


def cycle_string(p: Perm) -> str:
    """1-based cycle notation, e.g. ``(1 2 3)``."""
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        seen.add(i)
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) or "()"


def from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation from 1-based cycles."""
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def orbit_transversal(point: int, gens: Sequence[Perm], degree: int) -> dict[int, Perm]:
    """Map each orbit point to a permutation carrying ``point`` to it."""
    trans = {point: identity_perm(degree)}
    queue = deque([point])
    while queue:
        b = queue.popleft()
        u = trans[b]
        for s in gens:
            c = s[b]
            if c not in trans:
                trans[c] = mul(u, s)
                queue.append(c)
    return trans


@dataclass
class BSGS:
    """Base and strong generating set with its stabilizer chain."""

    degree: int
    base: list[int]
    strong: list[Perm]
    transversals: list[dict[int, Perm]] = field(default_factory=list)

    @property
    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def level_gens(self, i: int) -> list[Perm]:
        fixed = self.base[:i]
        return [s for s in self.strong if all(s[b] == b for b in fixed)]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            t = self.transversals[level]
            if beta not in t:
                return g, level
            g = mul(g, inv(t[beta]))
        return g, len(self.base)

    def __contains__(self, g: Perm) -> bool:
        h, level = self.sift(g)
        return level == len(self.base) and is_identity(h)

    def elements(self) -> Iterator[Perm]:
        levels = [list(t.values()) for t in reversed(self.transversals)]
        ident = identity_perm(self.degree)
        for choice in product(*levels):
            g = ident
            for u in choice:
                g = mul(g, u)
            yield g


def build_bsgs(degree: int, gens: Iterable[Perm]) -> BSGS:
    """Deterministic Schreier-Sims; base points are first moved points."""
    strong: list[Perm] = []
    for g in gens:
        if not is_identity(g) and g not in strong:
            strong.append(g)
    base: list[int] = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(first_moved(g))
    bsgs = BSGS(degree, base, strong)
    bsgs.transversals = [orbit_transversal(b, bsgs.level_gens(i), degree)
                         for i, b in enumerate(base)]
    i = len(base) - 1
    while i >= 0:
        bi = base[i]
        trans = bsgs.transversals[i]
        extended = False
        for beta, u in list(trans.items()):
            for s in bsgs.level_gens(i):
                us = mul(u, s)
                schreier = mul(us, inv(trans[us[bi]]))
                h, j = bsgs.sift(schreier, i + 1)
                if j < len(base) or not is_identity(h):
                    strong.append(h)
                    if j == len(base):
                        base.append(first_moved(h))
                        bsgs.transversals.append({})
                    for level in range(i + 1, j + 1):
                        bsgs.transversals[level] = orbit_transversal(
                            base[level], bsgs.level_gens(level), degree)
                    i = j
                    extended = True
                    break
            if extended:
                break
        if not extended:
            i -= 1
    return bsgs


@dataclass
class FiniteData:
    bsgs: BSGS

    @cached_property
    def elements(self) -> frozenset[Perm]:
        return frozenset(self.bsgs.elements())

    @cached_property
    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)


class PermGroup(Group):
    """A finite group of permutations on ``degree`` points."""

    backend = "finite-permutation"

    def __init__(self, degree: int, gens: Sequence[Sequence[int]] = (),
                 names: Sequence[str] | None = None, name: str = ""):
        if degree < 1:
            raise GroupError("degree must be positive")
        self.degree = degree
        perms = []
        for g in gens:
            check_perm(g, degree)
            perms.append(tuple(g))
        self._gens = tuple(perms)
        self.names = tuple(names) if names is not None else tuple(
            f"g{i + 1}" for i in range(len(perms)))
        if len(self.names) != len(self._gens):
            raise GroupError("one name per generator required")
        self.name = name

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    @property
    def generators(self) -> tuple[Perm, ...]:
        return self._gens

    def mul(self, a, b):
        return mul(a, b)

    def inv(self, a):
        return inv(a)

    def is_element(self, g) -> bool:
        if not (isinstance(g, tuple) and len(g) == self.degree
                and sorted(g) == list(range(self.degree))):
            return False
        return g in self.whole.data.bsgs

    def format_element(self, g):
        return [x + 1 for x in g]

    def parse_element(self, obj) -> Perm:
        if not isinstance(obj, (list, tuple)) or not all(isinstance(x, int) for x in obj):
            raise GroupError(f"expected a 1-based image array, got {obj!r}")
        g = tuple(x - 1 for x in obj)
        check_perm(g, self.degree)
        return g

    @cached_property
    def elements(self) -> list[Perm]:
        return self.whole.data.sorted_elements

    @property
    def order(self) -> int:
        return self.whole.order

    # closure data

    def _close(self, gens):
        return FiniteData(build_bsgs(self.degree, gens))

    def _contains(self, data: FiniteData, g) -> bool:
        if data.bsgs.order <= ENUMERATION_LIMIT:
            return g in data.elements
        return g in data.bsgs

    def _order(self, data: FiniteData) -> int:
        return data.bsgs.order

    def _key(self, data: FiniteData):
        return data.elements

    def _small_gens(self, H: Subgroup) -> tuple:
        gens: list[Perm] = []
        order = 1
        for g in list(H.gens) + list(H.data.bsgs.strong):
            if order == H.order:
                break
            cand = build_bsgs(self.degree, gens + [g])
            if cand.order > order:
                gens.append(g)
                order = cand.order
        return tuple(gens)

    def _from_elements(self, elements) -> Subgroup:
        return subgroup_from_elements(self, sorted(elements))

    def _intersect(self, H, K):
        small, big = (H, K) if H.order <= K.order else (K, H)
        return self._from_elements(g for g in small.data.elements if g in big)

    def _index(self, H, K) -> Index:
        return Index(H.order // self._intersect(H, K).order)

    def _centralizer(self, H, k, N):
        if N is None:
            return self._from_elements(h for h in H.data.elements
                                       if mul(h, k) == mul(k, h))
        return self._from_elements(h for h in H.data.elements if self.comm(h, k) in N)

    def _normalizer(self, K, N):
        ngens = N.small_gens
        return self._from_elements(
            k for k in K.data.elements if all(self.conj(n, k) in N for n in ngens))

    def _fc_subgroup(self, K, H, N):
        # every class of a finite group is finite
        return K if N is None else self._normalizer(K, N)

    def _fc_bound(self, K, H, N):
        from .fc import BoundCertificate

        FC = self._fc_subgroup(K, H, N)
        best, witness = 0, self.identity
        for k in FC.data.sorted_elements:
            C = self._centralizer(H, k, N)
            size = H.order // C.order
            if size > best:
                best, witness = size, k
        return BoundCertificate(best, witness, "exhaustive")


def conjugacy_classes(H: Subgroup) -> list[tuple[Perm, int]]:
    """Classes of a finite permutation group as (least element, size), sorted."""
    group = H.group
    if not isinstance(group, PermGroup):
        raise GroupError("conjugacy classes are computed for finite backends only")
    gens = H.small_gens
    seen: set[Perm] = set()
    classes = []
    for g in H.data.sorted_elements:
        if g in seen:
            continue
        orbit = {g}
        queue = deque([g])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = group.conj(x, s)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        classes.append((min(orbit), len(orbit)))
    return sorted(classes, key=lambda c: (c[1], c[0]))


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(1, [], name="S1")
    gens = [from_cycles(n, list(range(1, n + 1))), from_cycles(n, [1, 2])]
    return PermGroup(n, gens, names=["c", "t"], name=f"S{n}")
