"""Brute-force ball oracle.

Only element arithmetic (``mul``, ``inv``, ``identity``) is used here.  When a
check needs "modulo N" or "in K", the caller passes a membership predicate, so
no subgroup algorithm from the rest of the package is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

from .core import Group

Predicate = Callable[[Hashable], bool]


@dataclass(frozen=True)
class Ball:
    """All products of at most ``radius`` generators, stored sphere by sphere."""

    group: Group
    gens: tuple
    radius: int
    spheres: tuple[tuple, ...]

    @property
    def elements(self) -> list:
        return [g for sphere in self.spheres for g in sphere]

    def upto(self, r: int) -> list:
        return [g for sphere in self.spheres[:r + 1] for g in sphere]

    def __len__(self):
        return sum(len(s) for s in self.spheres)

    def __contains__(self, g):
        return any(g in s for s in self.spheres)


def ball_enumerate(group: Group, gens: Sequence, r: int) -> Ball:
    """Exact word-length ball; inverses are added to ``gens`` if missing."""
    closed: list = []
    for g in gens:
        for x in (g, group.inv(g)):
            if x not in closed and x != group.identity:
                closed.append(x)
    seen = {group.identity}
    frontier = [group.identity]
    spheres = [tuple(frontier)]
    for _ in range(r):
        nxt = []
        for g in frontier:
            for s in closed:
                y = group.mul(g, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        spheres.append(tuple(nxt))
        frontier = nxt
    return Ball(group, tuple(closed), r, tuple(spheres))


@dataclass
class OracleReport:
    property: str
    radius: int
    stabilized: bool
    value: Any
    counts: list[int] = field(default_factory=list)

    @property
    def strictly_growing(self) -> bool:
        return all(a < b for a, b in zip(self.counts, self.counts[1:]))


def _distinct(group: Group, items, same: Predicate | None) -> list:
    # representatives of items up to x ~ y iff same(x⁻¹y)
    if same is None:
        return list(dict.fromkeys(items))
    reps: list = []
    for x in items:
        if not any(same(group.mul(group.inv(r), x)) for r in reps):
            reps.append(x)
    return reps


def _class_at(group, ball, k, r, mod_member):
    conj = [group.mul(group.mul(group.inv(h), k), h) for h in ball.upto(r)]
    return _distinct(group, conj, mod_member)


def brute_check(prop: str, instance: dict, r: int) -> OracleReport:
    """Run a ball-restricted computation at radii ``0..r`` and compare the last two.

    ``instance`` keys by property:

    * ``class-size`` / ``fc-membership``: ``group``, ``conjugators`` (gens of H),
      ``element``, optional ``mod_member`` (membership in N);
    * ``centralizer``: same keys; the value is the sorted list of ball elements
      h with ``[h, k] ∈ N``;
    * ``subgroup-index``: ``group``, ``gens`` (of H), ``member`` (membership in K);
      the value counts cosets of ``H ∩ K`` met by the ball.
    """
    group: Group = instance["group"]
    if r < 1:
        raise ValueError("radius must be at least 1")
    if prop in ("class-size", "fc-membership", "centralizer"):
        ball = ball_enumerate(group, instance["conjugators"], r)
        k = instance["element"]
        mod_member = instance.get("mod_member")
        if prop == "centralizer":
            def inside(h):
                c = group.comm(h, k)
                return c == group.identity if mod_member is None else mod_member(c)
            sets = [frozenset(h for h in ball.upto(i) if inside(h)) for i in range(r + 1)]
            counts = [len(s) for s in sets]
            stable = sets[-1] == sets[-2]
            return OracleReport(prop, r, stable, sorted(sets[-1], key=repr), counts)
        counts = [len(_class_at(group, ball, k, i, mod_member)) for i in range(r + 1)]
        stable = counts[-1] == counts[-2]
        if prop == "class-size":
            return OracleReport(prop, r, stable, counts[-1] if stable else None, counts)
        return OracleReport(prop, r, stable, stable, counts)
    if prop == "subgroup-index":
        ball = ball_enumerate(group, instance["gens"], r)
        member = instance["member"]
        counts = [len(_distinct(group, ball.upto(i), member)) for i in range(r + 1)]
        stable = counts[-1] == counts[-2]
        return OracleReport(prop, r, stable, counts[-1] if stable else None, counts)
    raise ValueError(f"unknown oracle property {prop!r}")
