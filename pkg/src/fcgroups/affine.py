"""Groups ``Z^n ⋊_ρ F`` with F a finite permutation group.

An element is a pair ``(v, f)``; the product is ``(w, g)(v, f) = (w + ρ(g)v, gf)``.
A subgroup S is stored as its finite image P, its translation lattice
``L = S ∩ Z^n`` in HNF, and a section ``p ↦ v_p`` reduced modulo L.

Centralizers, normalizers and FC-centralizers are found fiber by fiber over
the finite image: on each fiber the defining condition is an integer affine
congruence in the lattice coordinates, solved exactly with HNF.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .core import INFINITE, Group, GroupError, Index, Subgroup, centralizer_mod
from .core import class_size_mod as _class_size_mod
from .lattice import Lattice, Vector, solve_affine
from .perm import ENUMERATION_LIMIT, Perm, PermGroup, build_bsgs, inv as pinv, mul as pmul

Matrix = tuple[tuple[int, ...], ...]


class ActionError(GroupError):
    """The supplied action is not a homomorphism into GL(n, Z)."""


class AffineElement(NamedTuple):
    v: Vector
    f: Perm


def matvec(M: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in A)


def vadd(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def determinant(M: Matrix) -> int:
    """Exact integer determinant (Bareiss)."""
    A = [list(r) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


@dataclass(frozen=True)
class AffineData:
    P: frozenset
    L: Lattice
    section: dict

    def key(self):
        return (self.P, self.L.basis, tuple(sorted(self.section.items())))


class AffineGroup(Group):
    """``Z^rank ⋊ F`` where ``action[i]`` is ρ of the i-th generator of F."""

    backend = "affine"

    def __init__(self, rank: int, finite_part: PermGroup,
                 action: Sequence[Sequence[Sequence[int]]], name: str = ""):
        if rank < 0:
            raise GroupError("rank must be non-negative")
        self.rank = rank
        self.finite_part = finite_part
        self.name = name
        mats = []
        for M in action:
            M = tuple(tuple(int(x) for x in row) for row in M)
            if len(M) != rank or any(len(row) != rank for row in M):
                raise ActionError(f"action matrix {M} is not {rank}x{rank}")
            if abs(determinant(M)) != 1:
                raise ActionError(f"action matrix {M} is not unimodular")
            mats.append(M)
        if len(mats) != len(finite_part.generators):
            raise ActionError("one action matrix per finite-part generator required")
        self.action = tuple(mats)
        self._rho = self._extend_action()

    def _extend_action(self) -> dict[Perm, Matrix]:
        # BFS over the Cayley graph of F; every edge must agree with ρ(gs) = ρ(g)ρ(s)
        F = self.finite_part
        ident = F.identity
        eye = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        rho = {ident: eye}
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for s, M in zip(F.generators, self.action):
                h = pmul(g, s)
                R = matmul(rho[g], M)
                if h in rho:
                    if rho[h] != R:
                        raise ActionError(
                            "action is not a homomorphism: relation violated at "
                            f"{[x + 1 for x in h]}")
                else:
                    if len(rho) >= ENUMERATION_LIMIT:
                        raise GroupError("finite part too large to enumerate")
                    rho[h] = R
                    queue.append(h)
        return rho

    def rho(self, f: Perm) -> Matrix:
        return self._rho[f]

    @property
    def finite_elements(self) -> list[Perm]:
        return sorted(self._rho)

    @property
    def zero(self) -> Vector:
        return (0,) * self.rank

    @property
    def identity(self) -> AffineElement:
        return AffineElement(self.zero, self.finite_part.identity)

    def translation(self, v: Sequence[int]) -> AffineElement:
        return AffineElement(tuple(v), self.finite_part.identity)

    def lift(self, f: Perm) -> AffineElement:
        return AffineElement(self.zero, f)

    @property
    def generators(self) -> tuple[AffineElement, ...]:
        units = [self.translation(tuple(int(i == j) for j in range(self.rank)))
                 for i in range(self.rank)]
        return tuple(units) + tuple(self.lift(s) for s in self.finite_part.generators)

    @property
    def generator_names(self) -> dict[str, AffineElement]:
        names = {f"t{i + 1}": g for i, g in enumerate(self.generators[:self.rank])}
        for name, s in zip(self.finite_part.names, self.finite_part.generators):
            names[name] = self.lift(s)
        return names

    def mul(self, a, b):
        return AffineElement(vadd(a.v, matvec(self._rho[a.f], b.v)), pmul(a.f, b.f))

    def inv(self, a):
        fi = pinv(a.f)
        return AffineElement(tuple(-x for x in matvec(self._rho[fi], a.v)), fi)

    def is_element(self, g) -> bool:
        return (isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], tuple)
                and len(g[0]) == self.rank and all(isinstance(x, int) for x in g[0])
                and g[1] in self._rho)

    def format_element(self, g):
        return {"v": list(g.v), "f": [x + 1 for x in g.f]}

    def parse_element(self, obj) -> AffineElement:
        if not isinstance(obj, dict) or set(obj) != {"v", "f"}:
            raise GroupError(f"expected an object with keys 'v' and 'f', got {obj!r}")
        g = AffineElement(tuple(obj["v"]), self.finite_part.parse_element(obj["f"]))
        if not self.is_element(g):
            raise GroupError(f"{obj!r} is not an element of {self.name or 'the group'}")
        return g

    # closure data

    def _close(self, gens) -> AffineData:
        ident = self.finite_part.identity
        reps = {ident: self.identity}
        queue = deque([ident])
        translations = []
        while queue:
            p = queue.popleft()
            sp = reps[p]
            for x in gens:
                y = self.mul(sp, x)
                if y.f in reps:
                    translations.append(self.mul(y, self.inv(reps[y.f])).v)
                else:
                    reps[y.f] = y
                    queue.append(y.f)
        L = Lattice.from_vectors(translations, self.rank)
        return self._assemble({p: r.v for p, r in reps.items()}, L)

    def _assemble(self, vectors: dict, L: Lattice) -> AffineData:
        return AffineData(frozenset(vectors), L,
                          {p: L.reduce(v) for p, v in vectors.items()})

    def _wrap(self, data: AffineData) -> Subgroup:
        H = Subgroup(self, (), data)
        H.gens = H.small_gens
        return H

    def _contains(self, data: AffineData, g) -> bool:
        if g.f not in data.P:
            return False
        return vsub(g.v, data.section[g.f]) in data.L

    def _order(self, data: AffineData) -> int | None:
        return len(data.P) if data.L.rank == 0 else None

    def _key(self, data: AffineData):
        return data.key()

    def _small_gens(self, H: Subgroup) -> tuple:
        data = H.data
        gens = [self.translation(b) for b in data.L.basis]
        pgens: list[Perm] = []
        order = 1
        for p in sorted(data.P):
            if order == len(data.P):
                break
            cand = build_bsgs(self.finite_part.degree, pgens + [p])
            if cand.order > order:
                pgens.append(p)
                order = cand.order
        gens.extend(AffineElement(data.section[p], p) for p in pgens)
        return tuple(gens)

    def _intersect(self, H, K):
        hd, kd = H.data, K.data
        L = hd.L & kd.L
        vectors = {}
        for p in hd.P & kd.P:
            d = vsub(kd.section[p], hd.section[p])
            sol = solve_affine(tuple(-x for x in d), hd.L.basis, kd.L)
            if sol is not None:
                vectors[p] = vadd(hd.section[p], hd.L.combine(sol[0]))
        return self._wrap(self._assemble(vectors, L))

    def _index(self, H, K) -> Index:
        meet = self._intersect(H, K)
        lidx = H.data.L.index_of(meet.data.L)
        if lidx is None:
            return INFINITE
        return Index(len(H.data.P) // len(meet.data.P) * lidx)

    # fiber solving

    def _modulus_data(self, N: Subgroup | None):
        if N is None:
            ident = self.finite_part.identity
            return frozenset([ident]), Lattice.zero(self.rank), {ident: self.zero}
        return N.data.P, N.data.L, N.data.section

    def _solve(self, build, dim: int, N: Subgroup | None):
        """Solve ``build(y) ⊆ N`` over ``y ∈ Z^dim``.

        ``build`` maps coordinates to a list of elements whose translation
        parts are affine in ``y`` and whose finite parts do not depend on it.
        """
        PN, LN, secN = self._modulus_data(N)

        def phi(y):
            out = []
            parts = []
            for e in build(y):
                parts.append(e.f)
                if e.f not in PN:
                    return None, parts
                out.extend(vsub(e.v, secN[e.f]))
            return tuple(out), parts

        t, parts0 = phi((0,) * dim)
        if t is None:
            return None
        cols = []
        for j in range(dim):
            c, parts = phi(tuple(int(i == j) for i in range(dim)))
            if parts != parts0:
                raise GroupError("internal: finite part varies along a fiber")
            cols.append(vsub(c, t))
        copies = len(parts0)
        n = self.rank
        blocks = [(0,) * (n * i) + b + (0,) * (n * (copies - i - 1))
                  for i in range(copies) for b in LN.basis]
        return solve_affine(t, cols, Lattice.from_vectors(blocks, n * copies))

    def _fibers(self, S: Subgroup, make_elements, N):
        # per finite-part fiber of S: solve make_elements(candidate) ⊆ N
        sd = S.data
        L = sd.L
        vectors, kernel = {}, None
        for p in sorted(sd.P):
            base = sd.section[p]

            def build(y, base=base, p=p):
                return make_elements(AffineElement(vadd(base, L.combine(y)), p))

            sol = self._solve(build, L.rank, N)
            if sol is None:
                continue
            y0, ker = sol
            vectors[p] = vadd(base, L.combine(y0))
            fiber_lattice = Lattice.from_vectors([L.combine(y) for y in ker.basis], self.rank)
            if kernel is None:
                kernel = fiber_lattice
            elif fiber_lattice != kernel:
                raise GroupError("internal: fiber lattices disagree")
        return self._wrap(self._assemble(vectors, kernel))

    def _centralizer(self, H, k, N):
        def make(h):
            return [self.mul(self.mul(h, k), self.inv(self.mul(k, h)))]
        return self._fibers(H, make, N)

    def _normalizer(self, K, N):
        ngens = N.small_gens

        def make(k):
            kinv = self.inv(k)
            return [self.mul(self.mul(k, n), kinv) for n in ngens]
        return self._fibers(K, make, N)

    def _translation_centralizer_lattice(self, H: Subgroup, k, N) -> Lattice:
        """Coordinates (over H's lattice basis) of ``{l ∈ L_H : [(l,1), k] ∈ N}``."""
        LH = H.data.L

        def build(y):
            h = self.translation(LH.combine(y))
            return [self.mul(self.mul(h, k), self.inv(self.mul(k, h)))]

        sol = self._solve(build, LH.rank, N)
        return sol[1]

    def _fc_subgroup(self, K, H, N):
        from .core import normalizer

        S = K if N is None else normalizer(K, N)
        sd = S.data
        rH = H.data.L.rank
        keep = {}
        for f in sorted(sd.P):
            k = AffineElement(sd.section[f], f)
            # finite class modulo N iff the translation part of C_H(k/N) has full rank
            if self._translation_centralizer_lattice(H, k, N).rank == rH:
                keep[f] = sd.section[f]
        for a in keep:
            for b in keep:
                if pmul(a, b) not in keep:
                    raise GroupError("internal: FC finite image is not closed")
        return self._wrap(self._assemble(keep, sd.L))

    def _fc_bound(self, K, H, N):
        from .fc import BoundCertificate

        FC = self._fc_subgroup(K, H, N)
        fd, hd = FC.data, H.data
        rH, rF = hd.L.rank, fd.L.rank
        best = None
        for f in sorted(fd.P):
            base_u = fd.section[f]
            lat_index = None
            fat, thin = [], []
            for p in sorted(hd.P):
                base_w = hd.section[p]

                def build(c, base_w=base_w, p=p):
                    h = AffineElement(vadd(base_w, hd.L.combine(c[:rH])), p)
                    k = AffineElement(vadd(base_u, fd.L.combine(c[rH:])), f)
                    return [self.mul(self.mul(h, k), self.inv(self.mul(k, h)))]

                sol = self._solve(build, rH + rF, N)
                if sol is None:
                    continue
                if p == self.finite_part.identity:
                    # translations of H centralizing k: the same lattice for every z
                    ky = Lattice.from_vectors([v[:rH] for v in sol[1].basis], rH)
                    lat_index = ky.determinant
                c0, ker = sol
                M = Lattice.from_vectors([v[rH:] for v in ker.basis], rF)
                (fat if M.rank == rF else thin).append((c0[rH:], M))
            common = Lattice.full(rF)
            for _, M in fat:
                common = common & M
            least, residue = None, None
            for r in common.coset_representatives():
                count = sum(1 for z0, M in fat if vsub(r, z0) in M)
                if least is None or count < least:
                    least, residue = count, r
            if len(hd.P) % least:
                raise GroupError("internal: centralizer image order does not divide")
            value = len(hd.P) // least * lat_index
            if best is None or value > best[0]:
                z = _avoid(residue, common, thin)
                best = (value, AffineElement(vadd(base_u, fd.L.combine(z)), f))
        return BoundCertificate(best[0], best[1], "generic-stabilizer-formula")


def _avoid(residue: Vector, common: Lattice, thin) -> Vector:
    """A point of ``residue + common`` outside every lower-rank coset in ``thin``.

    Finitely many cosets of infinite-index sublattices never cover a coset of
    a full-rank lattice, so the expanding search terminates.
    """
    dim = len(residue)
    radius = 0
    while True:
        for coeffs in product(range(-radius, radius + 1), repeat=dim):
            if max((abs(c) for c in coeffs), default=0) != radius:
                continue
            z = vadd(residue, common.combine(coeffs))
            if not any(vsub(z, z0) in M for z0, M in thin):
                return z
        radius += 1
        if dim == 0:
            raise GroupError("internal: no generic point in a rank-0 coset")


def schreier_closure(G: AffineGroup, gens) -> Subgroup:
    """``⟨gens⟩`` with its (P, L, section) closure data."""
    return G.subgroup(gens)


def centralizer_mod_affine(H: Subgroup, k, mod=None) -> Subgroup:
    """``{h ∈ H : [h, k] ∈ N}``."""
    return centralizer_mod(H, k, mod)


def class_size_mod(G: AffineGroup, g, mod=None) -> Index:
    """Size of the G-class of g modulo N."""
    return _class_size_mod(G.whole, g, mod)
