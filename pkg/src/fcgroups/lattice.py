"""Integer lattices in row-style Hermite normal form.

A lattice is stored by its canonical HNF basis: rows in echelon form, each
pivot positive, and every entry above a pivot reduced into ``[0, pivot)``.
Two lattices are equal iff their bases are equal.  All arithmetic uses Python
integers, so there is no overflow to guard against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

Vector = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _axpy(q: int, x: list[int], y: list[int]) -> None:
    # y -= q * x, in place
    if q:
        for i, xi in enumerate(x):
            if xi:
                y[i] -= q * xi


def hnf_with_transform(
    rows: Sequence[Sequence[int]], ncols: int
) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Row-reduce ``rows`` to Hermite normal form.

    Returns ``(H, U, pivots)`` with ``U`` unimodular and ``U @ rows == H``.
    The first ``len(pivots)`` rows of ``H`` are the HNF basis; the remaining
    rows are zero, and the matching rows of ``U`` span the left kernel.
    """
    A = [list(r) for r in rows]
    m = len(A)
    for r in A:
        if len(r) != ncols:
            raise ValueError("rows of unequal length")
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        if pr == m:
            break
        for i in range(pr + 1, m):
            b = A[i][col]
            if b == 0:
                continue
            a = A[pr][col]
            g, x, y = xgcd(a, b)
            p, q = -b // g, a // g
            Ap, Ai = A[pr], A[i]
            A[pr] = [x * s + y * t for s, t in zip(Ap, Ai)]
            A[i] = [p * s + q * t for s, t in zip(Ap, Ai)]
            Up, Ui = U[pr], U[i]
            U[pr] = [x * s + y * t for s, t in zip(Up, Ui)]
            U[i] = [p * s + q * t for s, t in zip(Up, Ui)]
        piv = A[pr][col]
        if piv == 0:
            continue
        if piv < 0:
            A[pr] = [-s for s in A[pr]]
            U[pr] = [-s for s in U[pr]]
            piv = -piv
        for i in range(pr):
            q = A[i][col] // piv
            if q:
                _axpy(q, A[pr], A[i])
                _axpy(q, U[pr], U[i])
        pivots.append(col)
        pr += 1
    return A, U, pivots


def _solve_echelon(basis: Sequence[Sequence[int]], pivots: Sequence[int],
                   target: Sequence[int]) -> list[int] | None:
    # coefficients c with c @ basis == target, or None
    res = list(target)
    coeffs = []
    start = 0
    for row, p in zip(basis, pivots):
        if any(res[start:p]):
            return None
        q, r = divmod(res[p], row[p])
        if r:
            return None
        coeffs.append(q)
        _axpy(q, list(row), res)
        start = p + 1
    if any(res):
        return None
    return coeffs


@dataclass(frozen=True)
class Lattice:
    """A subgroup of ``Z^dim`` held by its canonical HNF basis."""

    dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], dim: int) -> Lattice:
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != dim:
                raise ValueError(f"vector {v} does not have length {dim}")
        H, _, pivots = hnf_with_transform(rows, dim)
        r = len(pivots)
        return cls(dim, tuple(tuple(row) for row in H[:r]), tuple(pivots))

    @classmethod
    def zero(cls, dim: int) -> Lattice:
        return cls(dim, (), ())

    @classmethod
    def full(cls, dim: int) -> Lattice:
        return cls.from_vectors(
            [tuple(int(i == j) for j in range(dim)) for i in range(dim)], dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def determinant(self) -> int | None:
        """``[Z^dim : L]`` for full-rank lattices, else None."""
        if self.rank < self.dim:
            return None
        d = 1
        for row, p in zip(self.basis, self.pivots):
            d *= row[p]
        return d

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative of the coset ``v + L``."""
        res = list(v)
        for row, p in zip(self.basis, self.pivots):
            q = res[p] // row[p]
            if q:
                _axpy(q, list(row), res)
        return tuple(res)

    def __contains__(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        return _solve_echelon(self.basis, self.pivots, v)

    def combine(self, coeffs: Sequence[int]) -> Vector:
        out = [0] * self.dim
        for c, row in zip(coeffs, self.basis):
            _axpy(-c, list(row), out)
        return tuple(out)

    def __add__(self, other: Lattice) -> Lattice:
        return Lattice.from_vectors(self.basis + other.basis, self.dim)

    def __and__(self, other: Lattice) -> Lattice:
        r = self.rank
        rows = list(self.basis) + [tuple(-x for x in b) for b in other.basis]
        H, U, pivots = hnf_with_transform(rows, self.dim)
        kernel = [self.combine(U[i][:r]) for i in range(len(pivots), len(rows))]
        return Lattice.from_vectors(kernel, self.dim)

    def __le__(self, other: Lattice) -> bool:
        return all(b in other for b in self.basis)

    def spans_within(self, other: Lattice) -> bool:
        """True iff the rational span of ``self`` lies in that of ``other``."""
        return (self + other).rank == other.rank

    def index_of(self, sub: Lattice) -> int | None:
        """``[self : sub]`` for ``sub <= self``; None when infinite."""
        if not sub <= self:
            raise ValueError("not a sublattice")
        if sub.rank < self.rank:
            return None
        coords = [self.coordinates(b) for b in sub.basis]
        square = Lattice.from_vectors(coords, self.rank)
        return square.determinant

    def coset_representatives(self) -> Iterator[Vector]:
        """Representatives of ``Z^dim / L`` for a full-rank lattice."""
        if self.rank < self.dim:
            raise ValueError("infinitely many cosets")
        ranges = [range(row[p]) for row, p in zip(self.basis, self.pivots)]
        return (tuple(c) for c in product(*ranges))


def lattice_hnf(vectors: Iterable[Sequence[int]], dim: int | None = None) -> Lattice:
    vectors = [tuple(v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("dimension required for an empty vector list")
        dim = len(vectors[0])
    return Lattice.from_vectors(vectors, dim)


def lattice_index(L1: Lattice, L2: Lattice) -> tuple[int | None, int | None, bool]:
    """Return ``([L1 : L1∩L2], [L2 : L1∩L2], commensurable)``; None is infinite."""
    if L1.dim != L2.dim:
        raise ValueError("lattices of different ambient rank")
    meet = L1 & L2
    i12, i21 = L1.index_of(meet), L2.index_of(meet)
    return i12, i21, i12 is not None and i21 is not None


def solve_affine(offset: Sequence[int], columns: Sequence[Sequence[int]],
                 modulus: Lattice) -> tuple[Vector, Lattice] | None:
    """Solve ``offset + sum(y_j * columns[j]) ∈ modulus`` over integers y.

    Returns a particular solution and the lattice of homogeneous solutions
    (in ``Z^len(columns)``), or None when there is no solution.
    """
    d = len(columns)
    m = modulus.dim
    rows = [tuple(c) for c in columns] + list(modulus.basis)
    H, U, pivots = hnf_with_transform(rows, m)
    r = len(pivots)
    coeffs = _solve_echelon(H[:r], pivots, [-x for x in offset])
    if coeffs is None:
        return None
    y0 = [0] * d
    for c, urow in zip(coeffs, U):
        if c:
            for j in range(d):
                y0[j] += c * urow[j]
    kernel = [U[i][:d] for i in range(r, len(rows))]
    return tuple(y0), Lattice.from_vectors(kernel, d)
