from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from fcgroups.lattice import Lattice, lattice_hnf, lattice_index, solve_affine, xgcd

vec2 = st.tuples(st.integers(-9, 9), st.integers(-9, 9))
vec3 = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))


def test_hnf_worked_example():
    L = lattice_hnf([(2, 0), (1, 3)])
    assert L.basis == ((1, 3), (0, 6))
    assert L.determinant == 6


def test_hnf_identity_and_empty():
    assert lattice_hnf([(1, 0), (0, 1)]).basis == ((1, 0), (0, 1))
    L = lattice_hnf([], dim=3)
    assert L.rank == 0 and L.determinant is None


def test_index_of_2z_and_3z():
    a, b, ok = lattice_index(lattice_hnf([(2,)]), lattice_hnf([(3,)]))
    assert (a, b, ok) == (3, 2, True)
    assert lattice_hnf([(2,)]) & lattice_hnf([(3,)]) == lattice_hnf([(6,)])


def test_index_against_full_lattice():
    L = lattice_hnf([(1, 3), (0, 6)])
    assert Lattice.full(2).index_of(L) == 6


def test_rank_zero_not_commensurable():
    Z = lattice_hnf([(1,)])
    a, b, ok = lattice_index(Z, Lattice.zero(1))
    assert a is None and b == 1 and not ok
    assert lattice_index(Lattice.zero(1), Lattice.zero(1))[2]


def test_xgcd():
    for a, b in product(range(-7, 8), repeat=2):
        g, x, y = xgcd(a, b)
        assert g >= 0 and x * a + y * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def _brute_members(vectors, box):
    # all integer combinations with small coefficients, restricted to a box
    pts = set()
    for cs in product(range(-4, 5), repeat=len(vectors)):
        v = tuple(sum(c * w[i] for c, w in zip(cs, vectors)) for i in range(2))
        if all(abs(x) <= box for x in v):
            pts.add(v)
    return pts


@given(st.lists(vec2, min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_hnf_canonical_under_reordering_and_row_ops(vs):
    L = lattice_hnf(vs, 2)
    assert lattice_hnf(list(reversed(vs)), 2) == L
    mixed = list(vs) + [tuple(a + 2 * b for a, b in zip(vs[0], vs[-1]))]
    assert lattice_hnf(mixed, 2) == L
    for row, p in zip(L.basis, L.pivots):
        assert row[p] > 0 and all(x == 0 for x in row[:p])
    for i, p in enumerate(L.pivots):
        for row in L.basis[:i]:
            assert 0 <= row[p] < L.basis[i][p]


@given(st.lists(vec2, min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_membership_matches_combination_oracle(vs):
    L = lattice_hnf(vs, 2)
    for v in _brute_members(vs, 3):
        assert v in L
    # reduce is a canonical coset representative
    for v in product(range(-3, 4), repeat=2):
        r = L.reduce(v)
        assert tuple(a - b for a, b in zip(v, r)) in L
        assert L.reduce(r) == r


@given(vec3, vec3, vec3, st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_index_multiplicative(a, b, c, m, n):
    L1 = lattice_hnf([a, b, c], 3)
    if L1.rank < 3:
        return
    L2 = lattice_hnf([tuple(m * x for x in a), tuple(n * x for x in b), c], 3)
    full = Lattice.full(3)
    assert full.index_of(L1) * L1.index_of(L2) == full.index_of(L2)
    assert L1.index_of(L2) == m * n


@given(vec2, vec2, st.lists(vec2, max_size=2), vec2)
@settings(max_examples=60, deadline=None)
def test_solve_affine_against_search(c1, c2, mod_vs, offset):
    M = lattice_hnf(mod_vs, 2)
    sol = solve_affine(offset, [c1, c2], M)
    found = [y for y in product(range(-6, 7), repeat=2)
             if tuple(o + y[0] * p + y[1] * q for o, p, q in zip(offset, c1, c2)) in M]
    if sol is None:
        assert not found
        return
    y0, K = sol
    assert tuple(o + y0[0] * p + y0[1] * q for o, p, q in zip(offset, c1, c2)) in M
    for y in found:
        assert tuple(a - b for a, b in zip(y, y0)) in K


@given(st.lists(vec2, max_size=3), st.lists(vec2, max_size=3))
@settings(max_examples=60, deadline=None)
def test_intersection_against_box(us, ws):
    A, B = lattice_hnf(us, 2), lattice_hnf(ws, 2)
    C = A & B
    for v in product(range(-6, 7), repeat=2):
        assert (v in C) == (v in A and v in B)
