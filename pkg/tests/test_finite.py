from itertools import product

import pytest

from conftest import cyc
from fcgroups import PermGroup, build_bsgs, conjugacy_classes
from fcgroups.perm import symmetric_group
from fcgroups.series import center_mod, derived_subgroup, normal_closure, upper_central_series


def naive_closure(G):
    elems = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in G.generators:
                y = G.mul(x, s)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def naive_center(G, elems):
    return {z for z in elems if all(G.mul(z, g) == G.mul(g, z) for g in elems)}


def test_bsgs_orders():
    assert build_bsgs(3, [cyc(3, (1, 2, 3)), cyc(3, (1, 2))]).order == 6
    assert build_bsgs(4, [cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))]).order == 8
    assert build_bsgs(5, []).order == 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_symmetric_orders(n):
    import math
    G = symmetric_group(n)
    assert G.order == math.factorial(n)
    assert len(naive_closure(G)) == G.order


def test_bsgs_contains_sifting():
    G = PermGroup(6, [cyc(6, (1, 2, 3)), cyc(6, (4, 5, 6))])
    bsgs = G.whole.data.bsgs
    assert bsgs.order == 9
    assert cyc(6, (1, 3, 2), (4, 5, 6)) in bsgs
    assert cyc(6, (1, 2)) not in bsgs


def test_class_sizes(fx):
    assert sorted(s for _, s in conjugacy_classes(fx["S3"].whole)) == [1, 2, 3]
    assert sorted(s for _, s in conjugacy_classes(fx["D8"].whole)) == [1, 1, 2, 2, 2]
    C4 = PermGroup(4, [cyc(4, (1, 2, 3, 4))])
    assert [s for _, s in conjugacy_classes(C4.whole)] == [1, 1, 1, 1]


def test_centers(fx):
    S3, D8 = fx["S3"], fx["D8"]
    assert center_mod(S3.whole).is_trivial()
    Z = center_mod(D8.whole)
    assert set(Z.data.elements) == {D8.identity, cyc(4, (1, 3), (2, 4))}
    assert center_mod(S3.whole, S3.whole) == S3.whole


def test_upper_central_series(fx):
    D8, S3 = fx["D8"], fx["S3"]
    s = upper_central_series(D8.whole)
    assert [t.order for t in s.terms] == [1, 2, 8] and s.nilpotency_class == 2
    s = upper_central_series(S3.whole)
    assert not s.nilpotent and [t.order for t in s.terms] == [1]
    s = upper_central_series(fx["C12"].whole)
    assert s.nilpotency_class == 1


def test_derived(fx):
    S3, D8 = fx["S3"], fx["D8"]
    assert derived_subgroup(S3.whole) == S3.subgroup([cyc(3, (1, 2, 3))])
    assert derived_subgroup(D8.whole).order == 2
    assert derived_subgroup(fx["C12"].whole).is_trivial()


def test_derived_is_normal_and_contains_commutators(fx):
    G = fx["A4"]
    H = G.subgroup([cyc(4, (1, 2), (3, 4))])
    D = derived_subgroup(H, G.whole)
    for h, k in product(H.data.elements, G.elements):
        assert G.comm(h, k) in D
    for d, g in product(D.small_gens, G.elements):
        assert G.conj(d, g) in D


def test_normal_closure_of_transposition():
    S4 = symmetric_group(4)
    assert normal_closure([cyc(4, (1, 2))], S4.whole).order == 24
    assert normal_closure([cyc(4, (1, 2), (3, 4))], S4.whole).order == 4
