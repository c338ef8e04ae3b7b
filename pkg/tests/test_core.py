import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import aff, cyc
from fcgroups import (evaluate, generate_subgroup, join, normalizes, subgroup_contains,
                      subgroup_index, subgroup_intersect)
from fcgroups.core import INFINITE, Index, MembershipError, Modulus, NormalityError, WordError
from fcgroups.core import centralizer_mod


def test_commutator_s3(fx):
    S3 = fx["S3"]
    c = evaluate(S3, ("comm", cyc(3, (1, 2, 3)), cyc(3, (1, 2))))
    assert c == cyc(3, (1, 2, 3))


def test_commutator_dinf(dinf):
    c = evaluate(dinf, ["comm", aff(dinf, (1,)), aff(dinf, (0,), [2, 1])])
    assert c == aff(dinf, (-2,))


def test_identity_word(fx):
    S3 = fx["S3"]
    g = cyc(3, (1, 2))
    assert evaluate(S3, ("mul", S3.identity, g)) == g
    assert evaluate(S3, ("pow", g, -3)) == g
    assert evaluate(S3, ("conj", cyc(3, (1, 2, 3)), g)) == cyc(3, (1, 3, 2))


def test_word_errors(fx, dinf):
    S3 = fx["S3"]
    with pytest.raises(WordError):
        evaluate(S3, ("frob", S3.identity))
    with pytest.raises(WordError):
        evaluate(S3, ("mul", dinf.identity))
    with pytest.raises(WordError):
        evaluate(S3, ("inv", S3.identity, S3.identity))


def test_generate_examples(fx, dinf):
    S3 = fx["S3"]
    assert generate_subgroup(S3, [cyc(3, (1, 2, 3))]).order == 3
    H = generate_subgroup(dinf, [aff(dinf, (1,), [2, 1])])
    assert H.order == 2 and H.data.L.rank == 0
    assert dinf.identity in H and aff(dinf, (1,), [2, 1]) in H
    assert generate_subgroup(S3, []).is_trivial()
    with pytest.raises(MembershipError):
        generate_subgroup(S3, [(0, 1)])


def test_contains(dinf):
    H = dinf.subgroup([aff(dinf, (1,), [2, 1])])
    assert not subgroup_contains(H, aff(dinf, (0,), [2, 1]))
    Z = dinf.subgroup([aff(dinf, (1,))])
    assert subgroup_contains(Z, aff(dinf, (2,)))
    assert subgroup_contains(H, dinf.identity)


def test_index_examples(dinf):
    G = dinf.whole
    assert subgroup_index(G, dinf.subgroup([aff(dinf, (2,)), aff(dinf, (0,), [2, 1])])) == Index(2)
    assert subgroup_index(G, dinf.subgroup([aff(dinf, (1,), [2, 1])])) == INFINITE
    assert subgroup_index(G, G) == Index(1)


def test_intersect_examples(fx, dinf):
    Z = dinf.subgroup([aff(dinf, (1,))])
    K = dinf.subgroup([aff(dinf, (2,)), aff(dinf, (0,), [2, 1])])
    assert subgroup_intersect(Z, K) == dinf.subgroup([aff(dinf, (2,))])
    assert subgroup_intersect(K, K) == K
    S3 = fx["S3"]
    A3 = S3.subgroup([cyc(3, (1, 2, 3))])
    assert subgroup_intersect(A3, S3.subgroup([cyc(3, (1, 2))])).is_trivial()


def test_normalizes_examples(fx, dinf):
    assert normalizes(dinf.whole, dinf.subgroup([aff(dinf, (1,))]))
    S3 = fx["S3"]
    assert not normalizes(S3.whole, S3.subgroup([cyc(3, (1, 2))]))
    assert normalizes(S3.whole, S3.whole)


def test_modulus_checked(fx):
    S3 = fx["S3"]
    T = S3.subgroup([cyc(3, (1, 2))])
    with pytest.raises(NormalityError):
        Modulus.check(T, S3.whole)
    with pytest.raises(NormalityError):
        centralizer_mod(S3.whole, cyc(3, (1, 2, 3)), T)
    A3 = S3.subgroup([cyc(3, (1, 2, 3))])
    m = Modulus.check(A3, S3.whole)
    assert centralizer_mod(S3.whole, cyc(3, (1, 2)), m) == S3.whole


def test_index_one_iff_contained(fx):
    G = fx["A4"]
    subs = [G.subgroup([g]) for g in G.elements[:8]] + [G.whole, G.trivial]
    for H in subs:
        for K in subs:
            assert (subgroup_index(H, K) == Index(1)) == all(g in K for g in H.gens)


def test_join(dinf):
    H = join(dinf.subgroup([aff(dinf, (2,))]), dinf.subgroup([aff(dinf, (0,), [2, 1])]))
    assert subgroup_index(dinf.whole, H) == Index(2)


# group axioms on random words


def _words(G):
    gens = list(G.generators) + [G.inv(g) for g in G.generators]
    return st.lists(st.sampled_from(gens), max_size=8).map(
        lambda xs: evaluate(G, ("mul", *xs)) if xs else G.identity)


@pytest.mark.parametrize("name", ["S3", "A4", "Dinf", "ZxS3", "Z2C4"])
def test_group_axioms(fx, name):
    G = fx[name]
    w = _words(G)

    @given(w, w, w)
    @settings(max_examples=40, deadline=None)
    def check(a, b, c):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        assert G.mul(a, G.inv(a)) == G.identity == G.mul(G.inv(a), a)
        assert G.mul(G.identity, a) == a == G.mul(a, G.identity)
        assert G.comm(a, b) == G.mul(G.inv(a), G.conj(a, b))
        assert G.is_element(a)

    check()


@pytest.mark.parametrize("name", ["S3", "D8", "Dinf", "ZxS3", "Z2C4"])
def test_closure_idempotent(fx, name):
    G = fx[name]
    w = _words(G)

    @given(st.lists(w, max_size=3))
    @settings(max_examples=25, deadline=None)
    def check(gens):
        H = G.subgroup(gens)
        again = G.subgroup(H.small_gens)
        assert again.key == H.key
        for g in gens:
            assert g in H

    check()
