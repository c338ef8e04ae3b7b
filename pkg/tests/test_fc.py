import random

import pytest

from conftest import aff, cyc
from fcgroups import (check_bounded_fc_nilpotent_chain, check_bounded_fc_solvable_chain,
                      commensurable, fc_bound, fc_centralizer_subgroup, fc_membership,
                      make_chain, normalizes)
from fcgroups.core import Index, INFINITE
from fcgroups.fc import BoundCertificate, ChainError, class_size
from fcgroups.series import normal_closure
from test_affine import random_element


def test_membership_examples(dinf):
    G = dinf.whole
    assert fc_membership(G, G, None, aff(dinf, (1,)))
    assert not fc_membership(G, G, None, aff(dinf, (0,), [2, 1]))
    for k in (aff(dinf, (0,), [2, 1]), aff(dinf, (3,), [2, 1])):
        assert fc_membership(G, G, G, k)


def test_membership_requires_normalizing(fx):
    S3 = fx["S3"]
    T = S3.subgroup([cyc(3, (1, 2))])
    # T is normalized by itself but not by (1 2 3)
    assert not fc_membership(S3.whole, T, T, cyc(3, (1, 2, 3)))


def test_fc_subgroup_examples(dinf, zxs3):
    G = dinf.whole
    assert fc_centralizer_subgroup(G, G, check_radius=6) == dinf.subgroup([aff(dinf, (1,))])
    assert fc_centralizer_subgroup(zxs3.whole, zxs3.whole, check_radius=4) == zxs3.whole
    assert fc_centralizer_subgroup(G, G, G) == G


def test_fc_subgroup_z2c4(z2c4):
    G = z2c4.whole
    T = z2c4.subgroup([aff(z2c4, (1, 0)), aff(z2c4, (0, 1))])
    assert fc_centralizer_subgroup(G, T, check_radius=4) == T
    assert fc_centralizer_subgroup(G, G, T) == G


def test_bound_examples(dinf, zxs3, z2, fx):
    cert = fc_bound(dinf.whole, dinf.whole)
    assert cert.bound == 2 and class_size(dinf.whole, cert.element) == Index(2)
    assert cert.element.f == dinf.identity.f
    cert = fc_bound(zxs3.whole, zxs3.whole)
    assert cert.bound == 3
    assert class_size(zxs3.whole, cert.element) == Index(3)
    assert fc_bound(z2.whole, z2.whole).bound == 1
    C12 = fx["C12"]
    cert = fc_bound(C12.whole, C12.whole)
    assert cert == BoundCertificate(1, C12.identity, "exhaustive")


def test_bound_sup_over_members(fx):
    # exhaustive finite check: the bound is the largest class
    S3 = fx["D8"]
    cert = fc_bound(S3.whole, S3.whole)
    assert cert.bound == max(class_size(S3.whole, g).value for g in S3.elements) == 2


def test_commensurable_examples(dinf):
    Z = dinf.subgroup([aff(dinf, (1,))])
    Z2 = dinf.subgroup([aff(dinf, (2,))])
    assert commensurable(Z, Z2) == (True, Index(2), Index(1))
    assert commensurable(Z, dinf.trivial) == (False, INFINITE, Index(1))
    assert commensurable(dinf.whole, Z) == (True, Index(2), Index(1))


def test_nilpotent_chain_examples(dinf, z2c4):
    G = dinf.whole
    Z = dinf.subgroup([aff(dinf, (1,))])
    ch = check_bounded_fc_nilpotent_chain(make_chain(dinf, [dinf.trivial, Z, G]))
    assert ch.valid and ch.bounds == [2, 1]
    T = z2c4.subgroup([aff(z2c4, (1, 0)), aff(z2c4, (0, 1))])
    ch = check_bounded_fc_nilpotent_chain(make_chain(z2c4, [z2c4.trivial, T, z2c4.whole]))
    assert ch.valid and ch.bounds == [4, 1]
    ch = check_bounded_fc_nilpotent_chain(make_chain(dinf, [dinf.trivial, G]))
    assert not ch.valid
    assert ch.reports[0].level == 1 and not ch.reports[0].inside
    with pytest.raises(ChainError):
        ch.require_valid()


def test_solvable_chain_examples(dinf, zxs3, z2):
    Z = dinf.subgroup([aff(dinf, (1,))])
    ch = check_bounded_fc_solvable_chain(make_chain(dinf, [dinf.trivial, Z, dinf.whole]))
    assert ch.valid and ch.bounds == [1, 1]
    a = zxs3.generator_names["a"]
    ZA3 = zxs3.subgroup([aff(zxs3, (1,)), a])
    ch = check_bounded_fc_solvable_chain(make_chain(zxs3, [zxs3.trivial, ZA3, zxs3.whole]))
    assert ch.valid and ch.bounds == [1, 1]
    ch = check_bounded_fc_solvable_chain(make_chain(z2, [z2.trivial, z2.whole]))
    assert ch.valid and ch.bounds == [1]


def test_chain_structure_errors(fx, dinf):
    S3 = fx["S3"]
    T = S3.subgroup([cyc(3, (1, 2))])
    ch = check_bounded_fc_nilpotent_chain(make_chain(S3, [S3.trivial, T, S3.whole]))
    assert not ch.valid and not ch.reports[0].normal
    ch = check_bounded_fc_nilpotent_chain(make_chain(S3, [T, S3.whole]))
    assert ch.structure_error == "H_0 must be trivial"
    Z = dinf.subgroup([aff(dinf, (1,))])
    ch = check_bounded_fc_nilpotent_chain(make_chain(dinf, [dinf.trivial, Z]))
    assert ch.structure_error == "last level must be the whole group"


@pytest.mark.parametrize("name", ["Dinf", "ZxS3", "Z2C4", "D8", "A4"])
def test_monotone_and_normalized(fx, name):
    G = fx[name]
    W = G.whole
    rng = random.Random(3)
    for _ in range(4):
        N = normal_closure([random_element(G, rng)], W)
        N2 = normal_closure(list(N.small_gens) + [random_element(G, rng)], W)
        H = G.subgroup([random_element(G, rng)])
        A = fc_centralizer_subgroup(W, W, N)
        B = fc_centralizer_subgroup(W, W, N2)
        assert A <= B
        assert normalizes(W, A)
        F = fc_centralizer_subgroup(W, H)
        for g in F.small_gens:
            for h in F.small_gens:
                assert G.mul(g, G.inv(h)) in F


@pytest.mark.parametrize("name", ["Dinf", "ZxS3", "Z2C4"])
def test_bound_never_exceeded(fx, name):
    G = fx[name]
    W = G.whole
    rng = random.Random(11)
    for _ in range(3):
        N = normal_closure([random_element(G, rng)], W)
        for mod in (None, N):
            cert = fc_bound(W, W, mod)
            FC = fc_centralizer_subgroup(W, W, mod)
            assert class_size(W, cert.element, mod).value == cert.bound
            for _ in range(15):
                k = random_element(G, rng, 8)
                if k in FC:
                    assert class_size(W, k, mod).value <= cert.bound
