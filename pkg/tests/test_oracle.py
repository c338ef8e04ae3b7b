from conftest import aff
from fcgroups import ball_enumerate, brute_check


def test_ball_radius_one(dinf):
    t, r = dinf.generators
    B = ball_enumerate(dinf, [t, dinf.inv(t), r], 1)
    assert set(B.elements) == {dinf.identity, aff(dinf, (1,)), aff(dinf, (-1,)), r}
    assert len(B) == 4


def test_ball_radius_zero(z2c4):
    assert ball_enumerate(z2c4, z2c4.generators, 0).elements == [z2c4.identity]


def test_ball_covers_s3(fx):
    S3 = fx["S3"]
    assert len(ball_enumerate(S3, S3.generators, 6)) == 6


def test_ball_monotone(zxs3):
    small = set(ball_enumerate(zxs3, zxs3.generators, 2).elements)
    assert small <= set(ball_enumerate(zxs3, zxs3.generators, 3).elements)


def test_class_of_translation(dinf):
    rep = brute_check("class-size", {"group": dinf, "conjugators": dinf.generators,
                                     "element": aff(dinf, (1,))}, 4)
    assert rep.stabilized and rep.value == 2


def test_class_of_reflection_grows(dinf):
    rep = brute_check("class-size", {"group": dinf, "conjugators": dinf.generators,
                                     "element": aff(dinf, (0,), [2, 1])}, 5)
    assert not rep.stabilized and rep.strictly_growing


def test_class_mod_translations(dinf):
    Z = dinf.subgroup([aff(dinf, (1,))])
    rep = brute_check("class-size", {"group": dinf, "conjugators": dinf.generators,
                                     "element": aff(dinf, (0,), [2, 1]),
                                     "mod_member": Z.__contains__}, 4)
    assert rep.stabilized and rep.value == 1


def test_trivial_group(fx):
    T = fx["trivial"]
    for prop in ("class-size", "fc-membership", "centralizer"):
        rep = brute_check(prop, {"group": T, "conjugators": T.generators,
                                 "element": T.identity}, 2)
        assert rep.stabilized
    rep = brute_check("subgroup-index", {"group": T, "gens": [], "member": lambda g: True}, 2)
    assert rep.stabilized and rep.value == 1


def test_subgroup_index_oracle(dinf):
    K = dinf.subgroup([aff(dinf, (2,)), aff(dinf, (0,), [2, 1])])
    rep = brute_check("subgroup-index", {"group": dinf, "gens": dinf.generators,
                                         "member": K.__contains__}, 4)
    assert rep.stabilized and rep.value == 2


def test_centralizer_oracle(dinf):
    rep = brute_check("centralizer", {"group": dinf, "conjugators": dinf.generators,
                                      "element": aff(dinf, (0,), [2, 1])}, 4)
    assert rep.stabilized and set(rep.value) == {dinf.identity, aff(dinf, (0,), [2, 1])}
