import pyhall2max as h2m


def test_builders_and_order():
    assert h2m.symmetric(4).order() == 24
    assert h2m.cyclic(15).order() == 15
    assert h2m.psl2(7).order() == 168
    assert len(h2m.alternating(4)) == 12


def test_perm_arithmetic():
    p = h2m.Perm.from_cycles(5, [[1, 2, 3]])
    q = h2m.Perm.from_cycles(5, [[3, 4]])
    assert (p * p * p).is_identity()
    assert (p * q).cycle_string() == "(1 2 4 3)"
    assert p.inverse() * p == h2m.Perm.identity(5)


def test_membership_and_orbit():
    g = h2m.alternating(4)
    assert g.contains(h2m.Perm.from_cycles(4, [[1, 2, 3]]))
    assert not g.contains(h2m.Perm.from_cycles(4, [[1, 2]]))
    assert g.orbit(0) == [0, 1, 2, 3]


def test_lattice_summary():
    lat = h2m.lattice_summary(h2m.symmetric(3))
    assert lat["order"] == 6
    assert lat["subgroup_count"] == 6


def test_hypothesis():
    assert h2m.check_hypothesis(h2m.symmetric(3))["holds"]
    res = h2m.check_hypothesis(h2m.alternating(4))
    assert not res["holds"]
    assert res["witness"]["gcd"] == 2


def test_verify_theorem():
    rep = h2m.verify_theorem(h2m.cyclic(30), "c30")
    assert rep["applicability"] == "supersolvable-branch"
    assert rep["squarefree"]["pass"]

    rep = h2m.verify_theorem(h2m.alternating(4), "a4")
    assert rep["applicability"] == "hypothesis-fails"


def test_psl_witnesses():
    rep = h2m.verify_psl_witnesses()
    assert rep["all_pass"]
    names = [c["name"] for c in rep["checks"]]
    assert names == ["psl2_7", "psl2_11", "psl5_2"]


def test_group_file_round_trip():
    g = h2m.dihedral(6)
    text = h2m.serialize_group(g)
    back = h2m.parse_group_file(text)
    assert back.order() == 12


def test_caps_raise():
    import pytest

    with pytest.raises(RuntimeError):
        h2m.symmetric(4).elements(10)
    with pytest.raises(ValueError):
        h2m.psl2(13)
