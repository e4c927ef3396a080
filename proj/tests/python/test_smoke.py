import pytest

zipcox = pytest.importorskip("zipcox")


def test_describe_u3():
    d = zipcox.describe(zipcox.bundled("u3_inert"))
    assert d["I"] == ["alpha1"]
    assert d["Delta_P"] == ["alpha2"]
    assert d["delta"]["alpha2"] == ["-3/8", "1/4", "1/8"]
    assert d["hasse_type"] is False


def test_strata_chain():
    s = zipcox.strata(zipcox.bundled("gl3_split"))
    assert [x["word"] for x in s["strata"]] == ["e", "s2", "s2s1"]
    assert s["covers"] == [[0, 1], [1, 2]]
    assert "rankdir=BT" in zipcox.strata(zipcox.bundled("gl3_split"), format="dot")


def test_cones():
    pha = zipcox.cone(zipcox.bundled("u3_inert"), "pha")
    assert sorted(pha["rays"]) == [[1, 0, 3], [4, 1, 3]]
    hb = zipcox.cone(zipcox.bundled("c2_split"), "dominant", hilbert=True)
    assert sorted(hb["hilbert_basis"]) == [[1, 0], [1, 1]]


def test_datum_as_dict():
    d = {"p": 5, "rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]],
         "sigma_char": [[1]], "mu": [1]}
    assert zipcox.describe(d)["delta"]["alpha1"] == ["-1/4"]


def test_hasse():
    v = zipcox.hasse_check(zipcox.bundled("u3_inert"), [4, 4, 12])
    assert v["mu_ordinary_hasse"] is True
    assert v["h0_exact"]["nonzero"] == "true"


def test_u3():
    assert zipcox.u3_dim([3, 0, 2], 2)["dim"] == 0
    assert zipcox.u3_decompose([4, 4, 12], 3)["k_mu"] == 1
    assert zipcox.czip_scan(2, 8)["ok"] is True


def test_equivariance():
    r = zipcox.verify_equivariance("ha_mu", p=3, degree=4, trials=20)
    assert r["ok"] and r["passed"] == 20


def test_errors():
    with pytest.raises(ValueError, match="line"):
        zipcox.describe('{"p": 2,')
    with pytest.raises(ValueError):
        zipcox.u3_dim([0, 0, 0], 4)
