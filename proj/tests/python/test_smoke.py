import json

import pytest

import eqsub


def test_validate_preset_and_mutation():
    assert eqsub.validate("kp:2:1/2")["valid"]
    broken = eqsub.validate({"preset": "kp:2:1/2", "mu": {"(1,1,3)": "0"}})
    assert not broken["valid"]
    assert broken["violations"][0]["witness"]


def test_document_round_trip():
    data = eqsub.validate("kp:2:1/2")["data"]
    again = eqsub.validate(data)
    assert again["valid"]
    assert again["data"] == data
    assert eqsub.validate(json.dumps(data))["data"] == data


def test_lattice_matches_oracle():
    lat = eqsub.lattice("kp:2:1/2")
    assert sorted(t["fpdim"] for t in lat["triples"]) == [1, 2, 2, 2, 4, 8]
    orc = eqsub.oracle("kp:2:1/2")
    assert sorted(s["fpdim"] for s in orc["subrings"]) == [1, 2, 2, 2, 4, 8]
    assert eqsub.compare("double:sym:3")["equal"]


def test_hopf_axioms():
    h = eqsub.hopf("kp:2:1/2")
    assert h["dim"] == 8
    assert h["antipode_unique"]
    assert all(h["axioms"].values())


def test_kp_concordance():
    c = eqsub.kp_compare(2, "1/2")
    assert c["main_matches_oracle"]
    assert not c["as_stated_matches_oracle"]
    r = eqsub.kp_classify(2, "1/2", mode="as-stated")
    assert sorted(r["fpdims"]) == [1, 2, 4, 4, 8, 8]


def test_oracle_is_reproducible():
    assert eqsub.oracle("kp:2:0", seed=1) == eqsub.oracle("kp:2:0", seed=99)


def test_errors():
    with pytest.raises(eqsub.Error, match="Parse"):
        eqsub.validate("nothing")
    with pytest.raises(eqsub.Error, match="NotValid"):
        eqsub.lattice({"preset": "kp:2:1/2", "mu": {"(1,1,3)": "0"}})
    with pytest.raises(eqsub.Error, match="OmegaNontrivial"):
        eqsub.hopf("twisted-double:2:1")
    with pytest.raises(eqsub.Error):
        eqsub.kp_classify(2, "1/2", mode="sideways")


def test_cli_entry():
    code, out, _ = eqsub.run(["validate", "--preset", "kp:2:1/2"])
    assert code == 0
    assert out.startswith("valid")
    assert eqsub.run(["frobnicate"])[0] == 64
    assert any(p.startswith("kp:") for p, _ in eqsub.presets())
