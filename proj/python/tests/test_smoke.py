from pathlib import Path

import pytest

import cosep

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def load(name):
    return cosep.Coring.load(str(CORPUS / f"{name}.json"))


def test_divpow2_spaces_and_ext():
    c = load("divpow2")
    assert c.dim == 2
    assert c.validate()
    assert not c.coseparable()
    assert c.spaces() == {"coder": 1, "inner_coder": 0, "coint": 1, "inner_coint": 0}
    assert c.ext_dims(max_degree=2)[1] == 1


def test_coseparable_corings():
    for name in ["trivial", "grouplike2", "comatrix2", "sweedler_gauss"]:
        assert load(name).coseparable(), name
    assert load("comatrix2").ext_dims(max_degree=2) == [1, 0, 0]


def test_run_matches_cli_report():
    text = (CORPUS / "divpow2.json").read_text()
    code, report = cosep.run("spaces", text)
    assert code == 0
    assert report["schema_version"] == 1
    assert report["result"]["coder"] == 1
    assert cosep.run("validate", "{")[0] == 2


def test_errors():
    with pytest.raises(cosep.CosepError, match="BudgetExceeded"):
        load("comatrix2").ext_dims(budget=50)
    with pytest.raises(cosep.CosepError):
        load("divpow2").spaces(n="nosuch")
    with pytest.raises(cosep.CosepError):
        load("coext_identity")


def test_fnv():
    assert cosep.fnv1a64("a") == "af63dc4c8601ec8c"
