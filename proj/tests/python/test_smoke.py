"""Smoke tests for the python bindings.

The compiled module speaks JSON strings; these tests exercise each exported
entry point once with values pinned from the CLI test layer.
"""

import json

import pytest

import tubular


LOOP = json.dumps(
    {
        "vertices": [{"id": "v"}],
        "edges": [
            {"id": "t", "minus": "v", "plus": "v", "u": ["0", "1"], "v": ["1", "1"]}
        ],
    }
)


def test_snowflake_presentation():
    doc = json.loads(tubular.snowflake(3, 2))
    assert [v["id"] for v in doc["vertices"]] == ["v"]
    assert [e["id"] for e in doc["edges"]] == ["s", "t"]
    assert doc["edges"][0]["u"] == ["2", "0"]
    assert doc["edges"][0]["v"] == ["3", "1"]
    assert doc["edges"][1]["v"] == ["3", "-1"]


def test_decide_both_verdicts():
    rf = tubular.decide(tubular.snowflake(2, 2))
    assert rf["verdict"] == "RF"
    assert rf["certificate"]["kind"] == "primitive_target"

    not_rf = tubular.decide(json.loads(tubular.snowflake(5, 3)))
    assert not_rf["verdict"] == "NotRF"
    assert not_rf["certificate"]["kind"] == "recurrence"


def test_group_round_trip():
    canon = tubular.canonical(LOOP)
    doc = json.loads(canon)
    assert doc["vertices"][0]["basis"] == [["1", "0"], ["0", "1"]]
    assert doc["edges"] == json.loads(LOOP)["edges"]
    assert tubular.canonical(canon) == canon


def test_scale_and_subtubular():
    doubled = json.loads(tubular.scale(LOOP, "2"))
    assert doubled["vertices"][0]["basis"] == [["2", "0"], ["0", "2"]]
    assert doubled["edges"][0]["u"] == ["0", "2"]

    sub = json.loads(tubular.subtubular(tubular.snowflake(3, 2), ["s"]))
    assert [e["id"] for e in sub["edges"]] == ["s"]


def test_expand_and_run_sequence():
    after, trivial = tubular.expand(LOOP)
    assert trivial is True
    assert after == tubular.canonical(LOOP)

    outcome = json.loads(tubular.run_sequence(LOOP, 8))
    assert outcome["status"] == "terminated"
    assert outcome["terminated_index"] == 0


def test_words_and_witness():
    assert tubular.britton_reduce(LOOP, "t;(0,2);t^-1") == "(2,2)"
    assert tubular.is_trivial_word(LOOP, "t;(0,-2);t^-1;(2,2)")
    assert not tubular.is_trivial_word(LOOP, "t")

    doc = json.loads(tubular.witness(LOOP, "t;(2,3);t^-1"))
    assert doc["witness"]["n"] == "3"
    assert doc["witness"]["backtracks"][0]["across"] == "-2"
    assert doc["quotient"]["vertices"][0]["factors"] == ["3", "3"]
    assert doc["quotient"]["edges"][0]["order"] == "3"

    quotient = json.loads(tubular.local_quotient(LOOP, 3))
    assert quotient == doc["quotient"]


def test_regulate():
    doc = json.loads(tubular.regulate(LOOP))
    assert doc["regulating"] is True
    assert doc["certificate"]["tuple"] == {"t": "1"}
    assert "primitive_domain" in doc


def test_recheck_round_trip():
    verdict = tubular.decide_json(tubular.snowflake(2, 2))
    report = json.loads(tubular.recheck(verdict))
    assert report["recheck"] == "pass"
    assert report["verdict"] == "RF"

    tampered = json.loads(verdict)
    tampered["verdict"] = "NotRF"
    report = json.loads(tubular.recheck(json.dumps(tampered)))
    assert report["recheck"] == "fail"
    assert report["detail"]


def test_validate():
    assert tubular.validate(LOOP) == []
    bad = json.loads(LOOP)
    bad["edges"][0]["u"] = ["0", "0"]
    violations = tubular.validate(json.dumps(bad))
    assert violations and "t" in violations[0]


def test_errors_map_to_tubular_error():
    assert issubclass(tubular.TubularError, ValueError)
    with pytest.raises(tubular.TubularError):
        tubular.decide_json(LOOP, -1)
    with pytest.raises(tubular.TubularError):
        tubular.canonical("{not json")
    with pytest.raises(tubular.TubularError):
        tubular.snowflake(2, 3)
    with pytest.raises(tubular.TubularError):
        tubular.britton_reduce(LOOP, "t^")
