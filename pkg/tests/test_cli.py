"""CLI contract: exit codes, schema-valid reports, byte-identical reruns."""

import json

import jsonschema
import pytest

from lorsim.cli import main


def _schema():
    import importlib.resources as res

    with res.files("lorsim.schemas").joinpath("report.schema.json").open() as fh:
        return json.load(fh)


SINGLE_TRANSLATION = (
    '{"n":2,"generators":[{"a":"0","A":[["0","0"],["0","0"]],"X":["1","0"]}]}'
)
ALL_TRANSLATIONS = (
    '{"n":2,"generators":['
    '{"a":"0","A":[["0","0"],["0","0"]],"X":["1","0"]},'
    '{"a":"0","A":[["0","0"],["0","0"]],"X":["0","1"]}]}'
)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_closure_reports_dimension(capsys):
    rot = '{"n":2,"generators":[{"a":"0","A":[["0","-1"],["1","0"]],"X":["0","0"]},{"a":"0","A":[["0","0"],["0","0"]],"X":["1","0"]}]}'
    code, out = _run(capsys, "closure", "--input", rot)
    assert code == 0
    report = json.loads(out)
    assert report["dim"] == 3
    jsonschema.validate(report, _schema())


def test_check_wi_exit_codes(capsys):
    code, out = _run(capsys, "check-wi", "--input", SINGLE_TRANSLATION)
    assert code == 2
    report = json.loads(out)
    assert report["verdict"] == "REDUCIBLE"
    jsonschema.validate(report, _schema())

    code, out = _run(capsys, "check-wi", "--input", ALL_TRANSLATIONS)
    assert code == 0
    assert json.loads(out)["verdict"] == "WEAKLY_IRREDUCIBLE"


def test_make_pipes_into_classify(tmp_path, capsys):
    code, out = _run(capsys, "make", "--type", "3", "--B", "so2", "--n", "2", "--seed", "9")
    assert code == 0
    made = tmp_path / "alg.json"
    made.write_text(out)
    jsonschema.validate(json.loads(out), _schema())
    code, out = _run(capsys, "classify", "--input", str(made))
    assert code == 0
    report = json.loads(out)
    assert report["type"] == 3
    jsonschema.validate(report, _schema())


def test_classify_type4_report(capsys):
    code, out = _run(capsys, "make", "--type", "4", "--B", "so2", "--n", "3")
    assert code == 0
    code, out2 = _run(capsys, "classify", "--input", out)
    assert code == 0
    report = json.loads(out2)
    assert report["type"] == 4
    assert report["U"] == [["0", "0", "1"]]


def test_boundary_act_exact(capsys):
    payload = json.dumps(
        {
            "n": 2,
            "matrix": [
                ["2", "0", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1/2"],
            ],
            "Y": ["1", "-1/2"],
        }
    )
    code, out = _run(capsys, "boundary-act", "--input", payload)
    assert code == 0
    report = json.loads(out)
    assert report["exact"] is True
    assert report["image"] == ["2", "-1"]
    jsonschema.validate(report, _schema())


def test_transport_command(capsys):
    payload = json.dumps(
        {
            "n": 2,
            "v": {"x": "1", "alpha": ["0", "0"], "y": "-1/2"},
            "w": {"x": "1", "alpha": ["1", "0"], "y": "-1"},
            "spec": {"variant": "AN"},
        }
    )
    code, out = _run(capsys, "transport", "--input", payload)
    assert code == 0
    report = json.loads(out)
    assert report["exact"] is True
    assert report["factors"]["N"] == ["-2", "0"]
    assert report["factors"]["A"] == "1/2"
    jsonschema.validate(report, _schema())


def test_malformed_json_is_exit_1(capsys):
    code, _ = _run(capsys, "check-wi", "--input", "{not json")
    assert code == 1


def test_missing_input_is_exit_1(capsys):
    code, _ = _run(capsys, "classify")
    assert code == 1


def test_unknown_command_is_exit_1(capsys):
    code, _ = _run(capsys, "frobnicate")
    assert code == 1


def test_byte_identical_reports(tmp_path, capsys):
    outs = []
    for _ in range(2):
        code, out = _run(
            capsys, "check-wi", "--input", SINGLE_TRANSLATION, "--seed", "4", "--budget", "32"
        )
        assert code == 2
        outs.append(out)
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    assert report["seed"] == 4 and report["budget"] == 32


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = _run(
        capsys, "check-wi", "--input", ALL_TRANSLATIONS, "--output", str(target)
    )
    assert code == 0 and out == ""
    jsonschema.validate(json.loads(target.read_text()), _schema())


def test_selftest_smoke(capsys):
    code, out = _run(capsys, "selftest", "--seed", "0")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    jsonschema.validate(report, _schema())
