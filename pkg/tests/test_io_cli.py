import json
import pathlib

import pytest

from hopfgalois import cli, io_json

FIXTURES = pathlib.Path(io_json.__file__).parent / "fixtures"


def _run(*argv):
    return cli.run(list(argv))


def test_all_shipped_fixtures_load():
    paths = sorted(FIXTURES.glob("*.json"))
    assert len(paths) >= 10
    for p in paths:
        io_json.load_bundle(p)   # validators run eagerly; must not raise


def test_round_trip_semantically_identical(tmp_path):
    for name in ("m2_graded.json", "h4_f5.json", "cp_minus1_crossed.json"):
        bundle = io_json.load_bundle(FIXTURES / name)
        emitted = io_json.emit_bundle(bundle)
        p = tmp_path / name
        with open(p, "w") as fh:
            json.dump(emitted, fh)
        again = io_json.emit_bundle(io_json.load_bundle(p))
        assert emitted == again


def test_malformed_mul_tensor_wrong_arity(tmp_path):
    d = json.load(open(FIXTURES / "kc2.json"))
    d["hopf_algebras"]["kC2"]["mul"][0] = [0, 0, "1"]
    p = tmp_path / "bad.json"
    json.dump(d, open(p, "w"))
    with pytest.raises(io_json.ParseError) as exc:
        io_json.load_bundle(p)
    assert "mul" in str(exc.value)


def test_validation_error_names_axiom(tmp_path):
    d = json.load(open(FIXTURES / "h4.json"))
    d["hopf_algebras"]["H4"]["antipode"] = [[i, i, "1"] for i in range(4)]
    p = tmp_path / "bad.json"
    json.dump(d, open(p, "w"))
    with pytest.raises(io_json.ValidationError) as exc:
        io_json.load_bundle(p)
    assert exc.value.axiom.startswith("antipode")


def test_unknown_reference(tmp_path):
    d = json.load(open(FIXTURES / "m2_graded.json"))
    d["comodule_algebras"]["m2_graded"]["hopf"] = "missing"
    p = tmp_path / "bad.json"
    json.dump(d, open(p, "w"))
    with pytest.raises(io_json.ParseError):
        io_json.load_bundle(p)


def test_cli_validate_pass():
    report, code = _run("validate", str(FIXTURES / "h4.json"))
    assert code == 0
    assert all(o == "pass" for _, o, _ in report.checks)


def test_cli_galois_dims():
    report, code = _run("galois", str(FIXTURES / "m2_graded.json"))
    assert code == 0
    assert report.details["dims"] == "8/8"
    assert report.details["galois"] is True


def test_cli_exit_codes():
    _, fail = _run("galois", str(FIXTURES / "trivial_kxk.json"))
    assert fail == 1
    _, inconcl = _run("cleft", str(FIXTURES / "trivial_kxk.json"))
    assert inconcl == 3
    _, proof = _run("cleft", str(FIXTURES / "trivial_kxk_f3.json"))
    assert proof == 1
    err, code = _run("galois", str(FIXTURES / "nope.json"))
    assert code == 2
    err, code = _run("galois", str(FIXTURES / "kc2.json"), "--field", "F_5")
    assert code == 2


def test_cli_cohomology_gate():
    _, code = _run("cohomology", "h1", str(FIXTURES / "h4.json"))
    assert code == 2     # hypotheses (cocommutative H) violated: input error


def test_cli_crossed_product_payload():
    report, code = _run("crossed-product",
                        str(FIXTURES / "cp_minus1_crossed.json"))
    assert code == 0
    assert report.payload["dim"] == 2
    # the assembled record is itself a loadable comodule-algebra record
    assert report.payload["coaction"]


def test_cli_reports_deterministic():
    a1, _ = _run("cat-iso-check", str(FIXTURES / "m2_graded.json"),
                 "--module", "b_regular", "--output", "json")
    a2, _ = _run("cat-iso-check", str(FIXTURES / "m2_graded.json"),
                 "--module", "b_regular", "--output", "json")
    assert json.dumps(a1.to_dict(), sort_keys=True) == \
        json.dumps(a2.to_dict(), sort_keys=True)


def test_cli_text_and_json_agree_on_outcomes():
    r, _ = _run("translation-map", str(FIXTURES / "kc2.json"))
    text = r.to_text()
    for name, outcome, _ in r.checks:
        assert name in text and outcome.upper() in text
