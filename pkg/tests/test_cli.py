import json
from pathlib import Path

import pytest

from secoh.__main__ import EXIT_IDENTITY, EXIT_OK, EXIT_SCALE, EXIT_VALIDATION, main
from secoh.problem import parse_problem
from secoh.runner import all_passed, run
from utilities.config_utils import Settings
from utilities.errors import ProblemSpecError

PROBLEMS = Path(__file__).parent.parent / "problems"

Z2_TABLE = [[0, 1], [1, 0]]


def _problem_text(name):
    return (PROBLEMS / name).read_text(encoding="utf-8")


def _write(tmp_path, document, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def _without_millis(document):
    for record in document.get("results", []):
        record.pop("millis", None)
    return document


# ----------------------------------------------------------------------
# parsing

@pytest.mark.parametrize("name", [
    "z2_z2.json", "z2_Z.json", "z2_triple_u.json", "z2_classical.json", "s3_z3_verify.json",
])
def test_fixtures_parse(name):
    spec = parse_problem(_problem_text(name))
    assert spec.degrees
    assert len(spec.input_hash) == 64


def test_syntax_error_reports_line():
    with pytest.raises(ProblemSpecError) as e:
        parse_problem('{\n  "variant": "abelian",\n  "B": ,\n}')
    assert e.value.line == 3


def test_schema_error_reports_field():
    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps({"variant": "abelian", "A": {"invariants": [2]},
                                  "B": {"invariants": [2]}, "degrees": [-1]}))
    assert e.value.field == "degrees"

    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps({"variant": "abelian", "B": {"invariants": [2]}, "extra": 1}))
    assert e.value.field == "extra"


def test_missing_a_is_reported():
    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps({"variant": "abelian", "B": {"invariants": [2]}}))
    assert e.value.field == "A"


def test_non_associative_table_is_reported():
    document = {
        "variant": "triple",
        "G": {"order": 3, "table": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]},
        "A": {"invariants": [2]},
        "B": {"invariants": [2]},
    }
    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps(document))
    assert e.value.field == "G.table"
    assert e.value.witness == [0, 0, 1]


def test_perturbed_cocycle_is_reported():
    values = [[0]] * 8
    values[3] = [1]
    document = {
        "variant": "triple",
        "G": {"order": 2, "table": Z2_TABLE},
        "A": {"invariants": [2]},
        "B": {"invariants": [2]},
        "kappa": {"values": values},
    }
    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps(document))
    assert e.value.field == "kappa.values"
    assert len(e.value.witness) == 4


def test_infinite_a_is_rejected():
    with pytest.raises(ProblemSpecError) as e:
        parse_problem(json.dumps({"variant": "abelian", "A": {"invariants": [0]}, "B": {"invariants": [2]}}))
    assert e.value.field == "A.invariants"


# ----------------------------------------------------------------------
# runs

def test_plain_z2_results():
    document = run(parse_problem(_problem_text("z2_z2.json")))
    assert [r["invariant_factors"] for r in document["results"]] == [[2], [2]]
    assert all(r["free_rank"] == 0 for r in document["results"])


def test_plain_integer_coefficients():
    document = run(parse_problem(_problem_text("z2_Z.json")))
    assert [r["invariant_factors"] for r in document["results"]] == [[], [2]]


def test_triple_verify_passes():
    document = run(parse_problem(_problem_text("z2_triple_u.json")), Settings(samples=100))
    assert document["checks"]
    assert all_passed(document), [c for c in document["checks"] if not c["pass"]]
    names = {c["name"] for c in document["checks"]}
    assert "phi_commutes_with_delta_2" in names
    assert "ternary_associativity" in names
    assert any(o["name"] == "exactness_2" for o in document["observations"])


def test_classical_oracle_agrees():
    document = run(parse_problem(_problem_text("z2_classical.json")))
    assert all_passed(document)
    assert [s["order"] for s in document["oracle"]] == [2, 2]


def test_faces_dump():
    spec = parse_problem(_problem_text("z2_z2.json")).with_overrides(mode="faces-dump", degrees=[1])
    table = run(spec)["faces"][0]
    assert table["target_size"] == 2
    assert table["source_size"] == 1
    assert all(len(row["faces"]) == 3 for row in table["rows"])


def test_overrides_change_the_input_hash():
    spec = parse_problem(_problem_text("z2_z2.json"))
    first = spec.with_overrides(mode="faces-dump", degrees=[1])
    second = spec.with_overrides(mode="faces-dump", degrees=[2])
    assert first.input_hash != second.input_hash
    assert first.input_hash != spec.input_hash
    assert first.document["degrees"] == [1]
    assert run(first)["input_hash"] == first.input_hash
    assert spec.with_overrides().input_hash == spec.input_hash


def test_result_document_keys():
    base = {"input_hash", "variant", "mode", "results", "checks", "observations"}
    assert set(run(parse_problem(_problem_text("z2_z2.json")))) == base
    assert set(run(parse_problem(_problem_text("z2_classical.json")))) == base | {"oracle"}
    spec = parse_problem(_problem_text("z2_z2.json")).with_overrides(mode="faces-dump", degrees=[1])
    assert set(run(spec)) == base | {"faces"}


def test_runs_are_deterministic():
    spec = parse_problem(_problem_text("z2_z2.json"))
    assert _without_millis(run(spec)) == _without_millis(run(spec))


@pytest.mark.slow
def test_s3_verify_passes():
    document = run(parse_problem(_problem_text("s3_z3_verify.json")))
    assert all_passed(document)


# ----------------------------------------------------------------------
# command line

def test_compute_writes_results(tmp_path, capsys):
    out = tmp_path / "result.json"
    code = main(["compute", str(PROBLEMS / "z2_z2.json"), "--out", str(out)])
    assert code == EXIT_OK
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["mode"] == "cohomology"
    assert [r["degree"] for r in document["results"]] == [2, 3]
    assert "Results saved" in capsys.readouterr().out


def test_bad_json_exits_with_validation_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json", encoding="utf-8")
    assert main(["compute", str(path)]) == EXIT_VALIDATION


def test_missing_file_exits_with_validation_error(tmp_path):
    assert main(["compute", str(tmp_path / "nowhere.json")]) == EXIT_VALIDATION


def test_ceiling_exits_with_scale_error():
    assert main(["compute", str(PROBLEMS / "z2_z2.json"), "--ceiling", "1"]) == EXIT_SCALE


def test_failed_identity_exits_with_three(tmp_path):
    # indicator of the zero tuple is not a 4-cocycle
    document = {
        "variant": "abelian",
        "A": {"invariants": [2]},
        "B": {"invariants": [2]},
        "R": {"values": [[1]] + [[0]] * 63},
        "degrees": [2],
        "mode": "verify",
    }
    path = _write(tmp_path, document)
    assert main(["verify", path, "--samples", "2000"]) == EXIT_IDENTITY


def test_faces_command(capsys):
    assert main(["faces", str(PROBLEMS / "z2_z2.json"), "--degree", "1"]) == EXIT_OK
    assert "FACES OF DEGREE 1" in capsys.readouterr().out
