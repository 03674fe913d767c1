# Standard library imports
import json
import os

# Related third-party imports
import pandas as pd
import pytest

# Local application/library specific imports
from cli_report import (
    ProblemSpec,
    StageError,
    compare_expectations,
    load_corpus,
    load_problem,
    main,
    run_problem,
)
from config.constants import CORPUS_PATH, STAGES
import jacobian_analysis
from utils.data_utils import read_jsonl
from utils.validation_utils import UsageError

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")

CUSP_ENTRY = """
[cusp]
vars = x, y
field = q
f = x^2 + y^3
dmax = 3
expect.rt = {rt}
expect.verdict = linear_jacobian_type
expect.euler = true
"""


def cusp_spec(**overrides):
    values = dict(name="cusp", variables=("x", "y"), field="q", f="x^2 + y^3", dmax=3)
    values.update(overrides)
    return ProblemSpec(**values)


def test_headerless_problem_file(tmp_path):
    path = tmp_path / "cusp.txt"
    path.write_text("name = cusp\nvars = x, y\nf = x^2 + y^3\nmeta.L = 1\n")
    spec = load_problem(str(path))
    assert spec.name == "cusp"
    assert spec.variables == ("x", "y")
    assert spec.field == "q"
    assert spec.metadata == {"L": "1"}


@pytest.mark.parametrize(
    "mapping",
    [
        {"vars": "x, y"},
        {"f": "x"},
        {"vars": "x", "f": "x^2", "color": "red"},
        {"vars": "x", "f": "x^2", "dmax": "1"},
        {"vars": "x", "f": "x^2", "checks": "rt, magic"},
        {"vars": "x", "f": "x^2", "field": "gf:9"},
        {"vars": "x", "f": "x^2", "expect.mood": "happy"},
    ],
)
def test_invalid_problem_specs(mapping):
    with pytest.raises(UsageError):
        ProblemSpec.from_mapping(mapping)


def test_instantiate_family():
    family = load_problem(os.path.join(DATA_DIR, "kato_family.txt"))
    assert family.parameters == ("t33", "t52", "t43", "t53")
    point = {"t33": "1", "t52": "-175/6", "t43": "0", "t53": "0", "meta.L": "2"}
    member = family.instantiate(point)
    assert member.constants["t52"] == "-175/6"
    assert member.metadata == {"L": "2"}
    assert "t52=-175/6" in member.name
    with pytest.raises(UsageError):
        family.instantiate({"t33": "1"})
    with pytest.raises(UsageError):
        family.polynomial(family.ring())


def test_bundled_corpus_parses():
    specs = load_corpus(CORPUS_PATH)
    names = [spec.name for spec in specs]
    assert len(names) == len(set(names))
    assert "reiffen-4-5-q" in names
    assert any(spec.is_slow for spec in specs)
    for spec in specs:
        spec.polynomial(spec.ring())


def test_run_problem_document():
    run = run_problem(cusp_spec(metadata={"L": "1"}))
    document = run.document
    assert document["field"] == "q"
    assert document["evidence_label"] == "exact"
    assert document["semantics"] == "local"
    assert document["analysis"]["verdict"] == "linear_jacobian_type"
    assert document["analysis"]["rt"] == 1
    assert "timings" not in document
    assert {check["name"] for check in document["checks"]} >= {"published_bound", "verdict_logic"}
    assert run.exit_code == 0


def test_compare_expectations_reports_mismatches():
    expectations = {"rt": "2", "verdict": "linear_jacobian_type", "t_zero": "1:1-2, 2:5"}
    run = run_problem(cusp_spec(expectations=expectations))
    mismatches = compare_expectations(run)
    fields = {m.field: m for m in mismatches}
    assert fields["rt"].expected == "2"
    assert fields["rt"].got == "1"
    assert fields["T_2,5"].got == "not computed"
    assert "verdict" not in fields


def test_analyze_writes_deterministic_reports(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["analyze", "--vars", "x,y", "--f", "x^2 + y^3", "--dmax", "3", "--out"]
    assert main(argv + [str(first)]) == 0
    assert main(argv + [str(second)]) == 0
    assert first.read_text() == second.read_text()
    document = json.loads(first.read_text())
    assert document["analysis"]["verdict"] == "linear_jacobian_type"


def test_analyze_timings_and_global_semantics(tmp_path):
    out = tmp_path / "report.json"
    argv = ["analyze", "--vars", "x,y", "--f", "x^2 + y^3", "--dmax", "3"]
    assert main(argv + ["--global", "--timings", "--out", str(out)]) == 0
    document = json.loads(out.read_text())
    assert document["semantics"] == "global (non-germ semantics)"
    assert "classify" in document["timings"]


@pytest.mark.parametrize("f", ["1 + x", "x^2 + * y", "x^2 + z"])
def test_analyze_usage_errors(tmp_path, f):
    out = tmp_path / "report.json"
    assert main(["analyze", "--vars", "x,y", "--f", f, "--out", str(out)]) == 1
    assert not out.exists()


def test_sweep_isolates_failing_points(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("name = scaled\nvars = x, y\nf = x^2 + a*y^3\nparameters = a\ndmax = 3\n")
    points = tmp_path / "points.csv"
    points.write_text("a\n1\n1/0\n2\n")
    summary = tmp_path / "summary.csv"
    code = main(["sweep", "--spec", str(family), "--points", str(points), "--out", str(summary)])
    assert code == 1
    lines = summary.read_text().strip().splitlines()
    assert len(lines) == 4
    assert lines[1].endswith("ok") and lines[3].endswith("ok")
    assert "error" in lines[2]


def test_sweep_over_empty_points(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("vars = x, y\nf = x^2 + a*y^3\nparameters = a\n")
    points = tmp_path / "points.csv"
    points.write_text("a\n")
    assert main(["sweep", "--spec", str(family), "--points", str(points)]) == 0
    assert "(no points)" in capsys.readouterr().out


def test_corpus_pass_and_mismatch(tmp_path, capsys):
    good, bad = tmp_path / "good.txt", tmp_path / "bad.txt"
    good.write_text(CUSP_ENTRY.format(rt=1))
    bad.write_text(CUSP_ENTRY.format(rt=2))
    assert main(["corpus", "--file", str(good)]) == 0
    assert "1/1 entries passed" in capsys.readouterr().out
    results = tmp_path / "results.jsonl"
    assert main(["corpus", "--file", str(bad), "--out", str(results)]) == 3
    assert "cusp: rt expected 2, got 1" in capsys.readouterr().out
    (record,) = read_jsonl(str(results))
    assert record["mismatches"][0]["field"] == "rt"



def test_sweep_keeps_good_points_next_to_unparsable_ones(tmp_path):
    family = tmp_path / "family.txt"
    family.write_text(
        "name = tilted\nvars = x, y\nf = x^2 + y^3 + a*x*y^2\nparameters = a\ndmax = 3\n"
    )
    points = tmp_path / "points.csv"
    points.write_text("a\n0\nabc\n")
    summary, records = tmp_path / "summary.csv", tmp_path / "points.jsonl"
    argv = ["sweep", "--spec", str(family), "--points", str(points)]
    assert main(argv + ["--out", str(summary), "--jsonl", str(records)]) == 1
    table = pd.read_csv(summary)
    assert table["status"].iloc[0] == "ok"
    assert table["rt"].iloc[0] == 1
    assert table["status"].iloc[1].startswith("error")
    good, bad = read_jsonl(str(records))
    assert good["report"]["analysis"]["verdict"] == "linear_jacobian_type"
    assert bad["stage"] == "ingest"
    assert "abc" in bad["error"]


def test_checks_select_pipeline_steps():
    run = run_problem(cusp_spec(checks=("rn", "rt", "classify", "cross_validate")))
    analysis = run.document["analysis"]
    assert analysis["t_table"] == {}
    assert analysis["effective_quotients"] == {}
    assert analysis["verdict"] == "linear_jacobian_type"
    statuses = {check["name"]: check["status"] for check in run.document["checks"]}
    assert statuses["t_first_row_zero"] == "skipped"
    assert statuses["top_equation"] == "skipped"
    assert "top_equation" not in run.document["rees"]

    run = run_problem(cusp_spec(checks=("t_table",)))
    analysis = run.document["analysis"]
    assert analysis["rt"] is None and analysis["rn"] is None
    assert analysis["verdict"] is None
    assert analysis["t_table"]["1"]["1"] == "zero"
    assert run.document["checks"] == []


def test_failures_inside_classify_carry_their_stage(monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("elimination failed")

    monkeypatch.setattr(jacobian_analysis, "rees_ideal", broken)
    with pytest.raises(StageError) as info:
        run_problem(cusp_spec())
    assert info.value.stage == "rees"
    assert info.value.stage in STAGES
    with pytest.raises(ValueError):
        StageError("somewhere", RuntimeError())


def test_unwritable_report_fails_in_write_stage(tmp_path, caplog):
    argv = ["analyze", "--vars", "x,y", "--f", "x^2 + y^3", "--dmax", "3", "--out"]
    assert main(argv + [str(tmp_path)]) == 1
    assert "Failed in stage write" in caplog.text


@pytest.mark.parametrize("f", ["x^2 + y^3", "x^7 + y^5"])
def test_rationals_and_prime_field_agree(f):
    analyses = [
        run_problem(cusp_spec(f=f, field=field, dmax=4)).document["analysis"]
        for field in ("q", "gf:32003")
    ]
    keys = (
        "r_of_f",
        "id_of_f",
        "rn",
        "rt",
        "rt_gradient",
        "verdict",
        "euler_homogeneous",
        "regular_sequence",
        "t_table",
        "effective_quotients",
        "left_terms",
    )
    rational, modular = analyses
    assert {key: rational[key] for key in keys} == {key: modular[key] for key in keys}

@pytest.mark.slow
def test_bundled_corpus_over_rationals():
    assert main(["corpus", "--field", "q"]) == 0


@pytest.mark.slow
def test_bundled_corpus_over_prime_field():
    assert main(["corpus", "--field", "gf:32003", "--workers", "4"]) == 0


@pytest.mark.slow
def test_kato_sweep(tmp_path):
    summary = tmp_path / "kato.csv"
    code = main(
        [
            "sweep",
            "--spec",
            os.path.join(DATA_DIR, "kato_family.txt"),
            "--points",
            os.path.join(DATA_DIR, "kato_points.csv"),
            "--out",
            str(summary),
        ]
    )
    assert code == 0
    table = pd.read_csv(summary)
    assert table["rt"].tolist() == [2, 2, 2, 2, 2, 2, 1]
    assert set(table["status"]) == {"ok"}
