import json

import pytest
from click.testing import CliRunner

from finring import __version__
from finring.cli import CENSUS_COLUMNS, census_csv, census_rows, main
from finring.theorems import AuditContext, CatalogConfig, build_catalog


@pytest.fixture
def invoke(tmp_path):
    runner = CliRunner()

    def run(*args):
        return runner.invoke(main, ["--cache-dir", str(tmp_path / "cache"), *args])

    return run


def test_version(invoke):
    result = invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_describe(invoke):
    result = invoke("describe", "Z(9)", "--json")
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output)
    assert summary["order"] == 9
    assert summary["sizes"]["jacobson"] == 3
    assert summary["sets"]["jacobson"] == [0, 3, 6]
    assert summary["field"] is False


def test_describe_text(invoke):
    result = invoke("describe", "GF(2,2)")
    assert result.exit_code == 0, result.output
    assert "GF(2,2)" in result.output
    assert "field: True" in result.output


def test_describe_a_group(invoke):
    result = invoke("describe", "S3", "--json")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["order"] == 6


def test_classify_selected_predicates(invoke):
    result = invoke("classify", "Z(3)", "-p", "w_sqrt_ju", "-p", "sqrt_ju", "--json")
    assert result.exit_code == 0, result.output
    record = json.loads(result.output)
    assert record["w_sqrt_ju"] is True
    assert record["sqrt_ju"] is False
    assert record["characteristic"] == 3
    assert "uu" not in record


def test_classify_with_the_cache_disabled(invoke):
    result = invoke("--no-cache", "classify", "M(2,Z(2))")
    assert result.exit_code == 0, result.output
    assert "w_sqrt_ju: no" in result.output


def test_skipped_predicates(invoke):
    result = invoke("--skip-expensive", "classify", "Z(4)", "-p", "exchange", "--json")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["exchange"] == "skipped(size)"


@pytest.mark.parametrize(
    "args, code",
    [
        (("classify", "Z(3)", "-p", "bogus"), 2),
        (("describe", "Foo(1)"), 2),
        (("describe", "Z(6"), 2),
        (("describe", "Corner(Z(6),2)"), 3),
        (("describe", "Z(5000)"), 3),
        (("--max-order", "100", "describe", "M(2,Z(4))"), 3),
        (("verify", "--claims", "BOGUS"), 2),
        (("verify", "--claims", "P-matrix", "--expr", "Quot(Z(6),[9])"), 3),
    ],
)
def test_exit_codes(invoke, args, code):
    assert invoke(*args).exit_code == code


def test_verify_one_ring(invoke):
    result = invoke("verify", "--claims", "P-matrix,P-dedekind", "--expr", "M(2,Z(2))")
    assert result.exit_code == 0, result.output
    assert "P-matrix" in result.output
    assert "P-dedekind" in result.output


def test_verify_json_report(invoke, tmp_path):
    report_path = tmp_path / "report.json"
    result = invoke(
        "verify",
        "--claims",
        "T-groupring",
        "--expr",
        "GR(Z(3),C(3))",
        "--expr",
        "GR(Z(4),C(3))",
        "--output",
        str(report_path),
    )
    assert result.exit_code == 0, result.output
    report = json.loads(report_path.read_text())
    assert report["catalog_size"] == 2
    (claim,) = report["claims"]
    assert claim["id"] == "T-groupring"
    assert claim["pass"] == 2
    assert claim["fail"] == 0


def test_save_and_load(invoke, tmp_path):
    path = tmp_path / "z6.json"
    assert invoke("save", "Z(6)", str(path)).exit_code == 0
    result = invoke("load", str(path), "--json")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["sets"]["idempotents"] == [0, 1, 3, 4]


def test_loading_a_tampered_file(invoke, tmp_path):
    path = tmp_path / "z3.json"
    assert invoke("save", "Z(3)", str(path)).exit_code == 0
    raw = json.loads(path.read_text())
    raw["mul"][2][2] = 2
    path.write_text(json.dumps(raw))
    assert invoke("load", str(path)).exit_code == 3


def test_census_rows():
    config = CatalogConfig.of_expressions(["Z(2)", "Z(3)"])
    rows = census_rows(AuditContext(catalog=build_catalog(config)))
    text = census_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CENSUS_COLUMNS)
    assert lines[1].startswith("Z(2),2,2,")
    assert rows[1]["w_sqrt_ju"] is True
    assert rows[1]["sqrt_ju"] is False
    assert len(lines) == 3


def test_internal_errors_are_not_usage_errors(invoke, monkeypatch):
    def broken(group):
        raise KeyError("identity")

    monkeypatch.setattr("finring.cli._group_summary", broken)
    result = invoke("describe", "S3")
    assert result.exit_code not in (2, 3)
    assert isinstance(result.exception, KeyError)
