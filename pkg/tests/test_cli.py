"""End-to-end checks of the command-line interface."""

import csv
import io
import json
import math

import pytest
from click.testing import CliRunner

from entrokit.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_entropy_json(runner):
    result = runner.invoke(main, ["entropy", "gaussian:a=2"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["law"] == "gaussian:a=2.0"
    assert payload["h_hat"] == 0.0
    assert payload["H"] is None
    assert payload["h_tilde"] == pytest.approx(1.1195901522456185,
                                               abs=1e-12)
    assert payload["provenance"]["h"] == "analytic"


def test_entropy_discrete(runner):
    result = runner.invoke(main, ["entropy", "binomial:n=4,p=0.5"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["h"] is None
    # H = 2*(1/16)ln 16 + 2*(4/16)ln 4 + (6/16)ln(16/6)
    assert payload["H"] == pytest.approx(1.4075317407193150, abs=1e-10)
    assert payload["H_tilde"] is not None


def test_entropy_csv(runner):
    result = runner.invoke(main, ["--format", "csv", "entropy",
                                  "uniform:a=1"])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert len(rows) == 2
    record = dict(zip(rows[0], rows[1]))
    assert record["law"] == "uniform:a=1.0"
    assert float(record["h_tilde"]) == pytest.approx(math.log(2.0))
    assert record["H"] == ""  # absent quantities become empty cells


def test_quantile_command(runner):
    result = runner.invoke(main, ["quantile", "uniform:a=2", "0.25"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["quantile"] == pytest.approx(0.5)


def test_iqnr_command(runner):
    result = runner.invoke(main, ["iqnr", "cauchy:a=1", "0.25"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["iqnr"] == pytest.approx(2.0, abs=1e-12)


def test_converge_csv(runner):
    result = runner.invoke(main, ["--format", "csv", "converge", "duniform"])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["index", "H", "H_tilde", "target", "gap"]
    assert len(rows) == 8
    for row in rows[1:]:
        assert abs(float(row[4])) < 1e-12


def test_converge_binomial_options(runner):
    result = runner.invoke(main, ["converge", "binomial", "--p", "0.5",
                                  "--ns", "16,64"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert [row["index"] for row in payload] == [16, 64]


def test_figure_command(runner):
    result = runner.invoke(main, ["figure", "1", "--steps", "10"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert len(payload) == 10
    assert payload[0]["lam"] == pytest.approx(0.1)
    vals = [row["value"] for row in payload]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_out_file(runner, tmp_path):
    target = tmp_path / "report.json"
    result = runner.invoke(main, ["--out", str(target), "entropy",
                                  "gaussian:a=1"])
    assert result.exit_code == 0
    payload = json.loads(target.read_text())
    assert payload["law"] == "gaussian:a=1.0"


def test_parse_error_exits_2(runner):
    result = runner.invoke(main, ["entropy", "bogus:a=1"])
    assert result.exit_code == 2
    assert "unknown law family" in result.output


def test_degenerate_exits_3_with_partial_report(runner):
    result = runner.invoke(main, ["entropy", "duniform:n=1,a=1"])
    assert result.exit_code == 3
    payload = json.loads(result.output)
    assert payload["H"] == pytest.approx(0.0)
    assert "H_tilde" in payload["errors"]


def test_bad_probability_exits_2(runner):
    result = runner.invoke(main, ["quantile", "gaussian:a=1", "1.5"])
    assert result.exit_code == 2


def test_deterministic_output(runner):
    args = ["--format", "csv", "converge", "poisson"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.output == second.output
