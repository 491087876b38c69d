import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from modspringer.cli import main
from modspringer.correspondence import CharParams, full_table
from modspringer.serialize import TABLE_SCHEMA, from_json, to_json, to_latex, to_text

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTable:
    def test_gl6_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "6", "--ell", "2", "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / "table_n6_ell2.csv").read_text()
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 11 and len({r["series"] for r in rows}) == 6

    def test_gl6_json(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "6", "--ell", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == json.loads((GOLDEN / "table_n6_ell2.json").read_text())

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "1", "--ell", "2", "--format", "csv")
        assert code == 0 and len(out.strip().splitlines()) == 2

    def test_json_size_and_schema(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "10", "--ell", "3", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, TABLE_SCHEMA)
        assert sum(len(s["rows"]) for s in doc["series"]) == 42

    @pytest.mark.parametrize("n", ["0", "61"])
    def test_n_out_of_range(self, capsys, n):
        code, _, err = run(capsys, "table", "--n", n, "--ell", "2")
        assert code == 2 and "--n" in err

    def test_composite_ell_warns(self, capsys):
        code, out, err = run(capsys, "table", "--n", "4", "--ell", "4")
        assert code == 0 and "not prime" in err and out
        code, _, err = run(capsys, "--quiet", "table", "--n", "4", "--ell", "4")
        assert code == 0 and err == ""

    def test_bad_ell(self, capsys):
        code, _, _ = run(capsys, "table", "--n", "4", "--ell", "1")
        assert code == 2

    @pytest.mark.parametrize("fmt", ["text", "latex"])
    def test_renderings_show_parts(self, capsys, fmt):
        code, out, _ = run(capsys, "table", "--n", "6", "--ell", "2", "--format", fmt)
        assert code == 0
        if fmt == "latex":
            assert r"\ydiagram{3,3}" in out and r"\ydiagram{2}_{1}" in out
        else:
            assert "1:2;2:2" in out and "3,3" in out

    def test_unknown_format(self):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--n", "3", "--ell", "2", "--format", "xml"])
        assert exc.value.code == 2


class TestMapUnmap:
    def test_map(self, capsys):
        code, out, _ = run(capsys, "map", "--ell", "2", "--nu", "4,2", "--lambda", "2:1;4:1")
        assert (code, out) == (0, "6\n")

    def test_unmap(self, capsys):
        code, out, _ = run(capsys, "unmap", "--ell", "2", "--mu", "3,3")
        assert (code, out) == (0, "nu=2,2,1,1 lambda=1:2;2:2\n")
        code, out, _ = run(capsys, "unmap", "--ell", "5", "--mu", "1,1,1")
        assert (code, out) == (0, "nu=1,1,1 lambda=1:3\n")

    def test_map_json(self, capsys):
        code, out, _ = run(capsys, "map", "--ell", "2", "--nu", "2,2,2", "--lambda", "2:2,1", "--format", "json")
        assert json.loads(out)["mu"] == [4, 2]

    def test_not_regular(self, capsys):
        code, _, err = run(capsys, "map", "--ell", "2", "--nu", "2,2,1,1", "--lambda", "1:1,1;2:2")
        assert code == 2 and "not 2-regular" in err

    @pytest.mark.parametrize(
        "nu, lam",
        [("2,2,1,1", "1:2;2:1"), ("2,2,1,1", "1:2"), ("3,1", "1:1;3:1"), ("4,x", "4:1")],
    )
    def test_bad_inputs(self, capsys, nu, lam):
        code, _, _ = run(capsys, "map", "--ell", "2", "--nu", nu, "--lambda", lam)
        assert code == 2

    def test_bad_mu(self, capsys):
        assert run(capsys, "unmap", "--ell", "2", "--mu", "1,2")[0] == 2
        assert run(capsys, "unmap", "--ell", "2", "--mu", "-")[0] == 2

    @pytest.mark.parametrize("ell", [2, 3, 0])
    def test_round_trip_over_tables(self, capsys, ell):
        for n in range(1, 16):
            code, out, _ = run(capsys, "table", "--n", str(n), "--ell", str(ell), "--format", "csv")
            for row in csv.DictReader(io.StringIO(out)):
                code, mapped, _ = run(capsys, "map", "--ell", str(ell), "--nu", row["series"], "--lambda", row["lambda"])
                assert code == 0 and mapped.strip() == row["mu"]
                code, unmapped, _ = run(capsys, "unmap", "--ell", str(ell), "--mu", row["mu"])
                assert unmapped == f"nu={row['series']} lambda={row['lambda']}\n"


class TestCuspidals:
    def test_none(self, capsys):
        code, out, _ = run(capsys, "cuspidals", "--n", "6", "--ell", "2")
        assert code == 0
        assert out.splitlines()[0] == "GL(6): none"
        assert "cuspidal Levi classes: 6" in out

    def test_power(self, capsys):
        _, out, _ = run(capsys, "cuspidals", "--n", "4", "--ell", "2")
        assert out.splitlines()[0] == "GL(4): unique cuspidal pair on orbit (4)"

    def test_torus(self, capsys):
        _, out, _ = run(capsys, "cuspidals", "--n", "1", "--ell", "3")
        assert out.splitlines()[0] == "GL(1): unique cuspidal pair on orbit (1) (torus)"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "cuspidals", "--n", "9", "--ell", "3", "--format", "json")
        doc = json.loads(out)
        assert doc["cuspidal"] and doc["orbit"] == [9]
        assert [c["nu"] for c in doc["levi_classes"]][-1] == [9]


class TestStrata:
    def test_gl6(self, capsys):
        _, out, _ = run(capsys, "strata", "--n", "6", "--ell", "2", "--format", "json")
        strata = json.loads(out)["strata"]
        assert [s["dimension"] for s in strata] == [36, 35, 34, 33, 33, 32]
        assert [s["layer_size"] for s in strata] == [4, 2, 1, 2, 1, 1]
        assert [s["cumulative"] for s in strata][-1] == 11
        assert strata[3]["closure_contains"] == [[2, 2, 2], [4, 2]]

    def test_small(self, capsys):
        _, out, _ = run(capsys, "strata", "--n", "2", "--ell", "2", "--format", "csv")
        assert len(out.strip().splitlines()) == 3
        _, out, _ = run(capsys, "strata", "--n", "1", "--ell", "2", "--format", "json")
        strata = json.loads(out)["strata"]
        assert len(strata) == 1 and strata[0]["dimension"] == 1

    @pytest.mark.parametrize("fmt", ["text", "latex"])
    def test_other_formats(self, capsys, fmt):
        code, out, _ = run(capsys, "strata", "--n", "6", "--ell", "2", "--format", fmt)
        assert code == 0 and "33" in out


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "12", "--ells", "2,3,5")
        doc = json.loads(out)
        assert code == 0 and doc["ok"] and doc["failures"] == []
        assert doc["passed"]["bijection"] == 36

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "6", "--ells", "0")
        assert code == 0 and json.loads(out)["passed"]["degeneration"] == 6

    def test_trivial(self, capsys):
        assert run(capsys, "verify", "--n-max", "1", "--ells", "2")[0] == 0

    def test_range(self, capsys):
        assert run(capsys, "verify", "--n-max", "41", "--ells", "2")[0] == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        from modspringer import checks

        monkeypatch.setitem(checks.CHECKS, "broken", lambda params: "boom" if params.n == 3 else None)
        code, out, err = run(capsys, "verify", "--n-max", "5", "--ells", "2")
        assert code == 1
        assert "FAIL broken at n=3" in err
        assert json.loads(out)["failures"][0]["detail"] == "boom"


class TestSerialization:
    @pytest.mark.parametrize("n, ell", [(1, 2), (6, 2), (9, 3), (12, 5), (7, 0)])
    def test_json_round_trip(self, n, ell):
        table = full_table(CharParams(n, ell))
        text = to_json(table)
        jsonschema.validate(json.loads(text), TABLE_SCHEMA)
        assert from_json(text) == table

    def test_rendering_deterministic(self):
        table = full_table(CharParams(10, 2))
        assert to_text(table) == to_text(full_table(CharParams(10, 2)))
        assert to_latex(table) == to_latex(full_table(CharParams(10, 2)))


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "modspringer", "table", "--n", "8", "--ell", "2", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["n"] == 8
