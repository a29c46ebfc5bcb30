import json
import os
import subprocess
import sys

import pytest

import machh as M
from machh.cli import main
from machh.serialization import (
    ParseError,
    complex_from_dict,
    complex_to_dict,
    load_complex,
    render_table_csv,
)
from machh.double import hh_ranks


def write_complex(path, K, meta=None):
    path.write_text(json.dumps(complex_to_dict(K, meta)))
    return str(path)


@pytest.fixture()
def square_file(tmp_path, square):
    return write_complex(tmp_path / "square.json", square)


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSerialization:
    def test_roundtrip(self, square):
        assert complex_from_dict(complex_to_dict(square)) == square

    def test_bad_documents(self):
        with pytest.raises(ParseError):
            complex_from_dict([1, 2])
        with pytest.raises(ParseError):
            complex_from_dict({"facets": [[1]]})
        with pytest.raises(ParseError):
            complex_from_dict({"m": 2, "facets": "nope"})
        with pytest.raises(ParseError):
            complex_from_dict({"m": 2, "facets": [[1, 2]], "labels": ["a"]})

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_complex(tmp_path / "absent.json")

    def test_csv_render(self, square):
        assert render_table_csv(hh_ranks(square)) == (
            "k,l,rank\n0,0,1\n1,2,2\n2,4,1\n"
        )


class TestRankCommands:
    def test_hh_json(self, capsys, square_file):
        code, out, _ = run_main(capsys, "hh", square_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["hh"] == {"(0,0)": 1, "(-1,4)": 2, "(-2,8)": 1}
        assert doc["hh_total"] == 4
        assert doc["hh_rows"] == {"-1": 1, "0": 2, "1": 1}
        assert doc["euler_hh"] == 0
        assert doc["field"] == "Q"

    def test_h_json(self, capsys, square_file):
        code, out, _ = run_main(capsys, "h", square_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["h"] == {"(0,0)": 1, "(-1,4)": 2, "(-2,8)": 1}
        assert "hh" not in doc

    def test_gf_field_and_verify_exact(self, capsys, square_file):
        code, out, _ = run_main(
            capsys, "hh", square_file, "--field", "gf:32003", "--verify-exact"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["field"] == "GF(32003)"
        assert doc["verified_exact"] is True

    def test_formats(self, capsys, square_file):
        code, out, _ = run_main(capsys, "hh", square_file, "--format", "csv")
        assert code == 0 and out.startswith("k,l,rank\n")
        code, out, _ = run_main(capsys, "hh", square_file, "--format", "table")
        assert code == 0 and out.startswith("hh\n") and "total      4" in out

    def test_deterministic_across_threads(self, capsys, square_file):
        outputs = set()
        for threads in ("1", "4", "8"):
            code, out, _ = run_main(capsys, "hh", square_file, "--threads", threads)
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1

    def test_threads_env_default(self, capsys, square_file, monkeypatch):
        monkeypatch.setenv("MACHH_THREADS", "4")
        code, out, _ = run_main(capsys, "hh", square_file)
        assert code == 0
        monkeypatch.setenv("MACHH_THREADS", "banana")
        code, _, err = run_main(capsys, "hh", square_file)
        assert code == 2 and "bad thread count" in err

    def test_out_file(self, capsys, square_file, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run_main(capsys, "hh", square_file, "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["hh_total"] == 4
        assert not (tmp_path / "result.json.tmp").exists()


class TestExitCodes:
    def test_resource_limit(self, capsys, square_file):
        code, _, err = run_main(capsys, "hh", square_file, "--max-m", "3")
        assert code == 3 and "ResourceLimit" in err

    def test_ghost_vertex(self, capsys, tmp_path):
        path = tmp_path / "ghost.json"
        path.write_text(json.dumps({"m": 3, "facets": [[1, 2]]}))
        code, _, err = run_main(capsys, "hh", str(path))
        assert code == 4 and "GhostVertex" in err

    def test_parse_errors(self, capsys, tmp_path, square_file):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_main(capsys, "hh", str(bad))[0] == 2
        assert run_main(capsys, "hh", str(tmp_path / "absent.json"))[0] == 2
        assert run_main(capsys, "hh", square_file, "--field", "gf:15")[0] == 2
        assert run_main(capsys, "hh", square_file, "--threads", "0")[0] == 2
        assert run_main(capsys, "ladder", "--r-max", "0")[0] == 2

    def test_not_applicable(self, capsys, square_file):
        code, _, err = run_main(capsys, "check-thm1", square_file, "1,2")
        assert code == 1 and "NotApplicable" in err

    def test_no_partial_out_on_failure(self, capsys, square_file, tmp_path):
        target = tmp_path / "never.json"
        code, _, _ = run_main(
            capsys, "hh", square_file, "--max-m", "3", "--out", str(target)
        )
        assert code == 3
        assert not target.exists()
        assert not target.with_suffix(".json.tmp").exists()


class TestConstruct:
    def test_k2r_meta(self, capsys):
        code, out, _ = run_main(capsys, "construct", "k2r", "--r", "5")
        assert code == 0
        doc = json.loads(out)
        built = M.k2r_family(5)
        assert doc["m"] == built.complex.m
        assert doc["meta"]["non_edge"] == list(built.non_edge)
        assert complex_from_dict(doc) == built.complex

    def test_join_and_wedge(self, capsys, tmp_path, square):
        a = write_complex(tmp_path / "a.json", square)
        b = write_complex(tmp_path / "b.json", M.two_points())
        code, out, _ = run_main(capsys, "construct", "join", a, b)
        assert code == 0 and json.loads(out)["m"] == 6
        code, out, _ = run_main(
            capsys, "construct", "wedge", a, a, "--at-a", "1", "--at-b", "2"
        )
        assert code == 0 and json.loads(out)["m"] == 7

    def test_glue(self, capsys, tmp_path, square, square_diag):
        a = write_complex(tmp_path / "a.json", square)
        code, out, _ = run_main(capsys, "construct", "glue", a, "--face", "1,3")
        assert code == 0
        assert complex_from_dict(json.loads(out)) == square_diag
        # gluing a face whose boundary is absent is an input error
        code, _, _ = run_main(capsys, "construct", "glue", a, "--face", "1,2,3")
        assert code == 2


class TestCheckThm1:
    def test_square_diagonal(self, capsys, square_file):
        code, out, _ = run_main(capsys, "check-thm1", square_file, "1,3")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["witnessing_J"] == [1, 2, 3, 4]
        assert doc["predicted_delta"] == -2
        assert doc["rank_before"] == 4 and doc["rank_after"] == 2

    def test_case_two(self, capsys, tmp_path, case2_complex):
        path = write_complex(tmp_path / "c2.json", case2_complex)
        code, out, _ = run_main(capsys, "check-thm1", path, "1,2")
        doc = json.loads(out)
        assert code == 0 and doc["predicted_delta"] == 0
        assert doc["rows_after"] == {"-1": 1, "1": 1}


class TestLadder:
    def test_csv(self, capsys):
        code, out, _ = run_main(capsys, "ladder", "--r-max", "4", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "r,m,rank,expected,pass"
        for r, line in enumerate(lines[1:], start=1):
            fields = line.split(",")
            assert fields[0] == str(r)
            assert fields[2] == fields[3] == str(2 * r)
            assert fields[4] == "true"

    def test_json(self, capsys):
        code, out, _ = run_main(capsys, "ladder", "--r-max", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_pass"] is True
        assert [row["rank"] for row in doc["rows"]] == [2, 4, 6]


class TestOracleCommand:
    def test_rows(self, capsys, square_file):
        code, out, _ = run_main(capsys, "oracle", square_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["hh_rows"] == {"-1": 1, "0": 2, "1": 1}
        assert doc["hh_total"] == 4


class TestInstalledEntryPoint:
    def test_subprocess_byte_identical(self, square_file):
        outs = set()
        for threads in ("1", "4"):
            env = dict(os.environ, MACHH_THREADS=threads)
            proc = subprocess.run(
                [sys.executable, "-m", "machh.cli", "hh", square_file],
                capture_output=True,
                env=env,
            )
            assert proc.returncode == 0, proc.stderr
            outs.add(proc.stdout)
        assert len(outs) == 1
