"""Tests for the symdual command line interface."""

import io
import json
from contextlib import redirect_stdout

from symdual import __version__
from symdual.cli import build_parser, main


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_seq_right_json_envelope():
    code, out = run(
        [
            "seq",
            "right",
            "--alpha",
            "[1,1,3,2,5,3,7,4,9,5,11,6,13,7]",
            "--n-max",
            "5",
            "--format",
            "json",
        ]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["tool"] == "symdual"
    assert doc["version"] == __version__
    assert doc["command"] == "seq right"
    assert doc["seed"] == 0 and doc["characteristic"] == 0
    assert doc["caps"] == {
        "d_cap": 8,
        "k_cap": 16,
        "m_max": 4,
        "n_max": 5,
        "s_max": 3,
    }
    assert doc["result"]["window"] == {"start": 1, "values": [2, 4, 6, 8, 10]}
    assert doc["result"]["certified_monotone"] is True


def test_seq_alias_and_table_format():
    code, out = run(
        [
            "seq",
            "right-transform",
            "--alpha",
            "[1,2,3,4,5]",
            "--monotone",
            "--n-max",
            "6",
        ]
    )
    assert code == 0
    lines = out.splitlines()
    assert "result.window.values = 1 2 3 4" in lines
    assert "command = seq right" in lines


def test_byte_identical_output():
    argv = [
        "seq",
        "left",
        "--alpha",
        "[2,4,6,8,10]",
        "--monotone",
        "--n-max",
        "8",
        "--format",
        "json",
    ]
    assert run(argv) == run(argv)


def test_seq_class_and_growth():
    code, out = run(["seq", "class", "--alpha", "[1,5,3]", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["kind"] == "neither"
    assert doc["result"]["sub_violation"] == [1, 1]
    code, out = run(
        ["seq", "growth", "--alpha", "[2,3,5,6,8,9]", "--kind", "sub",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["bound"] == "3/2"
    assert doc["result"]["witness_n"] == 2


def test_exit_code_certification():
    code, _ = run(
        ["seq", "right", "--alpha", "[1,2,3]", "--monotone", "--n-max", "4",
         "--strict"]
    )
    assert code == 2


def test_exit_code_invalid():
    assert run(["nope"])[0] == 1
    assert run(["seq", "right", "--alpha", "not json"])[0] == 1
    assert run(["seq", "right", "--alpha", "[1]", "--char", "4"])[0] == 1
    assert run(["verify", "sec99"])[0] == 1


def test_filt_check_dc():
    desc = json.dumps(
        {
            "kind": "symbolic-points",
            "N": 2,
            "char": 0,
            "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        }
    )
    code, out = run(
        ["filt", "check-dc", "--json", desc, "--n-max", "3", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["closed"] is True
    assert doc["result"]["witness"] is None


def test_points_report_from_file(tmp_path):
    cfg = {
        "N": 2,
        "char": 0,
        "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    }
    f = tmp_path / "pts.json"
    f.write_text(json.dumps(cfg))
    code, out = run(
        ["points", "report", "--file", str(f), "--m-max", "3", "--d-cap", "8",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["reg"]["values"] == [2, 4, 6]
    assert doc["result"]["alpha"]["values"] == [2, 3, 5]
    assert doc["result"]["per_multiplicity"][1]["hilbert"]["values"] == [1, 3, 6, 9]


def test_points_report_inline_list():
    code, out = run(
        ["points", "report", "--points", "[[1,0,0],[0,1,0],[0,0,1]]",
         "--m-max", "2", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["reg"]["values"] == [2, 4]


def test_points_jets():
    code, out = run(
        [
            "points",
            "jets",
            "--points",
            "[[1,0,0],[0,1,0],[0,0,1]]",
            "--d-cap",
            "5",
            "--format",
            "json",
        ]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["indices"] == ["-inf", 0, 0, 1, 1, 2]


def test_monomial_sp(tmp_path):
    ideal = {"N": 2, "generators": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]}
    f = tmp_path / "triangle.json"
    f.write_text(json.dumps(ideal))
    code, out = run(["monomial", "sp", "--file", str(f), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["waldschmidt"] == "3/2"
    assert doc["result"]["areg"] == "2"
    assert doc["result"]["equal_sums"] is False
    assert doc["result"]["generator_vertex"] == [0, 1, 1]
    assert ["1/2", "1/2", "1/2"] in doc["result"]["polyhedron"]["vertices"]


def test_monomial_symbolic_and_closure():
    ideal = json.dumps({"N": 2, "generators": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]})
    code, out = run(
        ["monomial", "symbolic", "--json", ideal, "--n", "2", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["generators"] == [
        [1, 1, 1],
        [0, 2, 2],
        [2, 0, 2],
        [2, 2, 0],
    ]
    code, out = run(
        ["monomial", "closure", "--json", ideal, "--exponent", "[1,1,1]",
         "--n", "2", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == {"exponent": [1, 1, 1], "member": False, "n": 2}


def test_monomial_betanu_cap_exit():
    ideal = json.dumps({"N": 2, "generators": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]})
    code, _ = run(
        ["monomial", "betanu", "--json", ideal, "--w", "[1,1,1]",
         "--n-max", "3", "--d-cap", "2"]
    )
    assert code == 2


def test_verify_tag():
    code, out = run(["verify", "appA", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["all_passed"] is True
    assert [r["number"] for r in doc["result"]["results"]] == [5]
    assert all(r["passed"] for r in doc["result"]["results"])


def test_verify_table_lines():
    code, out = run(["verify", "appA"])
    assert code == 0
    assert out.startswith("[ 5] PASS")


def test_parser_help_mentions_threads():
    epilog = build_parser().epilog or ""
    assert "SYMDUAL_THREADS" in epilog
