"""End-to-end checks of the command surface.

Covers the exit-code contract (0 success, 2 usage, 3 math-domain, 4 parse),
byte-identical JSON across reruns, table/JSON agreement, stdin via "-", and
validation of every JSON envelope against the committed schema.
"""

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import Draft7Validator

from apolar.cli import main

_SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "cli_schema.json"
_VALIDATOR = Draft7Validator(json.loads(_SCHEMA_PATH.read_text()))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    """Run with --json, validate the envelope, and return (code, doc)."""
    code, out, _ = run(capsys, *argv, "--json")
    assert out.endswith("\n") and out.count("\n") == 1
    doc = json.loads(out)
    problems = [e.message for e in _VALIDATOR.iter_errors(doc)]
    assert problems == []
    return code, doc


def table_rows(out):
    rows = {}
    for line in out.splitlines():
        key, _, value = line.partition(" = ")
        rows[key.rstrip()] = value
    return rows


class TestDocumentedExamples:
    def test_annihilate_recovers_the_plane_curve_ideal(self, capsys):
        code, doc = run_json(
            capsys, "annihilate", "--ring", "QQ[x,y]", "--inverse", "x^-2+y^-3"
        )
        assert code == 0
        assert doc["result"]["generators"] == ["x^2 - y^3", "x*y"]
        assert doc["result"]["quotient_dim"] == 5
        assert doc["ring"] == {"field": "QQ", "variables": ["x", "y"], "weights": [1, 1]}
        assert doc["provenance"] == {"seed": None, "bound": 5, "bound_limited": False}

    def test_annihilate_runs_backwards(self, capsys):
        code, doc = run_json(
            capsys, "annihilate", "--ring", "QQ[x,y]", "--ideal", "x^2 - y^3, x*y"
        )
        assert code == 0
        assert doc["result"]["generators"] == ["x^-2 + y^-3"]

    def test_annihilate_of_a_monomial_complete_intersection(self, capsys):
        code, doc = run_json(
            capsys,
            "annihilate", "--ring", "QQ[x,y]", "--ideal", "x^3, y^3", "--bound", "6",
        )
        assert code == 0
        assert doc["result"]["generators"] == ["x^-2*y^-2"]
        assert doc["result"]["generator_degrees"] == [-4]
        assert doc["result"]["hilbert"] == {"offset": 0, "values": [1, 2, 3, 2, 1]}

    def test_iset_vectors_and_permissibility(self, capsys):
        code, doc = run_json(
            capsys, "iset", "--ring", "GF(101)[x,y,z]", "--socle", "3:1,4:2"
        )
        assert code == 0
        result = doc["result"]
        assert result["hI"] == [
            [3, {"offset": 0, "values": [1, 3, 6, 7, 2]}],
            [4, {"offset": 0, "values": [1, 3, 6, 6, 2]}],
        ]
        assert result["betaI"] == [[3, 19], [4, 18]]
        assert result["permissible"] is True
        assert result["v"] == 3
        assert result["b1"] == 3
        assert result["failing_clause"] is None

    def test_dims_of_a_two_socle_degree_type(self, capsys):
        code, doc = run_json(capsys, "dims", "--socle", "2:1,3:1", "--r", "5")
        assert code == 0
        result = doc["result"]
        assert result["H"] == 43
        assert result["R"] == 9
        assert result["F"] == 52
        assert result["elementary"] == 57
        assert result["principal"] == 65
        assert result["small_component"] is True
        assert result["length"] == 13

    def test_assoc_graded_of_an_inhomogeneous_dual(self, capsys):
        code, doc = run_json(
            capsys, "assoc-graded", "--ring", "QQ[x,y]", "--inverse", "x^-2 + y^-3"
        )
        assert code == 0
        result = doc["result"]
        assert result["graded_ideal_generators"] == ["x^2", "x*y", "y^4"]
        assert result["dual_generator_count"] == 2
        assert result["socle"] == {"offset": 1, "values": [1, 0, 1]}
        assert result["level"] is False
        assert result["gorenstein"] is False

    def test_gorenstein_ambient_quotient(self, capsys):
        code, doc = run_json(
            capsys,
            "construct", "gorenstein-ambient",
            "--r", "3", "--e", "2", "--forms", "X1+X2+X3, X2+2*X3",
        )
        assert code == 0
        result = doc["result"]
        assert result["h"] == {"offset": 0, "values": [1, 3, 6, 7, 5, 2]}
        assert result["wstar"] == {
            "offset": -6,
            "values": [1, 1, 1, -2, -2, -2, 1],
        }
        assert result["n"] == -3
        assert result["matches_prediction"] is True
        assert result["type"] == {"offset": 5, "values": [2]}

    def test_seeded_random_compressed_draw(self, capsys):
        code, doc = run_json(
            capsys,
            "construct", "random",
            "--ring", "GF(101)[x,y,z]", "--socle", "3:1,4:2", "--seed", "11",
        )
        assert code == 0
        result = doc["result"]
        assert result["compressed"] is True
        assert result["attempt"] == 0
        assert result["hilbert"] == {"offset": 0, "values": [1, 3, 6, 7, 2]}
        assert result["type"] == {"offset": 3, "values": [1, 2]}
        assert doc["provenance"]["seed"] == 11


class TestEnvelope:
    def test_json_is_byte_identical_across_runs(self, capsys):
        argv = ("iset", "--ring", "GF(101)[x,y,z]", "--socle", "3:1,4:2", "--json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_seeded_runs_are_reproducible(self, capsys):
        argv = (
            "construct", "random",
            "--ring", "GF(13)[x,y]", "--socle", "4:1", "--seed", "5", "--json",
        )
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_table_and_json_agree(self, capsys):
        argv = ("hilbert", "--ring", "QQ[x,y]", "--ideal", "x^2, x*y, y^3")
        code, out, _ = run(capsys, *argv)
        assert code == 0
        rows = table_rows(out)
        _, doc = run_json(capsys, *argv)
        assert rows["hilbert"] == "(1, 2, 1)"
        assert doc["result"]["hilbert"] == {"offset": 0, "values": [1, 2, 1]}
        assert rows["provenance.bound"] == str(doc["provenance"]["bound"])
        assert rows["provenance.bound_limited"] == "false"
        assert rows["provenance.seed"] == "none"
        assert rows["ring"] == "QQ[x, y]"

    def test_stdin_dash_reads_generators(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("x^2, x*y, y^3"))
        _, from_stdin = run_json(
            capsys, "hilbert", "--ring", "QQ[x,y]", "--ideal", "-"
        )
        _, direct = run_json(
            capsys, "hilbert", "--ring", "QQ[x,y]", "--ideal", "x^2, x*y, y^3"
        )
        assert from_stdin == direct

    def test_module_entry_point_matches_in_process_output(self, capsys):
        argv = ["dims", "--socle", "2:1,3:1", "--r", "5", "--json"]
        proc = subprocess.run(
            [sys.executable, "-m", "apolar.cli", *argv],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        _, out, _ = run(capsys, *argv)
        assert proc.stdout == out


class TestExitCodes:
    def test_usage_error_for_both_sides(self, capsys):
        code, doc = run_json(
            capsys,
            "annihilate", "--ring", "QQ[x,y]", "--ideal", "x", "--inverse", "x^-1",
        )
        assert code == 2
        assert doc["error"]["code"] == 2
        assert "exactly one of" in doc["error"]["message"]

    def test_usage_error_for_missing_ring(self, capsys):
        code, doc = run_json(capsys, "hilbert", "--ideal", "x^2")
        assert code == 2
        assert doc["error"]["message"] == "this command needs --ring"

    def test_unknown_command_is_exit_2(self, capsys):
        code, out, _ = run(capsys, "no-such-command")
        assert code == 2
        assert out == ""

    def test_insufficient_bound_is_exit_3(self, capsys):
        # the default bound (2 + max generator degree) cannot certify that
        # QQ[x,y]/(x^3, y^3) is Artinian, and the tool refuses to guess
        code, doc = run_json(
            capsys, "annihilate", "--ring", "QQ[x,y]", "--ideal", "x^3, y^3"
        )
        assert code == 3
        assert doc["error"]["code"] == 3
        assert "raise the bound" in doc["error"]["message"]

    def test_empty_socle_type_is_exit_3(self, capsys):
        code, doc = run_json(capsys, "iset", "--ring", "QQ[x,y]", "--socle", "")
        assert code == 3
        assert doc == {
            "error": {"code": 3, "message": "socle type is empty", "values": []}
        }

    def test_parse_error_is_exit_4_with_offset(self, capsys):
        code, doc = run_json(
            capsys, "annihilate", "--ring", "QQ[x,y]", "--inverse", "x^-2 + q"
        )
        assert code == 4
        assert doc["error"] == {
            "code": 4, "message": "unknown variable 'q'", "offset": 7
        }

    def test_bad_ring_spec_is_exit_4(self, capsys):
        code, doc = run_json(capsys, "hilbert", "--ring", "GF(9)[x]", "--ideal", "x")
        assert code == 4
        assert "not prime" in doc["error"]["message"]

    def test_table_mode_errors_go_to_stderr(self, capsys):
        code, out, err = run(
            capsys, "annihilate", "--ring", "QQ[x,y]", "--ideal", "x^3, y^3"
        )
        assert code == 3
        assert out == ""
        assert err.startswith("error: ")


class TestSchemaSweep:
    """Every subcommand's JSON output validates against the committed schema.

    run_json validates internally, so each call here is an assertion.
    """

    SUCCESS = [
        ("socle", "--ring", "QQ[x,y]", "--ideal", "x^2, y^3"),
        ("socle", "--ring", "QQ[x,y]", "--inverse", "x^-1*y^-2"),
        ("profile", "--ring", "QQ[x,y]", "--inverse", "x^-3 + y^-3, x^-1*y^-1"),
        ("linkage", "--ring", "QQ[x,y]", "--ideal", "x, y^3",
         "--ambient", "x^3, y^3", "--bound", "6"),
        ("tangents", "--ring", "QQ[x,y]", "--ideal", "x^2, x*y, y^3"),
        ("construct", "power-sum", "--ring", "QQ[x,y]",
         "--points", "1,0;0,1;1,1", "--scalars", "1,1,1",
         "--a", "4", "--s", "4"),
        ("construct", "prnonempty", "--r", "2", "--e", "3",
         "--socle", "3:1,5:1", "--n", "-2"),
        ("series", "wstar", "--ambient-h", "1,3,6,7,6,3,1", "--a", "6",
         "--socle", "3:1"),
        ("series", "froberg", "--base-h", "1,3,6,10,15,21", "--ci", "2,2",
         "--forms", "3", "--n", "6"),
        ("series", "koszul", "--h", "1,2,2,1", "--hq", "1,2,1",
         "--degrees", "2", "--n", "4"),
    ]

    FAILING = [
        ("annihilate", "--ring", "QQ[x,y]", "--ideal", "x^3, y^3"),
        ("annihilate", "--ring", "QQ[x,y]", "--inverse", "x^-2 + q"),
        ("hilbert", "--ideal", "x^2"),
        ("construct", "power-sum", "--ring", "QQ[x,y]",
         "--points", "1,0;0,1", "--scalars", "1,1", "--a", "4", "--s", "9"),
    ]

    @pytest.mark.parametrize("argv", SUCCESS, ids=lambda a: " ".join(a[:2]))
    def test_success_envelopes_validate(self, capsys, argv):
        code, doc = run_json(capsys, *argv)
        assert code == 0
        assert set(doc) == {"ring", "result", "provenance"}

    @pytest.mark.parametrize("argv", FAILING, ids=lambda a: " ".join(a[:2]))
    def test_error_envelopes_validate(self, capsys, argv):
        code, doc = run_json(capsys, *argv)
        assert code in (2, 3, 4)
        assert set(doc) == {"error"}
        assert doc["error"]["code"] == code
