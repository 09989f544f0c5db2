import io
import json
import subprocess
import sys

import pytest

from keytabloid.cli import run
from keytabloid.tabloid import Tabloid


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestEnum:
    def test_count(self):
        assert cli("enum", "--shape", "0,2,1", "--count") == (0, "6\n", "")

    def test_listing(self):
        code, out, _ = cli("enum", "--shape", "0,2,1")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 6
        assert "123\t/1,3/2" in lines

    def test_json(self):
        code, out, _ = cli("enum", "--shape", "3,1,1", "--json")
        data = json.loads(out)
        assert code == 0 and len(data) == 3
        assert {tuple(map(tuple, d["rows"])) for d in data} == {
            ((1, 1, 2), (2,), (3,)), ((1, 1, 3), (2,), (3,)), ((1, 1, 1), (2,), (3,))}
        for d in data:
            Tabloid.from_json(d)

    def test_alphabet(self):
        assert cli("enum", "--shape", "1,1", "--alphabet", "3", "--count")[1] == "3\n"

    def test_count_and_json_conflict(self):
        code, out, _ = cli("enum", "--shape", "1", "--count", "--json")
        assert code == 2
        assert json.loads(out)["error"] == "usage"


class TestCrystal:
    def test_json_default(self):
        code, out, _ = cli("crystal", "--shape", "0,2,1")
        data = json.loads(out)
        assert code == 0
        assert len(data["nodes"]) == 6
        assert [e["label"] for e in data["edges"]] == [0, 1, 2, 1, 1]
        assert data["nodes"][data["root"]]["reading_word"] == "123"

    def test_dot(self):
        code, out, _ = cli("crystal", "--shape", "0,2,1", "--format", "dot")
        assert code == 0 and out.startswith("digraph crystal {")
        assert out.count("->") == 5

    def test_finite_only(self):
        data = json.loads(cli("crystal", "--shape", "0,2,1", "--finite-only")[1])
        assert [e["label"] for e in data["edges"]] == [1, 2, 1, 1]

    def test_bad_format(self):
        assert cli("crystal", "--shape", "1,1", "--format", "png")[0] == 2


class TestCharacters:
    def test_char(self):
        assert cli("char", "--shape", "3,1,1") == \
            (0, "q*x^(2,2,1) + q*x^(2,1,2) + x^(3,1,1)\n", "")

    def test_char_json(self):
        data = json.loads(cli("char", "--shape", "3,1,1", "--json")[1])
        assert data["text"] == "q*x^(2,2,1) + q*x^(2,1,2) + x^(3,1,1)"
        assert data["terms"][0] == {"q": 1, "exponent": [2, 2, 1], "coeff": 1}

    def test_key(self):
        assert cli("key", "--comp", "2,1,2")[1] == "x^(2,2,1) + x^(2,1,2)\n"

    def test_decompose(self):
        code, out, _ = cli("decompose", "--shape", "2,3,0")
        assert code == 0
        assert out.splitlines() == ["q^2 * kappa_(1,2,2)", "q^1 * kappa_(1,3,1)",
                                    "q^1 * kappa_(2,2,1)", "q^0 * kappa_(2,3,0)"]

    def test_decompose_json_matches_char(self):
        data = json.loads(cli("decompose", "--shape", "1,3,1", "--json")[1])
        assert data["terms"] == [{"q": 1, "key": [1, 2, 2]}, {"q": 0, "key": [1, 3, 1]}]
        assert data["character"] + "\n" == cli("char", "--shape", "1,3,1")[1]


class TestOrbit:
    def test_eta_is_empty(self):
        assert cli("orbit", "--shape", "2,2,1") == (0, "\n", "")

    def test_word(self):
        assert cli("orbit", "--shape", "0,2,1")[1] == "0,2,1\n"

    def test_json(self):
        assert json.loads(cli("orbit", "--shape", "3,1,1", "--json")[1]) == \
            {"shape": [3, 1, 1], "word": [2, 0]}


class TestEmbed:
    def test_file_input(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"shape": [3, 1, 1], "alphabet": 3,
                                    "rows": [[1, 1, 2], [2], [3]]}))
        code, out, _ = cli("embed", "--shape", "3,1,1", "--i", "1", "--input", str(path))
        assert code == 0
        assert json.loads(out) == {"shape": [1, 3, 1], "alphabet": 3,
                                   "rows": [[1], [2, 1, 2], [3]]}

    def test_shape_mismatch(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"shape": [1, 1], "rows": [[1], [2]]}))
        code, out, _ = cli("embed", "--shape", "2,0", "--i", "1", "--input", str(path),
                           "--json")
        assert code == 1 and json.loads(out)["error"] == "DomainError"

    def test_not_an_up_step(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"shape": [1, 1], "rows": [[1], [2]]}))
        code, _, err = cli("embed", "--shape", "1,1", "--i", "1", "--input", str(path))
        assert code == 1 and err.startswith("error:")

    def test_missing_file(self, tmp_path):
        code, out, _ = cli("embed", "--shape", "1,1", "--i", "0", "--input",
                           str(tmp_path / "none.json"), "--json")
        assert code == 1 and "cannot read" in json.loads(out)["message"]

    def test_bad_json(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text("{")
        assert cli("embed", "--shape", "1,1", "--i", "0", "--input", str(path))[0] == 1


class TestVerify:
    def test_small_sweep(self):
        code, out, _ = cli("verify", "--max-rows", "3", "--max-degree", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1].startswith("OK:")
        assert not any(line.startswith("FAIL") for line in lines)

    def test_suite_json(self):
        code, out, _ = cli("verify", "--max-rows", "2", "--max-degree", "3", "--suite",
                           "energy", "--json")
        data = json.loads(out)
        assert code == 0 and data["ok"] and data["suites"] == ["energy"]
        assert {c["check"] for c in data["checks"]} == {
            "axioms", "single_row_global_energy", "row_energy_sum"}

    def test_bad_suite(self):
        assert cli("verify", "--suite", "nope")[0] == 2


class TestErrors:
    def test_missing_subcommand(self):
        code, _, err = cli()
        assert code == 2 and "usage:" in err

    def test_unknown_flag(self):
        assert cli("orbit", "--shape", "1,1", "--bogus")[0] == 2

    def test_bad_shape_json_payload(self):
        code, out, _ = cli("char", "--shape", "1,x", "--json")
        assert code == 2
        assert json.loads(out) == {
            "error": "usage",
            "message": "keytabloid char: argument --shape: not a comma-separated "
                       "composition: '1,x'"}

    def test_negative_part(self):
        assert cli("enum", "--shape", "1,-1")[0] == 2

    def test_help_exits_cleanly(self, capsys):
        assert cli("--help")[0] == 0


def test_output_is_deterministic():
    for argv in (["crystal", "--shape", "2,3,0", "--format", "dot"],
                 ["char", "--shape", "1,2,1,2"], ["decompose", "--shape", "0,3,2"]):
        assert cli(*argv) == cli(*argv)


@pytest.mark.parametrize("argv", [["-m", "keytabloid", "enum", "--shape", "0,2,1", "--count"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, *argv], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "6\n"
