import json
import subprocess
import sys

import pytest

from skewschur import cli
from skewschur.jsonio import InvalidInputError, filling_from_json, filling_to_json, load_json_arg, shape_from_json
from skewschur.shapes import SkewShape, is_ssyt, iter_fillings

SHAPE = {"lambda": [3, 2], "mu": [1]}
F = {"shape": SHAPE, "rows": [[2, 1], [3, 1]]}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out else None), err


class TestJsonIO:
    def test_filling_round_trip(self):
        f = filling_from_json(F)
        assert f.rows == ((2, 1), (3, 1))
        assert filling_from_json(filling_to_json(f)) == f

    def test_file_argument(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps(F), encoding="utf-8")
        assert load_json_arg(str(path)) == F

    @pytest.mark.parametrize(
        "doc",
        [
            {"lambda": [2, 3]},
            {"lambda": [2], "mu": [3]},
            {"lambda": "3,2"},
            {"mu": [1]},
            {"lambda": [2], "extra": 1},
            {"lambda": [2], "schemaVersion": 2},
        ],
    )
    def test_bad_shapes(self, doc):
        with pytest.raises(InvalidInputError):
            shape_from_json(doc)

    @pytest.mark.parametrize(
        "doc",
        [
            {"shape": SHAPE, "rows": [[2, 1], [3]]},
            {"shape": SHAPE, "rows": [[2, 0], [3, 1]]},
            {"shape": SHAPE, "rows": [[2, 1], [3, 1]], "m": 2},
            {"shape": SHAPE},
        ],
    )
    def test_bad_fillings(self, doc):
        with pytest.raises(InvalidInputError):
            filling_from_json(doc)

    def test_malformed_text(self):
        with pytest.raises(InvalidInputError):
            load_json_arg("{not json")


class TestSubcommands:
    def test_ssyt(self, capsys):
        code, doc, _ = run_json(capsys, "ssyt", "--shape", json.dumps(SHAPE), "--content", "[2,1,1]")
        assert code == 0 and doc["schemaVersion"] == 1
        assert doc["tableaux"] == [[[1, 3], [1, 2]], [[1, 2], [1, 3]], [[1, 1], [2, 3]]]

    def test_ssyt_impossible(self, capsys):
        _, doc, _ = run_json(capsys, "ssyt", "--shape", json.dumps(SHAPE), "--content", "[4]")
        assert doc["tableaux"] == []
        _, doc, _ = run_json(capsys, "ssyt", "--shape", json.dumps(SHAPE), "--content", "[1]")
        assert doc["tableaux"] == []

    def test_ssyt_count_matches_brute_force(self, capsys):
        shape = SkewShape((2, 2))
        _, doc, _ = run_json(capsys, "ssyt", "--shape", '{"lambda":[2,2]}', "--content", "[1,1,1,1]")
        brute = [f for f in iter_fillings(shape, 4) if is_ssyt(f) and f.content == (1, 1, 1, 1)]
        assert len(doc["tableaux"]) == len(brute) == 2

    def test_straighten_both(self, capsys):
        code, doc, _ = run_json(capsys, "straighten", "--filling", json.dumps(F), "--method", "both", "--basis", "ssyt")
        assert code == 0 and doc["agree"]
        assert [c["coeff"] for c in doc["coeffs"]] == [-1, 1, -1]
        assert [c["index"] for c in doc["coeffs"]] == [1, 2, 3]

    def test_straighten_d_basis(self, capsys):
        _, doc, _ = run_json(capsys, "straighten", "--filling", json.dumps(F))
        assert doc["basis"] == "d"
        assert [(c["index"], c["coeff"]) for c in doc["coeffs"]] == [(2, 1), (3, -1)]
        assert doc["coeffs"][0]["tableau"] == [[1, 2], [1, 3]]

    def test_straighten_ssyt_input(self, capsys):
        s = {"shape": SHAPE, "rows": [[1, 2], [1, 3]]}
        _, doc, _ = run_json(capsys, "straighten", "--filling", json.dumps(s), "--method", "iterative", "--basis", "ssyt")
        assert doc["coeffs"] == [{"index": 2, "tableau": [[1, 2], [1, 3]], "coeff": 1}]

    def test_straighten_zero(self, capsys):
        z = {"shape": {"lambda": [2, 2]}, "rows": [[1, 2], [1, 3]]}
        code, doc, _ = run_json(capsys, "straighten", "--filling", json.dumps(z))
        assert code == 0
        assert doc["coeffs"] == [] and doc["note"] == "zero element"

    def test_straighten_both_reports_disagreement(self, capsys, monkeypatch):
        from skewschur.expansion import Expansion

        real = cli.straighten

        def broken(f, method, basis, engine="backtrack"):
            e = real(f, method, basis, engine)
            if method == "iterative":
                return Expansion(e.basis, e.context, {0: 7})
            return e

        monkeypatch.setattr(cli, "straighten", broken)
        code, doc, _ = run_json(capsys, "straighten", "--filling", json.dumps(F), "--method", "both", "--basis", "ssyt")
        assert code == 1 and not doc["agree"]
        assert doc["diff"][0] == {"index": 1, "noniterative": -1, "iterative": 7}

    def test_rcoeff(self, capsys):
        shape = {"lambda": [3, 2, 1], "mu": [1, 1]}
        f = json.dumps({"shape": shape, "rows": [[2, 1], [3], [1]]})
        s = json.dumps({"shape": shape, "rows": [[1, 3], [2], [1]]})
        assert run_json(capsys, "rcoeff", "--filling", f, "--tableau", s)[1] == -1
        assert run_json(capsys, "rcoeff", "--filling", s, "--tableau", f)[1] == 0
        assert run_json(capsys, "rcoeff", "--filling", f, "--tableau", s, "--engine", "polynomial")[1] == -1

    def test_rcoeff_shape_mismatch(self, capsys):
        code, _, err = run(capsys, "rcoeff", "--filling", json.dumps(F), "--tableau", '{"shape":{"lambda":[1]},"rows":[[1]]}')
        assert code == 2 and "different shapes" in err

    def test_dpoly(self, capsys):
        _, doc, _ = run_json(capsys, "dpoly", "--filling", json.dumps(F))
        assert doc["text"] == "-Z[1,1]^2*Z[2,2]*Z[2,3] +Z[1,1]*Z[1,2]*Z[2,1]*Z[2,3]"
        assert doc["terms"][0] == {"monomial": [[1, 1, 2], [2, 2, 1], [2, 3, 1]], "coeff": -1}

    def test_dbasis(self, capsys):
        code, doc, _ = run_json(capsys, "dbasis", "--shape", json.dumps(SHAPE), "--content", "[2,1,1]")
        assert code == 0
        assert doc["transition"] == [[1, 0, 0], [0, 1, 0], [1, 0, 1]]
        assert doc["gramIsIdentity"] and doc["gramSchmidt"]

    def test_dbasis_rejects_wrong_total(self, capsys):
        assert run(capsys, "dbasis", "--shape", json.dumps(SHAPE), "--content", "[1]")[0] == 2

    @pytest.mark.parametrize(
        "suite, extra",
        [
            ("gram", ["--size-bound", "3"]),
            ("equivalence", ["--size-bound", "3", "--m", "2", "--count", "5", "--sample-size", "4"]),
            ("engines", ["--size-bound", "3", "--m", "2"]),
            ("leading-monomial", ["--size-bound", "3"]),
            ("garnir-identity", ["--count", "10", "--size-bound", "5", "--seed", "3"]),
        ],
    )
    def test_verify(self, capsys, suite, extra):
        code, doc, _ = run_json(capsys, "verify", "--suite", suite, *extra)
        assert code == 0
        assert doc["ok"] and doc["failed"] == 0
        assert doc["checked"] == len(doc["instances"]) > 0

    def test_bench_tiny(self, capsys):
        code, doc, _ = run_json(capsys, "bench", "--family", "tiny")
        assert code == 0
        assert doc["repetitions"] == 5
        assert len(doc["rows"]) == 6
        assert all(r["noniterative_rewrites"] == 0 for r in doc["rows"])
        assert doc["table"][0].split()[0] == "shape"

    def test_bench_text(self, capsys):
        code, out, _ = run(capsys, "bench", "--family", "tiny", "--text")
        assert code == 0 and out.splitlines()[0].split()[0] == "shape"

    def test_bench_needs_five_repetitions(self, capsys):
        assert run(capsys, "bench", "--family", "tiny", "--repetitions", "3")[0] == 2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "o.json"
        code, out, _ = run(capsys, "straighten", "--filling", json.dumps(F), "--out", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text(encoding="utf-8"))["basis"] == "d"


class TestFailClosed:
    @pytest.mark.parametrize(
        "argv",
        [
            ["straighten", "--filling", "{broken"],
            ["straighten", "--filling", "/nonexistent/f.json"],
            ["straighten", "--filling", '{"shape": {"lambda": [2]}, "rows": [[1]]}'],
            ["straighten"],
            ["ssyt", "--shape", '{"lambda": [1, 2]}', "--content", "[3]"],
            ["ssyt", "--shape", '{"lambda": [2]}', "--content", "[-1, 3]"],
            ["dpoly", "--filling", "[1, 2]"],
        ],
    )
    def test_exit_two(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == "" and err.startswith("error:")

    def test_argparse_errors_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["straighten", "--method", "sideways"])
        assert exc.value.code == 2


def test_output_is_byte_deterministic(capsys):
    argv = ["verify", "--suite", "garnir-identity", "--count", "15", "--size-bound", "6", "--seed", "9"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    other = run(capsys, *argv[:-1], "10")[1]
    assert other != first


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "skewschur.cli", "straighten", "--filling", json.dumps(F), "--basis", "ssyt"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert [c["coeff"] for c in json.loads(proc.stdout)["coeffs"]] == [-1, 1, -1]
