import csv
import io
import json
import subprocess
import sys

import pytest

from gcat import serialize
from gcat.categories import GAMMA_OS
from gcat.cli import main
from gcat.finset import CatKind, FinMap, enumerate_homs
from gcat.groebner import SubfunctorPresentation, buchberger, hilbert_table
from gcat.modules import element

GEN = element([(1, FinMap((1, 1, 2), 2)), (1, FinMap((1, 2, 2), 2))], p=2)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def gens_file(tmp_path):
    path = tmp_path / "gens.json"
    serialize.dump([serialize.element_to_json(GEN)], path)
    return path


class TestHoms:
    def test_os(self, capsys):
        code, out = run(capsys, "homs", "--cat", "os", "--from", 3, "--to", 2)
        lines = out.splitlines()
        assert code == 0 and lines[0] == "# count: 3"
        assert lines[2:] == ["1 1 2", "1 2 1", "1 2 2"]

    def test_empty(self, capsys):
        code, out = run(capsys, "homs", "--cat", "sur", "--from", 2, "--to", 3, "--format", "json")
        assert code == 0 and json.loads(out)["count"] == 0

    def test_bogus(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["homs", "--cat", "bogus", "--from", "1", "--to", "1"])
        assert exc.value.code == 2

    def test_thin_shell(self, capsys):
        _, out = run(capsys, "homs", "--cat", "inj", "--from", 2, "--to", 4, "--format", "json")
        maps = [FinMap.from_json(x) for x in json.loads(out)["maps"]]
        assert maps == enumerate_homs(CatKind.INJ, 2, 4)


class TestGroebner:
    def test_example(self, capsys, gens_file, tmp_path):
        basis, hil = tmp_path / "basis.json", tmp_path / "hilbert.csv"
        code, _ = run(capsys, "groebner", "--gens", gens_file, "--p", 2, "-T", 4,
                      "--out", basis, "--hilbert", hil, "--check-oracle")
        assert code == 0
        gb = serialize.basis_from_json(serialize.load(basis))
        ref = buchberger(SubfunctorPresentation([GEN], 2, 4, GAMMA_OS, 1, 2))
        assert gb.elements == ref.elements and len(gb.elements) == 3
        rows = list(csv.DictReader(io.StringIO(hil.read_text())))
        assert list(rows[0]) == ["level", "dim_standard_monomials", "dim_rank_oracle", "agree"]
        assert [int(r["dim_standard_monomials"]) for r in rows] == [0, 0, 0, 1, 5]
        assert all(r["agree"] == "1" for r in rows)

    def test_empty_generators(self, capsys, tmp_path):
        gens = tmp_path / "empty.json"
        gens.write_text("[]")
        code, out = run(capsys, "hilbert", "--gens", gens, "--p", 2, "-T", 3, "--target", 2)
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert [r[1] for r in rows] == ["0"] * 4
        code, out = run(capsys, "groebner", "--gens", gens, "--p", 2, "-T", 3, "--target", 2)
        assert json.loads(out)["elements"] == []

    def test_bad_prime(self, capsys, gens_file):
        with pytest.raises(SystemExit) as exc:
            main(["groebner", "--gens", str(gens_file), "--p", "4", "-T", "4"])
        assert exc.value.code == 2

    def test_bad_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _ = run(capsys, "groebner", "--gens", bad, "--p", 2, "-T", 4)
        assert code == 2

    def test_generator_above_width(self, capsys, gens_file):
        code, _ = run(capsys, "groebner", "--gens", gens_file, "--p", 2, "-T", 2)
        assert code == 2

    def test_hilbert_thin_shell(self, capsys, gens_file):
        code, out = run(capsys, "hilbert", "--gens", gens_file, "--p", 2, "-T", 4, "--format", "json")
        P = SubfunctorPresentation([GEN], 2, 4, GAMMA_OS, 1, 2)
        assert code == 0
        assert [(r["level"], r["dim_standard_monomials"], r["dim_rank_oracle"], r["agree"])
                for r in json.loads(out)] == hilbert_table(P)


class TestMember:
    def test_member_and_oracle(self, capsys, gens_file, tmp_path):
        basis = tmp_path / "basis.json"
        run(capsys, "groebner", "--gens", gens_file, "--p", 2, "-T", 4, "--out", basis)
        yes = tmp_path / "yes.json"
        serialize.dump(serialize.element_to_json(GEN), yes)
        no = tmp_path / "no.json"
        serialize.dump(serialize.element_to_json(element([(1, FinMap((1, 2, 1), 2))], p=2)), no)
        code, out = run(capsys, "member", "--basis", basis, "--element", yes, "--gens", gens_file)
        assert code == 0 and json.loads(out) == {"member": True, "oracle": True}
        code, out = run(capsys, "member", "--basis", basis, "--element", no)
        assert code == 0 and json.loads(out) == {"member": False}

    def test_oracle_disagreement_exit(self, capsys, gens_file, tmp_path):
        # a basis file that omits the completion step misses an element of F(4)
        basis = tmp_path / "partial.json"
        serialize.dump({"width": 4, "category": "gamma_os", "target": 2, "k": 1, "p": 2,
                        "elements": [serialize.element_to_json(GEN)]}, basis)
        v = element([(1, FinMap((1, 2, 2, 1), 2)), (1, FinMap((1, 2, 2, 2), 2))], p=2)
        elem = tmp_path / "v.json"
        serialize.dump(serialize.element_to_json(v), elem)
        code, out = run(capsys, "member", "--basis", basis, "--element", elem, "--gens", gens_file)
        assert code == 3 and json.loads(out) == {"member": False, "oracle": True}


class TestVerify:
    def test_contra1(self, capsys):
        code, out = run(capsys, "verify", "--suite", "contra1", "--max", 4)
        assert code == 0 and json.loads(out)["passed"]

    def test_contra1_vacuous(self, capsys):
        code, out = run(capsys, "verify", "--suite", "contra1", "--max", 0)
        rep = json.loads(out)
        assert code == 0 and all(c["cases"] == 0 for c in rep["checks"].values())

    def test_higman(self, capsys):
        code, _ = run(capsys, "verify", "--suite", "higman", "--trials", 10000, "--seed", 7)
        assert code == 0

    def test_fi_epi_fails(self, capsys):
        code, out = run(capsys, "verify", "--suite", "fi-epi")
        rep = json.loads(out)
        assert code == 1 and rep["checks"]["covered"]["failures"] == 145
        assert rep["checks"]["functorial"]["failures"] == 0

    @pytest.mark.parametrize("suite", ["stronglynoeth", "admissible", "tilde", "adjunction", "oracle-equiv"])
    def test_other_suites_pass(self, capsys, suite):
        code, out = run(capsys, "verify", "--suite", suite, "--trials", 20)
        assert code == 0, out

    def test_threads_same_result(self, capsys, monkeypatch):
        _, one = run(capsys, "verify", "--suite", "oracle-equiv", "--trials", 8)
        monkeypatch.setenv("GCAT_THREADS", "2")
        _, two = run(capsys, "verify", "--suite", "oracle-equiv", "--trials", 8)
        assert one == two


class TestWqo:
    def test_input(self, capsys, tmp_path):
        seq = tmp_path / "seq.json"
        maps = [FinMap((1, 2), 2), FinMap((2, 1), 2), FinMap((1, 2, 1), 2)]
        serialize.dump(serialize.finmaps_to_json(maps), seq)
        code, out = run(capsys, "wqo", "--input", seq, "--budget", 3)
        assert code == 0 and json.loads(out)["result"] == [0, 2]

    def test_mixed_codomains(self, capsys, tmp_path):
        seq = tmp_path / "seq.json"
        serialize.dump(serialize.finmaps_to_json([FinMap((1,), 1), FinMap((1,), 2)]), seq)
        code, _ = run(capsys, "wqo", "--input", seq)
        assert code == 2

    def test_random_chain(self, capsys):
        code, out = run(capsys, "wqo", "--random", "--mode", "chain", "--budget", 50, "--seed", 3)
        assert code == 0 and len(json.loads(out)["result"]) >= 2


class TestDemo:
    def test_poly(self, capsys):
        code, out = run(capsys, "demo", "poly", "--gens", "x^2+x+1,x^3+1", "--p", 2, "--deg", 8)
        rep = json.loads(out)
        assert code == 0 and rep["agrees_with_gcd"]
        assert rep["basis"] == ["x^2+x+1"] and rep["probe_mode"] == "exhaustive"
        assert rep["hilbert"] == [0, 0, 1, 2, 3, 4, 5, 6, 7]

    def test_random_probes(self, capsys):
        code, out = run(capsys, "demo", "poly", "--gens", "x^3+2x+1", "--p", 5, "--deg", 8, "--probes", 300)
        rep = json.loads(out)
        assert code == 0 and rep["probe_mode"] == "random" and rep["probes"] == 300

    def test_bad_poly(self, capsys):
        code, _ = run(capsys, "demo", "poly", "--gens", "x^^2", "--p", 2)
        assert code == 2


def test_deterministic_subprocess(gens_file):
    cmd = [sys.executable, "-m", "gcat.cli", "groebner", "--gens", str(gens_file), "--p", "2", "-T", "5"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
    cmd = [sys.executable, "-m", "gcat.cli", "verify", "--suite", "tilde", "--trials", "10", "--seed", "4"]
    a = subprocess.run(cmd, capture_output=True).stdout
    b = subprocess.run(cmd, capture_output=True).stdout
    assert a == b and a
