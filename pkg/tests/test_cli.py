import subprocess
import sys

import pytest

from htforest import cli, suites

X = "(*,(*,*));[1,2,3];((*,*),*)"


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestElementCommands:
    def test_reduce(self, capsys):
        assert run(capsys, "reduce", "((*,*),*);[1,2,3];((*,*),*)") == (0, "*;[1];*\n", "")

    def test_mul_applies_last_first(self, capsys):
        z = "(*,(*,*));[3,1,2];((*,*),*)"
        x = "((*,*),*);[1,2,3];(*,(*,*))"
        assert run(capsys, "mul", z, x)[1] == "((*,*),*);[3,1,2];((*,*),*)\n"

    def test_mul_many(self, capsys):
        square = run(capsys, "mul", X, X)[1].strip()
        assert run(capsys, "mul", X, X, X)[1] == run(capsys, "mul", square, X)[1]
        assert square == "(*,(*,(*,*)));[1,2,3,4];(((*,*),*),*)"

    def test_inv(self, capsys):
        assert run(capsys, "inv", X)[1] == "((*,*),*);[1,2,3];(*,(*,*))\n"

    def test_eq_double_expansion(self, capsys):
        expanded = "((*,*),((*,*),*));[1,2,3,4,5];(((*,*),(*,*)),*)"
        assert run(capsys, "eq", X, expanded) == (0, "true\n", "")
        assert run(capsys, "eq", X, "*;[1];*")[1] == "false\n"

    def test_act(self, capsys):
        assert run(capsys, "act", X, "--word", "101")[1] == "0 1 1\n"
        assert run(capsys, "act", "*,*;[2,1];*,*", "--word", "01", "--component", "2")[1] == "1:0 1\n"

    def test_eval(self, capsys):
        assert run(capsys, "eval", X, "--rational", "1/2^1")[1] == "1/2^2\n"

    def test_pm(self, capsys):
        assert run(capsys, "pm", X)[1] == "1:0 -> 1:00\n1:10 -> 1:01\n1:11 -> 1:1\n"

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "dot", "*;[1];*")
        assert code == 0 and out.startswith("digraph") and out.count("dashed") == 1

    def test_arity_flag_positions(self, capsys):
        assert run(capsys, "--arity", "3", "reduce", "*;[1];*")[1] == "*;[1];*\n"
        assert run(capsys, "random", "--arity", "3", "--carets", "2", "--seed", "1")[1].count(",") >= 4


class TestOtherCommands:
    def test_count(self, capsys):
        assert run(capsys, "count", "--leaves", "5")[1] == "14\n"
        assert run(capsys, "count", "--arity", "3", "--leaves", "5")[1] == "3\n"

    def test_independent(self, capsys):
        assert run(capsys, "independent", "2", "6") == (0, "true\n", "")
        assert run(capsys, "independent", "2", "4")[1] == "false\n"

    def test_prop(self, capsys):
        code, out, _ = run(capsys, "prop", "compose", "[1,2];(*,*)", "[2,1,3];(*,*),*")
        assert (code, out) == (0, "[2,1,3];((*,*),*)\n")
        code, out, _ = run(capsys, "prop", "square-fill", "[1,2];(*,*)", "[1];*")
        assert code == 0 and len(out.splitlines()) == 2

    def test_boxes(self, capsys):
        out = run(capsys, "boxes", "(1,2:*,(2,3:*,*,*))", "--cuts", "2;3")[1]
        assert out.splitlines()[0] == "[0/1,1/2]x[0/1,1/1]"
        assert len(out.splitlines()) == 4


class TestCheck:
    def test_group_axioms(self, capsys):
        code, out, _ = run(
            capsys, "check", "--suite", "group-axioms", "--arity", "2", "--roots", "1", "--trials", "500", "--seed", "7"
        )
        assert code == 0
        assert out.splitlines()[-1] == "group-axioms: PASS"
        assert "associativity: 500/500 passed" in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        def broken(n, r, trials, seed):
            res = suites.SuiteResult("oracle")
            res.record("always", False, lambda: "forced")
            return res

        monkeypatch.setitem(suites.RUNNERS, "oracle", broken)
        code, out, _ = run(capsys, "check", "--suite", "oracle")
        assert code == 2
        assert out.splitlines()[-1] == "oracle: FAIL"


class TestErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["reduce", "(*,*;[1,2];(*,*)"],
            ["mul", X, "*;[1];*,*"],
            ["act", X, "--word", "1"],
            ["eval", X, "--rational", "1/3^1"],
            ["independent", "1", "2"],
            ["reduce", X, "--bogus"],
            ["frobnicate"],
            ["count"],
        ],
    )
    def test_exit_one(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_deep_nesting(self, capsys):
        deep = "(" * 5000 + "*,*" + ")" * 5000
        assert run(capsys, "reduce", f"{deep};[1];*")[0] == 1


class TestDeterminism:
    ARGV = ["random", "--arity", "3", "--roots", "2", "--carets", "6", "--seed", "42"]

    def test_in_process(self, capsys):
        assert run(capsys, *self.ARGV) == run(capsys, *self.ARGV)

    def test_subprocess_bytes(self):
        def once(argv):
            return subprocess.run(
                [sys.executable, "-m", "htforest", *argv], capture_output=True, check=True
            ).stdout

        assert once(self.ARGV) == once(self.ARGV)
        check = ["check", "--suite", "fractions", "--trials", "30", "--seed", "5"]
        assert once(check) == once(check)
