import json

from monodom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_m3_report(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--ideal", "a*d,b*d,c*d,d^2", "--vars", "a,b,c,d"
        )
        assert code == 0
        assert "codim:        1" in out
        assert "odom:         4" in out
        assert "pd:           4" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "analyze",
            "--ideal",
            "a*d,b*d,c*d,d^2",
            "--vars",
            "a,b,c,d",
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["codim"] == 1
        assert payload["odom"] == 4
        assert payload["pd"] == 4
        assert payload["betti"] == [1, 4, 6, 4, 1]
        assert payload["minimal_nets"]["polarized"] == [
            ["d_1"],
            ["a_1", "b_1", "c_1", "d_2"],
        ]
        assert all(c["status"] in ("pass", "vacuous") for c in payload["checks"])
        assert list(payload) == sorted(payload)

    def test_json_byte_stable(self, capsys):
        args = ("analyze", "--ideal", "a*b,c*d,a*c,b*d", "--json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_checks_all_pass_for_variables(self, capsys):
        code, out, _ = run(capsys, "analyze", "--ideal", "a,b,c", "--json")
        payload = json.loads(out)
        assert code == 0
        assert {c["status"] for c in payload["checks"]} <= {"pass", "vacuous"}

    def test_json_ideal_text_reparses(self, capsys):
        from monodom import parse_ideal

        _, out, _ = run(
            capsys, "analyze", "--ideal", "a^2*e, b^3*f, c*e^2, d^2*f^3", "--json"
        )
        payload = json.loads(out)
        M = parse_ideal(payload["ideal"], payload["vars"])
        assert M.render() == payload["ideal"]
        assert list(M.table.names) == payload["vars"]

    def test_polarized_output_reparses(self, capsys):
        from monodom import parse_ideal, polarize

        _, out, _ = run(
            capsys, "polarize", "--ideal", "a*d,b*d,c*d,d^2", "--vars", "a,b,c,d",
            "--json",
        )
        payload = json.loads(out)
        M = parse_ideal(payload["ideal"], payload["vars"])
        base = parse_ideal("a*d,b*d,c*d,d^2", ["a", "b", "c", "d"])
        assert [g.exponents for g in M.generators] == [
            g.exponents for g in polarize(base).generators
        ]


class TestBetti:
    def test_total_vector(self, capsys):
        code, out, _ = run(
            capsys, "betti", "--ideal", "a*d,b*d,c*d", "--vars", "a,b,c,d", "--json"
        )
        assert code == 0
        assert json.loads(out)["betti"] == [1, 3, 3, 1]

    def test_oracle_flag_agrees(self, capsys):
        base = ("betti", "--ideal", "a^2,a*b,b^2", "--json")
        _, out1, _ = run(capsys, *base)
        _, out2, _ = run(capsys, *base, "--oracle")
        a, b = json.loads(out1), json.loads(out2)
        assert a["betti"] == b["betti"]
        assert a["multigraded_betti"] == b["multigraded_betti"]


class TestOtherCommands:
    def test_odom_both_methods(self, capsys):
        code, out, _ = run(
            capsys,
            "odom",
            "--method",
            "both",
            "--ideal",
            "a*e,b*e,c*e,d*e,a*b,c*d",
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dominant-sets"]["odom"] == 4
        assert payload["nets"]["odom"] == 4

    def test_nets_polarized(self, capsys):
        code, out, _ = run(
            capsys,
            "nets",
            "--polarized",
            "--ideal",
            "a*d,b*d,c*d,d^2",
            "--vars",
            "a,b,c,d",
            "--json",
        )
        assert code == 0
        assert json.loads(out)["minimal_nets"] == [
            ["d_1"],
            ["a_1", "b_1", "c_1", "d_2"],
        ]

    def test_polarize(self, capsys):
        code, out, _ = run(capsys, "polarize", "--ideal", "a^2,a*b,b^2")
        assert code == 0
        assert out.strip() == "a_1*a_2, a_1*b_1, b_1*b_2"

    def test_scarf(self, capsys):
        code, out, _ = run(capsys, "scarf", "--ideal", "a^2,a*b,b^2", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["is_scarf"] is True
        assert payload["ranks"] == [1, 3, 2]

    def test_resolution_matrices(self, capsys):
        code, out, _ = run(
            capsys, "resolution", "--show-matrices", "--ideal", "a^2,a*b,b^2"
        )
        assert code == 0
        assert "matrix f_2" in out

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("a, b"))
        code, out, _ = run(capsys, "betti", "--ideal", "-", "--json")
        assert code == 0
        assert json.loads(out)["betti"] == [1, 2, 1]

    def test_field_fp(self, capsys):
        code, out, _ = run(
            capsys, "betti", "--ideal", "a^2,a*b,b^2", "--field", "fp", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["betti"] == [1, 3, 2]
        assert payload["field"] == "fp:32003"


class TestVerifyCommand:
    def test_exhaustive_small(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--exhaustive", "--n-max", "2", "--exp-max", "2",
            "--q-max", "8", "--trials", "0",
        )
        assert code == 0
        assert "zero failures" in out

    def test_seeded_json(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--trials", "20", "--seed", "5", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ideals"] == 20


class TestExitCodes:
    def test_parse_error_is_1(self, capsys):
        code, _, err = run(capsys, "analyze", "--ideal", "a*^2")
        assert code == 1 and "error" in err

    def test_unknown_variable_is_1(self, capsys):
        code, _, _ = run(capsys, "analyze", "--ideal", "a*z", "--vars", "a,b")
        assert code == 1

    def test_missing_ideal_is_1(self, capsys):
        code, _, _ = run(capsys, "analyze")
        assert code == 1

    def test_guard_is_2(self, capsys):
        big = ", ".join(f"x{i}" for i in range(1, 16))
        code, _, err = run(capsys, "analyze", "--ideal", big)
        assert code == 2 and "Taylor" in err or "2^15" in err

    def test_internal_failure_is_3(self, capsys, monkeypatch):
        import monodom.cli as cli_mod

        real = cli_mod.check_report

        def sabotaged(ideal, field):
            report = real(ideal, field)
            bad = type(report.checks[0])(report.checks[0].name, "fail", "forced")
            report.checks[0] = bad
            return report

        monkeypatch.setattr(cli_mod, "check_report", sabotaged)
        code, _, _ = run(capsys, "analyze", "--ideal", "a,b")
        assert code == 3

    def test_fuzz_failure_is_3(self, capsys, monkeypatch):
        import monodom.cli as cli_mod
        from monodom.errors import FuzzFailure

        def boom(params, field):
            raise FuzzFailure("check failed", "a, b", "trial 0")

        monkeypatch.setattr(cli_mod, "fuzz", boom)
        code, _, err = run(capsys, "verify", "--trials", "1")
        assert code == 3 and "trial 0" in err

    def test_minimalization_warning_on_stderr(self, capsys):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code, out, _ = run(capsys, "polarize", "--ideal", "a, a*b")
        assert code == 0
        assert out.strip() == "a_1"
