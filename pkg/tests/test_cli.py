import json

import pytest

from gauss_steer import jsonio
from gauss_steer.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


FAST = ("--samples", "2000", "--starts", "6")


class TestGenerate:
    def test_byte_identical_per_seed(self, capsys):
        code1, out1, _ = run_cli(capsys, "generate", "channel", "--seed", "7")
        code2, out2, _ = run_cli(capsys, "generate", "channel", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2

    @pytest.mark.parametrize(
        "kind", ["state", "unsteerable-state", "channel", "superchannel"]
    )
    def test_kinds_are_schema_valid(self, capsys, kind):
        code, out, _ = run_cli(capsys, "generate", kind, "--seed", "3")
        assert code == 0
        obj = jsonio.loads_strict(out)
        schema_kind = "state" if kind == "unsteerable-state" else kind
        jsonio.validate(obj, schema_kind)

    def test_modes_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "state", "--modes", "2", "1", "--seed", "0"
        )
        obj = json.loads(out)
        assert (obj["m"], obj["n"]) == (2, 1)
        assert len(obj["cm"]) == 6

    def test_env_seed_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("GAUSS_STEER_SEED", "41")
        _, out_env, _ = run_cli(capsys, "generate", "channel")
        _, out_explicit, _ = run_cli(capsys, "generate", "channel", "--seed", "41")
        assert out_env == out_explicit


class TestClassify:
    def test_round_trip_from_generate(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "channel", "--seed", "5")
        path = tmp_path / "chan.json"
        path.write_text(out)
        code, report_text, _ = run_cli(capsys, "classify", str(path), *FAST)
        assert code == 0
        envelope = json.loads(report_text)
        assert envelope["tool"] == "gauss-steer"
        assert envelope["report"]["cp_valid"] is True
        assert envelope["input"] == json.loads(out)

    def test_envelope_deterministic(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "channel", "--seed", "5")
        path = tmp_path / "chan.json"
        path.write_text(out)
        _, first, _ = run_cli(capsys, "classify", str(path), "--seed", "2", *FAST)
        _, second, _ = run_cli(capsys, "classify", str(path), "--seed", "2", *FAST)
        assert first == second

    def test_non_cp_channel_exits_2(self, capsys, tmp_path):
        obj = {
            "m": 1,
            "n": 1,
            "K": [[2.0 if i == j else 0.0 for j in range(4)] for i in range(4)],
            "M": [[0.0] * 4 for _ in range(4)],
            "d": [0.0] * 4,
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run_cli(capsys, "classify", str(path))
        assert code == 2
        assert "completely positive" in err
        assert "-3.0" in err

    def test_malformed_json_exits_1_with_location(self, capsys, tmp_path):
        path = tmp_path / "mangled.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "classify", str(path))
        assert code == 1
        assert "line 1" in err

    def test_schema_error_exits_1_with_path(self, capsys, tmp_path):
        path = tmp_path / "incomplete.json"
        path.write_text('{"m": 1, "n": 1}')
        code, _, err = run_cli(capsys, "classify", str(path))
        assert code == 1
        assert "schema" in err.lower()

    def test_missing_file_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "classify", "/nonexistent/chan.json")
        assert code == 1


class TestSuper:
    def test_reference_fixture(self, capsys, tmp_path):
        from gauss_steer.repro import mixing_superchannel

        path = tmp_path / "sc.json"
        path.write_text(json.dumps(jsonio.superchannel_to_dict(mixing_superchannel())))
        code, out, _ = run_cli(capsys, "super", str(path), *FAST)
        assert code == 0
        verdicts = json.loads(out)["verdicts"]
        assert verdicts["us_sufficient"] is False
        assert verdicts["mus_sufficient"]["state"] == "HOLDS"
        assert verdicts["chain_us"]["state"] == "VIOLATED"

    def test_non_orthogonal_e_exits_2(self, capsys, tmp_path):
        obj = {
            "m": 1,
            "n": 1,
            "A": [[0.0] * 4 for _ in range(4)],
            "E": [[2.0 if i == j else 0.0 for j in range(4)] for i in range(4)],
            "Y": [[10.0 if i == j else 0.0 for j in range(4)] for i in range(4)],
            "nu": [0.0] * 4,
        }
        path = tmp_path / "sc.json"
        path.write_text(json.dumps(obj))
        code, _, err = run_cli(capsys, "super", str(path))
        assert code == 2


class TestRepro:
    def test_all_rows_pass(self, capsys):
        code, out, _ = run_cli(capsys, "repro-paper", *FAST)
        assert code == 0
        assert "FAIL" not in out

    def test_json_envelope(self, capsys):
        code, out, _ = run_cli(capsys, "repro-paper", "--json", *FAST)
        assert code == 0
        envelope = json.loads(out)
        assert envelope["all_pass"] is True
        assert all(row["passed"] for row in envelope["rows"])
        assert envelope["tol"] == 1e-8
