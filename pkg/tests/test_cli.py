import json

from finspace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFileCommands:
    def test_homology_fig17a(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "homology", str(fixture_dir / "fig17a.poset"))
        assert code == 0
        obj = json.loads(out)
        assert obj["betti"] == [1, 3, 0]
        assert obj["euler"] == -2

    def test_iso_fig18(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys,
            "iso",
            str(fixture_dir / "fig18c.poset"),
            str(fixture_dir / "fig18d.poset"),
        )
        assert code == 0
        assert out.strip() == "isomorphic"

    def test_iso_negative(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys,
            "iso",
            str(fixture_dir / "fig18c.poset"),
            str(fixture_dir / "fig21b.poset"),
        )
        assert code == 0
        assert out.strip() == "not isomorphic"

    def test_core_chain2(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "core", str(fixture_dir / "chain2.poset"))
        assert code == 0
        assert out.splitlines()[0] == "poset 1"

    def test_dual_round_trip(self, capsys, fixture_dir, tmp_path):
        code, out, _ = run(capsys, "dual", str(fixture_dir / "fig04a.poset"))
        assert code == 0
        twice = tmp_path / "dual.poset"
        twice.write_text(out)
        code, out2, _ = run(capsys, "iso", str(twice), str(fixture_dir / "fig04astar.poset"))
        assert out2.strip() == "isomorphic"

    def test_show(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "show", str(fixture_dir / "fig20a.poset"))
        assert code == 0
        assert "height: 2" in out
        assert "matches figures: fig20a" in out

    def test_pi1(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "pi1", str(fixture_dir / "fig17a.poset"))
        assert code == 0
        assert "free of rank 3" in out

    def test_export_dot(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "export", "--dot", str(fixture_dir / "circle4.poset"))
        assert code == 0
        assert out.startswith("digraph poset {")

    def test_export_json(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "export", "--json", str(fixture_dir / "circle4.poset"))
        assert code == 0
        assert json.loads(out)["n"] == 4


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert main(["enumerate", "--height", "2"]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_data_error_missing_file(self, capsys):
        assert main(["homology", "no-such-file.poset"]) == 3

    def test_data_error_malformed(self, capsys, tmp_path):
        bad = tmp_path / "bad.poset"
        bad.write_text("poset 2\nelements a b\ncover a z\n")
        assert main(["homology", str(bad)]) == 3

    def test_enumerate_cap(self, capsys):
        assert main(["enumerate", "--n", "99", "--height", "2"]) == 2


class TestPipelines:
    def test_enumerate_jsonl(self, capsys, tmp_path):
        out_path = tmp_path / "inv.jsonl"
        code, _, err = run(
            capsys, "enumerate", "--n", "7", "--height", "2", "--jsonl", str(out_path)
        )
        assert code == 0
        assert "cores" in err
        lines = out_path.read_text().splitlines()
        assert len(lines) == 7
        keys = [json.loads(line)["code"] for line in lines]
        assert keys == sorted(keys)

    def test_enumerate_stdout_stable(self, capsys):
        code, first, _ = run(capsys, "enumerate", "--n", "6", "--height", "2")
        assert code == 0
        code, second, _ = run(capsys, "enumerate", "--n", "6", "--height", "2")
        assert first == second

    def test_classify_counts(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "7", "--height", "2")
        assert code == 0
        assert "1 circles, 1 spheres: 2" in out
        assert "0 circles, 2 spheres: 3" in out

    def test_min_model(self, capsys):
        code, out, _ = run(
            capsys, "min-model", "--circles", "1", "--spheres", "1", "--max-n", "8"
        )
        assert code == 0
        assert "minimum points: 7" in out
        assert "models: 2" in out

    def test_min_model_not_found(self, capsys):
        code, out, _ = run(
            capsys, "min-model", "--circles", "0", "--spheres", "9", "--max-n", "8"
        )
        assert code == 0
        assert "no model" in out


class TestVerifyCommand:
    def test_verify_json_passes(self, capsys):
        code, out, err = run(capsys, "verify-paper", "--json")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert all(line["pass"] for line in lines)
        checks = {line["check"] for line in lines}
        assert "models of (2 circles, 1 spheres) on 8 points" in checks

    def test_verify_table_stable(self, capsys):
        code1, out1, _ = run(capsys, "verify-paper")
        code2, out2, _ = run(capsys, "verify-paper")
        assert code1 == code2 == 0
        assert out1 == out2
