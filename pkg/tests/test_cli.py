"""Command-line surface: formats, exit codes, caching, determinism."""
import json
import subprocess

from gegenlab.cli import main
from gegenlab.serialize import cache_read, cache_write, load_golden
from gegenlab.gegenbauer import gen_eigen


def run_cli(args, capsys):
    rc = main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestGen:
    def test_latex_outer_product(self, capsys):
        rc, out, _ = run_cli(["gen", "--rank", "3", "--weight", "1,0,1",
                              "--format", "latex"], capsys)
        assert rc == 0
        assert out.strip() == r"z_1 z_3 - \frac{4}{1+3\kappa}"

    def test_vacuum_text(self, capsys):
        rc, out, _ = run_cli(["gen", "--rank", "2", "--weight", "0,0"], capsys)
        assert rc == 0
        assert out.strip() == "1"

    def test_numeric_coupling_text(self, capsys):
        rc, out, _ = run_cli(["gen", "--rank", "3", "--weight", "2,0,0",
                              "--kappa", "1/2", "--format", "text"], capsys)
        assert rc == 0
        assert out.strip() == "z1^2 - 4/3 z2"

    def test_json_round_trip(self, capsys):
        rc, out, _ = run_cli(["gen", "--rank", "3", "--weight", "1,1,0",
                              "--format", "json"], capsys)
        assert rc == 0
        obj = json.loads(out)
        assert obj["rank"] == 3 and obj["weight"] == [1, 1, 0]
        monos = [tuple(t["mono"]) for t in obj["terms"]]
        assert monos == sorted(monos, key=lambda w: (sum(w), w), reverse=True)

    def test_method_recurrence_agrees(self, capsys):
        rc1, out1, _ = run_cli(["gen", "--rank", "3", "--weight", "0,2,0",
                                "--method", "recurrence", "--format", "json"], capsys)
        rc2, out2, _ = run_cli(["gen", "--rank", "3", "--weight", "0,2,0",
                                "--format", "json"], capsys)
        assert rc1 == rc2 == 0 and out1 == out2

    def test_determinism(self, capsys):
        args = ["gen", "--rank", "3", "--weight", "2,1,0", "--format", "json"]
        outs = {run_cli(args, capsys)[1] for _ in range(3)}
        assert len(outs) == 1

    def test_bad_weight_usage_error(self, capsys):
        rc, _, err = run_cli(["gen", "--rank", "2", "--weight", "1,0,0"], capsys)
        assert rc == 2

    def test_recurrence_rank_guard(self, capsys):
        rc, _, _ = run_cli(["gen", "--rank", "4", "--weight", "1,0,0,0",
                            "--method", "recurrence"], capsys)
        assert rc == 2

    def test_degenerate_coupling(self, capsys):
        rc, _, err = run_cli(["gen", "--rank", "3", "--weight", "2,0,0",
                              "--kappa", "-1"], capsys)
        assert rc == 3
        assert "degeneracy" in err


class TestCache:
    def test_round_trip(self, tmp_path):
        p = gen_eigen((0, 2, 0), 4)
        cache_write(tmp_path, (0, 2, 0), p)
        q, status = cache_read(tmp_path, 3, (0, 2, 0))
        assert status == "hit" and q == p

    def test_corrupt_entry_ignored(self, tmp_path, capsys):
        p = gen_eigen((1, 1, 0), 4)
        path = cache_write(tmp_path, (1, 1, 0), p)
        path.write_text(path.read_text().replace('"terms"', '"tersm"', 1))
        q, status = cache_read(tmp_path, 3, (1, 1, 0))
        assert q is None and status == "corrupt"
        rc, out, err = run_cli(["gen", "--rank", "3", "--weight", "1,1,0",
                                "--cache", str(tmp_path)], capsys)
        assert rc == 0 and "ignored" in err

    def test_version_mismatch_regenerates(self, tmp_path):
        p = gen_eigen((1, 0, 1), 4)
        path = cache_write(tmp_path, (1, 0, 1), p)
        obj = json.loads(path.read_text())
        obj["version"] = 999
        path.write_text(json.dumps(obj))
        q, status = cache_read(tmp_path, 3, (1, 0, 1))
        assert q is None and status == "version-mismatch"

    def test_cache_hit_visible_in_verbose(self, tmp_path, capsys):
        args = ["gen", "--rank", "3", "--weight", "1,0,1",
                "--cache", str(tmp_path), "--verbose"]
        rc, _, err1 = run_cli(args, capsys)
        assert rc == 0 and "generated" in err1
        rc, _, err2 = run_cli(args, capsys)
        assert rc == 0 and "cache hit" in err2

    def test_environment_overrides_flag(self, tmp_path, capsys, monkeypatch):
        env_dir = tmp_path / "env"
        flag_dir = tmp_path / "flag"
        monkeypatch.setenv("GEGENLAB_CACHE", str(env_dir))
        rc, _, _ = run_cli(["gen", "--rank", "2", "--weight", "1,1",
                            "--cache", str(flag_dir)], capsys)
        assert rc == 0
        assert list(env_dir.glob("*.json")) and not flag_dir.exists()


class TestOperators:
    def test_rank2_order2_contains_cross_term(self, capsys):
        rc, out, _ = run_cli(["operators", "--rank", "2", "--order", "2"], capsys)
        assert rc == 0
        assert "(z1 z2 - 9) d/dz1 d/dz2" in out

    def test_rank2_order3_terms(self, capsys):
        rc, out, _ = run_cli(["operators", "--rank", "2", "--order", "3"], capsys)
        assert rc == 0
        assert "(2 z1^3 - 9 z1 z2 + 27) d3/dz1^3" in out
        assert "(2 z2^3 - 9 z1 z2 + 27) d3/dz2^3" in out

    def test_rank3_order2_scaled_term(self, capsys):
        rc, out, _ = run_cli(["operators", "--rank", "3", "--order", "2"], capsys)
        assert rc == 0
        assert "1/2 (3 z1^2 - 8 z2) d2/dz1^2" in out

    def test_unsupported_pair(self, capsys):
        rc, _, _ = run_cli(["operators", "--rank", "3", "--order", "3"], capsys)
        assert rc == 2


class TestEval:
    def test_leading_variable(self, capsys):
        rc, out, _ = run_cli(["eval", "--rank", "3", "--weight", "1,0,0",
                              "--kappa", "2/3", "--point", "5,1,7"], capsys)
        assert rc == 0 and out.strip() == "5"

    def test_outer_product_at_unit_coupling(self, capsys):
        rc, out, _ = run_cli(["eval", "--rank", "3", "--weight", "1,0,1",
                              "--kappa", "1", "--point", "2,0,1"], capsys)
        assert rc == 0 and out.strip() == "1"

    def test_pole_exit_code(self, capsys):
        rc, _, err = run_cli(["eval", "--rank", "3", "--weight", "2,0,0",
                              "--kappa", "-1", "--point", "1,1,1"], capsys)
        assert rc == 3


class TestVerifyCommand:
    def test_kappa1_passes(self, capsys):
        rc, out, _ = run_cli(["verify", "--suite", "kappa1"], capsys)
        assert rc == 0
        assert "pass" in out

    def test_failed_check_gives_exit_one(self, capsys, monkeypatch):
        from gegenlab import verify as vf

        failing = vf.VerificationReport("stub", [vf.CheckResult(
            "stub check", "fail", expected="1", actual="0")])
        monkeypatch.setattr(vf, "run_suite", lambda *a, **kw: [failing])
        rc, out, _ = run_cli(["verify", "--suite", "kappa1"], capsys)
        assert rc == 1
        assert "fail" in out

    def test_duality_rank2(self, capsys):
        rc, out, _ = run_cli(["verify", "--suite", "duality", "--rank", "2",
                              "--max-degree", "2"], capsys)
        assert rc == 0

    def test_commutators_rank2(self, capsys):
        rc, out, _ = run_cli(["verify", "--suite", "commutators", "--rank", "2",
                              "--max-degree", "4"], capsys)
        assert rc == 0

    def test_json_report_shape(self, capsys):
        rc, out, _ = run_cli(["verify", "--suite", "kappa1",
                              "--format", "json"], capsys)
        assert rc == 0
        reports = json.loads(out)
        assert reports[0]["suite"] == "kappa1"
        assert all(c["status"] == "pass" for c in reports[0]["checks"])


class TestGolden:
    def test_bundle_has_all_entries(self):
        golden = load_golden(3)
        assert len(golden) == 21
        weights = {w for w, _ in golden}
        assert (0, 4, 0) in weights and (1, 0, 1) in weights

    def test_polynomials_canonical_and_monic(self):
        from gegenlab.scalars import kr
        for w, p in load_golden(3):
            assert p.coefficient(w) == kr(1)
            assert p.is_real()


def test_console_entry_point():
    proc = subprocess.run(["gegenlab", "gen", "--rank", "2", "--weight", "1,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "z1"
