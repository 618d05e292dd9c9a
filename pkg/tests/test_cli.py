import json
import os
import subprocess
import sys

from q8family import cli
from q8family.serialize import (load_cached_table, table_documents_equivalent)
from q8family.verify import verify_prime

# ---------------------------------------------------------------- verify


class TestVerifyCommand:
    def test_pass_reports_order_72(self, capsys):
        assert cli.main(["verify", "--prime", "3"]) == 0
        out = capsys.readouterr().out
        assert "|G| = 72" in out
        assert "VERDICT: PASS" in out

    def test_trivial_label_is_usage_error(self, capsys):
        assert cli.main(["verify", "--prime", "3", "--label", "0,0"]) == 2
        assert "label must be nontrivial" in capsys.readouterr().err

    def test_non_prime_is_usage_error(self, capsys):
        assert cli.main(["verify", "--prime", "4"]) == 2
        assert "not an odd prime" in capsys.readouterr().err

    def test_malformed_label(self, capsys):
        assert cli.main(["verify", "--prime", "3", "--label", "1;2"]) == 2
        assert cli.main(["verify", "--prime", "3", "--label", "1,2,3"]) == 2

    def test_json_report(self, capsys):
        assert cli.main(["verify", "--prime", "3", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["format"] == 1
        assert doc["prime"] == 3
        assert doc["group_order"] == 72
        assert doc["psi_multiplicity"] == 2
        assert doc["overall_pass"] is True
        assert doc["claims"] == {"induced_irreducible": True,
                                 "indicator_one": True,
                                 "square_contains_psi": True}
        assert doc["induced_norm"] == ["1", "1"]

    def test_failing_report_exits_one(self, capsys, monkeypatch):
        report = verify_prime(3)
        report.claims["indicator_one"] = False

        monkeypatch.setattr(cli, "verify_prime", lambda *a, **k: report)
        assert cli.main(["verify", "--prime", "3"]) == 1
        assert "VERDICT: FAIL" in capsys.readouterr().out

    def test_alt_subgroup_flag(self, capsys):
        assert cli.main(["verify", "--prime", "5", "--alt-subgroup"]) == 0
        assert "conjugate subgroup" in capsys.readouterr().out

    def test_invariant_violation_exits_three(self, capsys, monkeypatch):
        from q8family.errors import InvariantError

        def boom(*a, **k):
            raise InvariantError("fabricated failure")

        monkeypatch.setattr(cli, "verify_prime", boom)
        assert cli.main(["verify", "--prime", "3"]) == 3
        assert "internal invariant violation" in capsys.readouterr().err


# ---------------------------------------------------------------- table


class TestTableCommand:
    def test_json_shape(self, capsys):
        assert cli.main(["table", "--prime", "3", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["format"] == 1
        assert doc["group_order"] == 72
        assert len(doc["characters"]) == 6
        assert len(doc["classes"]) == 6
        assert doc["classes"][0]["rep"] == [0, 0, 1, 0, 0, 1]
        names = [c["name"] for c in doc["characters"]]
        assert names == ["triv", "linX", "linY", "linXY", "psi", "ind_0_1"]

    def test_text_header(self, capsys):
        assert cli.main(["table", "--prime", "5", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "|G| = 200" in out
        # 8 character rows after the three metadata rows and one header line
        assert len(out.strip().splitlines()) == 1 + 3 + 8

    def test_csv_round_trip(self, capsys):
        assert cli.main(["table", "--prime", "3", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].split(",")[:3] == ["name", "degree", "indicator"]
        assert len(lines) == 4 + 6
        psi_row = [l for l in lines if l.startswith("psi,")][0]
        assert psi_row.split(",")[1:3] == ["2", "-1"]

    def test_repeat_runs_byte_identical(self, capsys):
        assert cli.main(["table", "--prime", "5", "--format", "json"]) == 0
        first = capsys.readouterr().out
        assert cli.main(["table", "--prime", "5", "--format", "json"]) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_out_writes_atomically(self, tmp_path, capsys):
        target = tmp_path / "t.json"
        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--out", str(target)]) == 0
        doc = json.loads(target.read_text())
        assert doc["prime"] == 3
        leftovers = [f for f in os.listdir(tmp_path) if f.endswith(".tmp")]
        assert not leftovers

    def test_unwritable_out_is_usage_error(self, capsys):
        code = cli.main(["table", "--prime", "3", "--format", "json",
                         "--out", "/proc/nonexistent/t.json"])
        assert code == 2
        assert "cannot write" in capsys.readouterr().err


class TestTableCache:
    def test_cache_round_trip(self, tmp_path, capsys):
        cache = str(tmp_path)
        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--cache", cache]) == 0
        fresh = capsys.readouterr()
        assert "cache hit" not in fresh.err
        cached_doc = load_cached_table(cache, 3)
        assert cached_doc is not None
        assert table_documents_equivalent(cached_doc, json.loads(fresh.out))

        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--cache", cache]) == 0
        second = capsys.readouterr()
        assert "cache hit" in second.err
        assert second.out == fresh.out  # byte-identical from cache

    def test_corrupt_cache_recomputed(self, tmp_path, capsys):
        cache = str(tmp_path)
        (tmp_path / "table_p3.json").write_text("{ not json")
        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--cache", cache]) == 0
        captured = capsys.readouterr()
        assert "cache hit" not in captured.err
        assert json.loads(captured.out)["prime"] == 3

    def test_stale_format_recomputed(self, tmp_path, capsys):
        cache = str(tmp_path)
        (tmp_path / "table_p3.json").write_text(json.dumps({"format": 0, "prime": 3}))
        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--cache", cache]) == 0
        assert "cache hit" not in capsys.readouterr().err
        assert load_cached_table(cache, 3)["format"] == 1

    def test_cache_dir_from_environment(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
        assert cli.main(["table", "--prime", "3", "--format", "json"]) == 0
        capsys.readouterr()
        assert (tmp_path / "table_p3.json").exists()

    def test_flag_overrides_environment(self, tmp_path, capsys, monkeypatch):
        env_dir = tmp_path / "env"
        flag_dir = tmp_path / "flag"
        env_dir.mkdir(), flag_dir.mkdir()
        monkeypatch.setenv(cli.CACHE_ENV, str(env_dir))
        assert cli.main(["table", "--prime", "3", "--format", "json",
                         "--cache", str(flag_dir)]) == 0
        capsys.readouterr()
        assert (flag_dir / "table_p3.json").exists()
        assert not (env_dir / "table_p3.json").exists()


# ---------------------------------------------------------------- scan


def _strip_seconds(doc):
    for rec in doc["records"]:
        rec.pop("seconds", None)
    return doc


class TestScanCommand:
    def test_single_prime_matches_verify(self, capsys):
        assert cli.main(["scan", "--primes", "3..3"]) == 0
        out = capsys.readouterr().out
        assert "p=3" in out and "PASS" in out and "all pass" in out

    def test_range_json(self, capsys):
        assert cli.main(["scan", "--primes", "3..7", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["all_pass"] is True
        assert [r["prime"] for r in doc["records"]] == [3, 5, 7]
        assert [r["labels_checked"] for r in doc["records"]] == [1, 3, 6]

    def test_jobs_match_sequential(self, capsys):
        assert cli.main(["scan", "--primes", "3..7", "--format", "json"]) == 0
        seq = _strip_seconds(json.loads(capsys.readouterr().out))
        assert cli.main(["scan", "--primes", "3..7", "--jobs", "4",
                         "--format", "json"]) == 0
        par = _strip_seconds(json.loads(capsys.readouterr().out))
        assert seq == par

    def test_no_primes_in_range(self, capsys):
        assert cli.main(["scan", "--primes", "8..9"]) == 2
        assert "no odd primes" in capsys.readouterr().err

    def test_malformed_range(self, capsys):
        assert cli.main(["scan", "--primes", "3-7"]) == 2
        assert cli.main(["scan", "--primes", "7..3"]) == 2

    def test_bad_jobs(self, capsys):
        assert cli.main(["scan", "--primes", "3..3", "--jobs", "0"]) == 2

    def test_alt_subgroup_scan(self, capsys):
        assert cli.main(["scan", "--primes", "3..5", "--alt-subgroup",
                         "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert all(rec["alt_subgroup_pass"] for rec in doc["records"])


# ---------------------------------------------------------------- selftest


class TestSelftestCommand:
    def test_p3_mentions_sum_rule(self, capsys):
        assert cli.main(["selftest", "--prime", "3"]) == 0
        out = capsys.readouterr().out
        assert "sum rule: 10 = 1 + 3^2" in out
        assert "23/23 checks passed" in out

    def test_p7_mentions_orbit_count(self, capsys):
        assert cli.main(["selftest", "--prime", "7"]) == 0
        out = capsys.readouterr().out
        assert "orbit count 6 = (7^2-1)/8" in out

    def test_composite_prime_rejected(self, capsys):
        assert cli.main(["selftest", "--prime", "9"]) == 2
        assert "not an odd prime" in capsys.readouterr().err

    def test_failed_check_exits_three(self, capsys, monkeypatch):
        from q8family.selftest import CheckResult

        monkeypatch.setattr(
            cli, "run_selftest",
            lambda p, bound: [CheckResult("fabricated", False, "broken")])
        assert cli.main(["selftest", "--prime", "3"]) == 3
        assert "FAIL fabricated" in capsys.readouterr().out


# ---------------------------------------------------------------- harness


class TestHarness:
    def test_missing_subcommand_is_usage_error(self, capsys):
        assert cli.main([]) == 2

    def test_unknown_format_rejected_by_parser(self, capsys):
        assert cli.main(["verify", "--prime", "3", "--format", "csv"]) == 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "q8family", "verify", "--prime", "3"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "VERDICT: PASS" in proc.stdout
