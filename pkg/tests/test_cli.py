import json
import os
import subprocess
import sys

SRC = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    env.pop("UPLAB_CACHE_DIR", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "uplab", *args],
                          capture_output=True, text=True, env=env)


def test_mu_json():
    r = run_cli("mu", "--n", "7", "--q", "2")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["mu"] == 7 and out["exact"] is True


def test_table_matches():
    r = run_cli("table", "--q", "2", "--primes", "7,17,23")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert [row["mu_lower"] for row in rows] == [7, 14, 19]
    assert all(row["status"] == "match" for row in rows)


def test_ms_all_one_word():
    r = run_cli("ms", "--q", "2", "--n", "7", "--word", "1111111")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert (out["weight"], out["transform_weight"]) == (7, 1)


def test_usage_error_exit_2():
    assert run_cli("bogus").returncode == 2
    assert run_cli("mu", "--n", "7").returncode == 2
    r = run_cli("factor", "--n", "9", "--q", "3")
    assert r.returncode == 2  # domain error: gcd != 1


def test_budget_partial_exit_3():
    r = run_cli("mu", "--n", "17", "--q", "2", "--budget", "40")
    assert r.returncode == 3
    out = json.loads(r.stdout)
    assert out["exact"] is False
    assert out["mu_lower"] <= 14 <= out["mu_upper"]


def test_up_scan_ok():
    r = run_cli("up-scan", "--n", "7", "--q", "2")
    assert r.returncode == 0
    assert json.loads(r.stdout)["violations"] == 0


def test_determinism_byte_identical():
    a = run_cli("mu", "--n", "23", "--q", "2", "--divisors")
    b = run_cli("mu", "--n", "23", "--q", "2", "--divisors")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    a = run_cli("ramsey", "--kind", "ap", "--m", "4", "--n", "13")
    b = run_cli("ramsey", "--kind", "ap", "--m", "4", "--n", "13")
    assert a.stdout == b.stdout
    a = run_cli("asym", "--what", "construction", "--q", "2", "--p", "5", "--seed", "9")
    b = run_cli("asym", "--what", "construction", "--q", "2", "--p", "5", "--seed", "9")
    assert a.stdout == b.stdout


def test_formats(tmp_path):
    for fmt in ("json", "csv", "table"):
        r = run_cli("table", "--q", "2", "--primes", "7,17", "--format", fmt)
        assert r.returncode == 0 and r.stdout


def test_cache_roundtrip(tmp_path):
    cache = tmp_path / "cache.jsonl"
    r1 = run_cli("mu", "--n", "17", "--q", "2", "--divisors", "--cache", str(cache))
    assert r1.returncode == 0 and cache.exists()
    lines = cache.read_text().strip().splitlines()
    assert lines and all(json.loads(ln)["exact"] for ln in lines)
    n_lines = len(lines)
    r2 = run_cli("mu", "--n", "17", "--q", "2", "--divisors", "--cache", str(cache))
    out2 = json.loads(r2.stdout)
    computed = [d for d in out2["per_divisor"] if d["work"] > 0]
    assert not computed  # every divisor either pruned or served from cache
    assert len(cache.read_text().strip().splitlines()) == n_lines  # idempotent puts
    # same final value either way
    assert out2["mu"] == json.loads(r1.stdout)["mu"]


def test_cache_corrupt_line_skipped(tmp_path):
    cache = tmp_path / "cache.jsonl"
    cache.write_text("this is not json\n")
    r = run_cli("mindist", "--n", "7", "--q", "2", "--gen", "1101",
                "--cache", str(cache))
    assert r.returncode == 0
    assert "corrupt" in r.stderr
    assert json.loads(r.stdout)["d_lower"] == 3


def test_cache_env_var(tmp_path):
    r = run_cli("mindist", "--n", "7", "--q", "2", "--gen", "1101",
                env_extra={"UPLAB_CACHE_DIR": str(tmp_path)})
    assert r.returncode == 0
    assert (tmp_path / "uplab-cache.jsonl").exists()


def test_cache_flag_beats_env(tmp_path):
    env_dir = tmp_path / "env"
    env_dir.mkdir()
    flag_file = tmp_path / "flag.jsonl"
    r = run_cli("mindist", "--n", "7", "--q", "2", "--gen", "1101",
                "--cache", str(flag_file),
                env_extra={"UPLAB_CACHE_DIR": str(env_dir)})
    assert r.returncode == 0
    assert flag_file.exists()
    assert not (env_dir / "uplab-cache.jsonl").exists()


def test_mindist_unwritable_cache_warns_and_runs(tmp_path):
    r = run_cli("mindist", "--n", "7", "--q", "2", "--gen", "1101",
                "--cache", "/proc/definitely/not/writable/cache.jsonl")
    assert r.returncode == 0
    assert json.loads(r.stdout)["d_lower"] == 3


def test_strong_up_command():
    r = run_cli("strong-up", "--p", "23", "--q", "2")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["branch"] == "bounded" and out["mu"] == 19


def test_ramsey_grid_command():
    r = run_cli("ramsey", "--kind", "grid", "--n", "7", "--delta", "3", "--s", "1")
    assert r.returncode == 0
    assert json.loads(r.stdout)["value"] == 3


def test_asym_commands():
    r = run_cli("asym", "--what", "entropy", "--x", "0.25")
    assert abs(json.loads(r.stdout)["entropy"] - 0.8112781244591328) < 1e-12
    r = run_cli("asym", "--what", "plotkin", "--q", "4")
    assert json.loads(r.stdout)["cap"] == "3/4"
    r = run_cli("asym", "--what", "ball", "--n", "7", "--alpha", "0.5", "--q", "2")
    assert json.loads(r.stdout)["exact"] == "63"
    r = run_cli("asym", "--what", "ram-bound", "--p", "9", "--composite-ok")
    assert json.loads(r.stdout)["bound"] == 8
    r = run_cli("asym", "--what", "ram-bound", "--p", "7", "--q", "2")
    assert json.loads(r.stdout)["bound"] == 7


def test_weak_up_command():
    r = run_cli("weak-up", "--q", "2", "--eps", "0.2", "--lam", "0.6", "--pmax", "31")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    hits = [row for row in rows if row["both"]]
    assert [row["p"] for row in hits] == [31]
