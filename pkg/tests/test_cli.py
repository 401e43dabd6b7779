import json
import subprocess
import sys

import pytest

from patchentropy import __version__
from patchentropy.cli import config_hash, parse_n_range, run


def run_twice(tmp_path, args, suffix):
    outs = []
    for k in range(2):
        out = tmp_path / f"r{k}.{suffix}"
        assert run(args + ["--out", str(out)]) == 0
        outs.append(out.read_bytes())
    return outs


def test_n_range():
    assert parse_n_range("4..8") == [4, 5, 6, 7, 8]
    assert parse_n_range("2..10:4") == [2, 6, 10]
    assert parse_n_range("7") == [7]


def test_hash_ignores_output_path():
    assert config_hash({"a": "1", "out": "x"}) == config_hash({"a": "1", "out": "y"})
    assert config_hash({"a": "1"}) != config_hash({"a": "2"})


def test_patches_count_json(tmp_path):
    a, b = run_twice(tmp_path, ["patches", "count", "--set", "word-set", "--A", "[0,4]", "--S", "auto"], "json")
    assert a == b
    doc = json.loads(a)
    assert doc["count"] == 31 and doc["exhaustive"] is True and doc["method"] == "enumerate"
    assert len(doc["witnesses"]) == 31 and doc["version"] == __version__
    assert list(doc) == sorted(doc)


def test_windows_check_csv(tmp_path):
    a, b = run_twice(tmp_path, ["windows", "check", "--seq", "remark-comb", "--K", "[-1,1]",
                                "--g", "1/2", "--n-max", "12"], "csv")
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0].startswith("# config-hash: ") and lines[1] == f"# version: {__version__}"
    assert lines[2] == "n,vol,vanhove_ratio,folner_ratio,ergodic_ratio,min_c"
    assert lines[5].split(",")[2] == "21/2"


def test_entropy_and_cap(tmp_path):
    out = tmp_path / "s.csv"
    code = run(["entropy", "--set", "word-set", "--seq", "intervals-0n", "--n", "4..20",
                "--count-cap", "5000", "--out", str(out)])
    assert code == 3
    raw = out.read_bytes()
    assert b"\r\n" in raw
    lines = raw.decode().splitlines()
    assert "# complete: false" in lines
    ns = [int(line.split(",")[0]) for line in lines if line[:1].isdigit()]
    assert ns == list(range(4, 12))


def test_reproduce_exit_codes(tmp_path):
    assert run(["reproduce", "--example", "5.2", "--rho", "1/2", "--n", "4..8",
                "--out", str(tmp_path / "a.csv")]) == 0
    # odd n with rho = 1/2 breaks the literal lower bound
    assert run(["reproduce", "--example", "5.3", "--rho", "1/2", "--n", "5",
                "--out", str(tmp_path / "b.csv")]) == 1


def test_config_errors(tmp_path):
    assert run(["entropy", "--set", "nothing", "--seq", "intervals-0n"]) == 2
    assert run(["patches", "count", "--set", "word-set", "--A", "[0,"]) == 2
    bad = tmp_path / "bad.yaml"
    bad.write_text("set: [unclosed\n")
    assert run(["gen", "--config", str(bad)]) == 2
    with pytest.raises(SystemExit) as info:
        run(["entropy", "--mode", "sideways"])
    assert info.value.code == 2


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("set:\n  kind: shifted-union\n  params:\n    eps: 1/8\nwindow: '[0,1]'\n")
    out = tmp_path / "g.csv"
    assert run(["gen", "--config", str(cfg), "--out", str(out)]) == 0
    assert out.read_text().splitlines()[3:] == ["0", "1/8", "1"]
    assert run(["gen", "--config", str(cfg), "--window", "[0,2]", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[3:] == ["0", "1/8", "1", "9/8", "2"]


def test_represent_and_invariant_check(tmp_path):
    a, b = run_twice(tmp_path, ["patches", "represent", "--set", "word-set", "--A", "[0,3]", "--V", "1/4"], "json")
    assert a == b and json.loads(a)["size"] == 15


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "patchentropy", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
