import json

import pytest

from halinspan import parse_halin
from halinspan.cli import main

K4_TEXT = "halin 4\nu : v1 v2 v3\n"
SIX_TEXT = "halin 6\nu : a v3 v4\na : v1 v2\n"


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(K4_TEXT)
    return str(path)


@pytest.fixture
def six_file(tmp_path):
    path = tmp_path / "six.txt"
    path.write_text(SIX_TEXT)
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_k4(capsys, k4_file):
    code, out, _ = _run(capsys, "validate", k4_file)
    assert code == 0
    assert out.strip() == "n=4 p=3 d=1"


def test_validate_names_degree_two_vertex(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("halin 5\nu : a x y\na : leaf\n")
    code, _, err = _run(capsys, "validate", str(path))
    assert code == 2
    assert "a" in err


def test_validate_garbage_is_parse_error(capsys, tmp_path):
    path = tmp_path / "junk.txt"
    path.write_text("not a graph at all\n")
    code, _, err = _run(capsys, "validate", str(path))
    assert code == 1
    assert "line 1" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = _run(capsys, "validate", str(tmp_path / "nope.txt"))
    assert code == 1


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate"])
    assert info.value.code == 1


def test_enumerate_distinct_human(capsys, k4_file):
    code, out, err = _run(capsys, "enumerate", k4_file)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 16
    assert lines[0] == "level=0 edges=u-v1,u-v2,u-v3"
    assert "total=16 distinct=16 duplicates=0" in err


def test_enumerate_naive_reports_duplicates(capsys, k4_file):
    code, out, err = _run(capsys, "enumerate", k4_file, "--mode", "naive")
    assert code == 0
    assert len(out.splitlines()) == 19
    assert "total=19 distinct=16 duplicates=3" in err


def test_parallel_keys_match_sequential(capsys, k4_file):
    _, seq, _ = _run(capsys, "enumerate", k4_file, "--format", "keys")
    code, par, _ = _run(capsys, "enumerate", k4_file, "--format", "keys", "--parallel", "4", "--seed", "3")
    assert code == 0
    assert par == seq
    keys = seq.splitlines()
    assert keys == sorted(set(keys))
    assert len(keys) == 16


def test_jsonl_ends_with_report(capsys, six_file):
    code, out, _ = _run(capsys, "enumerate", six_file, "--format", "jsonl", "--parallel", "2")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(records) == 76
    assert records[-1]["report"]["total"] == 75
    assert records[-1]["parallel"]["workers"] == 2


def test_cap_overflow_exits_four(capsys, six_file):
    code, _, err = _run(capsys, "enumerate", six_file, "--format", "keys", "--cap", "10")
    assert code == 4
    assert "partial=true" in err


def test_limit_truncates(capsys, six_file):
    code, out, _ = _run(capsys, "enumerate", six_file, "--limit", "5")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_sigma_start_keeps_tree_set(capsys, six_file):
    _, a, _ = _run(capsys, "enumerate", six_file, "--format", "keys")
    _, b, _ = _run(capsys, "enumerate", six_file, "--format", "keys", "--sigma-start", "2")
    assert a == b


def test_check_pass(capsys, k4_file):
    code, out, _ = _run(capsys, "check", k4_file)
    assert code == 0
    assert out.startswith("PASS")


def test_check_right_only_coloring_fails(capsys, six_file):
    code, out, _ = _run(capsys, "check", six_file, "--coloring", "right-only")
    assert code == 3
    assert out.startswith("FAIL")
    assert "no_duplicate_keys" in out
    # a repeated tree key is named
    assert "-" in out.split("no_duplicate_keys", 1)[1]


def test_check_jsonl(capsys, k4_file):
    code, out, _ = _run(capsys, "check", k4_file, "--format", "jsonl")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert records[-1] == {"verdict": "PASS"}
    assert all(r["ok"] for r in records[:-1])


def test_gen_seed_one_is_k4(capsys, tmp_path):
    code, out, _ = _run(capsys, "gen", "--seed", "1", "--n", "4", "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "halin_n4_s1.txt"
    assert out.strip() == str(path)
    h = parse_halin(path.read_text())
    assert (h.n, h.p, h.d) == (4, 3, 1)


def test_gen_files_validate_and_are_reproducible(capsys, tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    _run(capsys, "gen", "--seed", "9", "--n", "10", "--count", "5", "--out", str(first))
    _run(capsys, "gen", "--seed", "9", "--n", "10", "--count", "5", "--out", str(second))
    names = sorted(p.name for p in first.iterdir())
    assert len(names) == 5
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()
        code, _, _ = _run(capsys, "validate", str(first / name))
        assert code == 0


def test_gen_rejects_infeasible(capsys, tmp_path):
    code, _, _ = _run(capsys, "gen", "--n", "3", "--out", str(tmp_path))
    assert code == 2


def test_bounds(capsys, k4_file):
    code, out, _ = _run(capsys, "bounds", "--p", "3", "--d", "1")
    assert code == 0
    assert "headline (2pd)^p=216" in out
    code, out, _ = _run(capsys, "bounds", k4_file, "--format", "jsonl")
    assert json.loads(out)["per_level"] == [1, 6, 24]
    code, _, _ = _run(capsys, "bounds", "--p", "2", "--d", "1")
    assert code == 2


def test_bench(capsys, k4_file):
    code, out, _ = _run(capsys, "bench", k4_file, "--workers", "1,2", "--format", "jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["workers"] for r in rows] == [1, 2]
    assert rows[0]["speedup"] == 1.0
