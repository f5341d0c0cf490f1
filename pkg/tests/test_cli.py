"""Command line behavior: formats, exit codes, settings, disk cache."""

import json

import pytest

from liefold import WeightParseError
from liefold.cli import main, parse_weight


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_weight():
    assert parse_weight("[1,0,2]") == (1, 0, 2)
    assert parse_weight(" [ 3 , 4 ] ") == (3, 4)
    for bad in ["", "[]", "[1,", "1,2", "[a,b]", "[-1,0]", "[1.5]"]:
        with pytest.raises(WeightParseError):
            parse_weight(bad)


def test_decompose_json(capsys):
    code, out, err = run_cli(
        capsys,
        "decompose", "--family", "B", "--rank", "2",
        "[0,1]", "[0,1]", "--format", "json",
    )
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert set(payload) == {"metadata", "body"}
    body = payload["body"]
    assert body["dimension"] == 16
    terms = {tuple(t["weight"]): t["multiplicity"] for t in body["terms"]}
    assert terms == {(0, 2): 1, (1, 0): 1, (0, 0): 1}


def test_decompose_paper_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose", "--family", "A", "--rank", "1", "[1]", "[1]",
    )
    assert code == 0
    assert "[2]" in out and "[0]" in out


def test_malformed_weight_exits_two(capsys):
    code, out, err = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "2", "[1,x]", "[0,1]",
    )
    assert code == 2
    assert "error[parse]" in err


def test_wrong_rank_exits_two(capsys):
    code, _, err = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "2", "[1,0,0]", "[0,1]",
    )
    assert code == 2


def test_unfold_non_palindrome_exits_three(capsys):
    code, _, err = run_cli(capsys, "unfold", "--pair", "even", "--n", "2", "[1,2,3]")
    assert code == 3
    assert "error[not-selfdual]" in err


def test_fold_unfold_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "fold", "--pair", "odd", "--n", "2", "[2,1]", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["body"]["sl"] == [2, 1, 1, 2]
    code, out, _ = run_cli(
        capsys, "unfold", "--pair", "odd", "--n", "2", "[2,1,1,2]",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["body"]["folded"] == [2, 1]


def test_scan_truncation_exits_five(capsys):
    code, out, err = run_cli(
        capsys, "scan", "--pair", "even", "--n", "2", "--height", "2",
        "--limit", "50", "--format", "json",
    )
    assert code == 5
    assert "warning" in err
    body = json.loads(out)["body"]
    assert body["truncated"] is True
    assert body["triples_examined"] == 50


def test_scan_json_density_is_unreduced(capsys):
    code, out, _ = run_cli(
        capsys, "scan", "--pair", "even", "--n", "2", "--height", "1",
        "--format", "json",
    )
    assert code == 0
    body = json.loads(out)["body"]
    assert body["density"] == "1/23"
    assert body["missing_triples"] == 1


def test_verify_default_conjecture(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--pair", "odd", "--n", "2", "--height", "1",
        "--format", "json",
    )
    assert code == 0
    body = json.loads(out)["body"]
    assert body["hypothesis"] == "C3"
    assert body["counterexamples"] == []


def test_cell_counts(capsys):
    code, out, _ = run_cli(
        capsys, "cell", "--pair", "even", "--n", "2", "[2,0,2]", "[5,0,5]",
        "--format", "json",
    )
    assert code == 0
    body = json.loads(out)["body"]
    assert [body["n1"], body["n4"], body["n2"], body["n3"]] == [27, 3, 9, 6]


def test_table_long_format(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--pair", "even", "--n", "2",
        "--rows", "[0,1];[2,0]", "--cols", "[1,0]",
        "--format", "long",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "row,col,n1,n4,n2,n3"
    assert lines[1] == '"[0,1]","[1,0]",4,0,2,2'
    assert lines[2] == '"[2,0]","[1,0]",8,1,4,3'


def test_stable_output_is_worker_independent(capsys):
    argv = [
        "scan", "--pair", "even", "--n", "2", "--height", "1",
        "--format", "json", "--stable",
    ]
    code1, out1, _ = run_cli(capsys, *argv, "--workers", "1")
    code2, out2, _ = run_cli(capsys, *argv, "--workers", "3")
    assert code1 == code2 == 0
    assert out1 == out2


def test_version_flag(capsys):
    code = main(["--version"])
    out = capsys.readouterr().out
    assert code == 0
    assert "liefold" in out


def test_unknown_verb_exits_nonzero(capsys):
    code = main(["frobnicate"])
    assert code != 0


def test_config_file_and_env_precedence(tmp_path, monkeypatch, capsys):
    # Config sets long format; environment overrides to json; a flag
    # would override both.
    cfg = tmp_path / "liefold.cfg"
    cfg.write_text("format = long\n# comment\nunknown-key = 7\n")
    monkeypatch.chdir(tmp_path)
    code, out, _ = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "1", "[1]", "[1]",
    )
    assert code == 0
    assert out.splitlines()[0] == "weight,multiplicity"

    monkeypatch.setenv("LIEFOLD_FORMAT", "json")
    code, out, _ = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "1", "[1]", "[1]",
    )
    assert code == 0
    json.loads(out)

    code, out, _ = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "1", "[1]", "[1]",
        "--format", "paper",
    )
    assert code == 0
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_explicit_config_must_exist(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LIEFOLD_CONFIG", str(tmp_path / "absent.cfg"))
    code, _, err = run_cli(
        capsys, "decompose", "--family", "A", "--rank", "1", "[1]", "[1]",
    )
    assert code == 2
    assert "absent.cfg" in err


def test_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "dec.json"
    argv = [
        "decompose", "--family", "C", "--rank", "2", "[1,1]", "[2,0]",
        "--cache", str(cache), "--format", "json",
    ]
    code, out1, _ = run_cli(capsys, *argv)
    assert code == 0
    assert cache.exists()
    stored = json.loads(cache.read_text())
    assert stored["version"] == 1
    assert stored["entries"]

    code, out2, _ = run_cli(capsys, *argv, "--stable")
    assert code == 0
    body1 = json.loads(out1)["body"]
    body2 = json.loads(out2)["body"]
    assert body1 == body2


def test_corrupt_cache_is_ignored(tmp_path, capsys):
    cache = tmp_path / "dec.json"
    cache.write_text("{ not json")
    code, out, _ = run_cli(
        capsys,
        "decompose", "--family", "A", "--rank", "2", "[1,0]", "[0,1]",
        "--cache", str(cache), "--format", "json",
    )
    assert code == 0
    # The unreadable file was replaced by a fresh valid one.
    assert json.loads(cache.read_text())["version"] == 1


def test_binary_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "dec.bin"
    argv = [
        "decompose", "--family", "B", "--rank", "2", "[1,1]", "[0,1]",
        "--cache", str(cache), "--cache-format", "binary",
    ]
    code, _, _ = run_cli(capsys, *argv)
    assert code == 0
    code, _, _ = run_cli(capsys, *argv)
    assert code == 0


def test_twisted_verb(capsys):
    code, out, _ = run_cli(capsys, "twisted", "--n", "3", "--format", "json")
    assert code == 0
    body = json.loads(out)["body"]
    assert body["fixed_count"] == 8
    assert body["matches_spin_weights"] is True
