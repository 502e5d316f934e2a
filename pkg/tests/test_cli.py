"""Command-line behavior: formats, flags, exit codes."""

import json

import pytest

from ebwtlab import api
from ebwtlab.cli import main, resolve_port


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ebwt_text(capsys):
    code, out, err = run(capsys, "ebwt", "baa,bab")
    assert (code, out, err) == (0, "bababa\n", "")


def test_runs_text(capsys):
    assert run(capsys, "runs", "aaa") == (0, "0\n", "")


def test_invert_text(capsys):
    assert run(capsys, "invert", "bababa") == (0, "aab,abb\n", "")


def test_bwt_and_lyndon_text(capsys):
    assert run(capsys, "bwt", "banana")[1] == "nnbaaa\n"
    assert run(capsys, "lyndon", "banana")[1] == "b,an,an,a\n"


def test_count_and_enumerate_text(capsys):
    assert run(capsys, "count", "--n", "6", "--k", "1")[1] == "5\n"
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--k", "1")
    assert code == 0
    assert out.splitlines() == ["2+2+2", "2+4", "3+3", "4+2", "6"]


def test_search_text(capsys):
    code, out, _ = run(capsys, "search", "--word", "baabab", "--k", "2")
    assert code == 0
    assert "min" in out and "3 via 6" in out
    assert "max" in out and "5 via 3+3" in out
    assert "baseline" in out


def test_block_and_bound_text(capsys):
    assert run(capsys, "block", "--word", "baabab", "--p", "3")[1] == "baa,bab\n"
    code, out, _ = run(capsys, "bound", "--word", "baabab", "--k", "2")
    assert code == 0
    assert "bound" in out and "18" in out and "true" in out


def test_family_text_format(capsys):
    code, out, _ = run(capsys, "family", "--k", "1", "--ratio", "1")
    assert code == 0
    word = "aaabaabbbabb"
    assert out == f"(6, {word}, {word})\n"


def test_cycles_text_format(capsys):
    code, out, _ = run(capsys, "cycles", "--n", "4", "--k", "2")
    assert code == 0
    assert out == "t=0,1 alpha=2,1 beta=1,2 i=3,2 feasible=true\n"
    code, out, _ = run(capsys, "cycles", "--n", "3", "--k", "2")
    assert "i=7/3,5/3 feasible=false" in out


def test_artin_text_space_joined(capsys):
    # 61 is prime with 2 a generator, so 60 itself is in the output.
    code, out, _ = run(capsys, "artin", "--max", "60")
    assert (code, out) == (0, "2 4 10 12 18 28 36 52 58 60\n")


def test_circulant_text(capsys):
    assert run(capsys, "circulant", "--k", "10") == (0, "true\n", "")


def test_json_flag_before_or_after_subcommand(capsys):
    _, before, _ = run(capsys, "--json", "ebwt", "baa,bab")
    _, after, _ = run(capsys, "ebwt", "--json", "baa,bab")
    assert before == after == '{"l":"bababa","runs":5}\n'


def test_json_matches_payload_builders(capsys):
    cases = [
        (["--json", "search", "--word", "baabab", "--k", "2"], api.search_payload("baabab", 2)),
        (["--json", "count", "--n", "6", "--k", "1"], api.count_payload(6, 1)),
        (["--json", "family", "--k", "2", "--ratio", "2"], api.family_payload(2, 2)),
        (["--json", "artin", "--max", "12"], api.artin_payload(12)),
        (["--json", "bound", "--word", "baabab", "--k", "2"], api.bound_payload("baabab", 2)),
    ]
    for argv, payload in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out == api.canonical_json(payload) + "\n"


def test_alphabet_flag(capsys):
    _, before, _ = run(capsys, "--alphabet", "ba", "ebwt", "baa,bab")
    _, after, _ = run(capsys, "ebwt", "--alphabet", "ba", "baa,bab")
    assert before == after == "ababab\n"


def test_alphabet_mismatch_is_an_error(capsys):
    code, out, err = run(capsys, "--alphabet", "ab", "ebwt", "abc")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_verify_suite_output(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "circulant")
    assert code == 0
    assert out.startswith("PASS ")
    code, out, _ = run(capsys, "--json", "verify", "--suite", "circulant")
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["suite"] == "circulant"
    assert all(c["ok"] for c in payload["checks"])


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_subcommand_prints_usage(capsys):
    code = main([])
    captured = capsys.readouterr()
    assert code == 2
    assert "usage" in captured.err


def test_guard_violation_exits_1_with_message(capsys):
    code, out, err = run(capsys, "search", "--word", "ab" * 30, "--k", "0")
    assert code == 1
    assert out == ""
    assert "limit" in err


def test_config_flag_tightens_guards(tmp_path, capsys):
    conf = tmp_path / "lab.conf"
    conf.write_text("search_limit=1\n")
    code, _, err = run(capsys, "--config", str(conf), "search", "--word", "abab", "--k", "0")
    assert code == 1
    assert "limit of 1" in err
    code, out, _ = run(capsys, "search", "--word", "abab", "--k", "0")
    assert code == 0 and "min" in out


def test_malformed_parts_error(capsys):
    code, _, err = run(capsys, "ebwt", "ab,,ba")
    assert code == 1
    assert "error:" in err


def test_resolve_port_precedence(tmp_path, monkeypatch):
    monkeypatch.delenv("EBWTLAB_PORT", raising=False)
    assert resolve_port(None, None) == 8642
    monkeypatch.setenv("EBWTLAB_PORT", "9100")
    assert resolve_port(None, None) == 9100
    conf = tmp_path / "lab.conf"
    conf.write_text("port=9200\n")
    assert resolve_port(None, str(conf)) == 9200
    assert resolve_port(9300, str(conf)) == 9300
