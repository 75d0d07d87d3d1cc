"""CLI surface: canonical output, exit codes, JSON schema, determinism."""

import json

from intshuffle.cli import main

GOLDEN_00 = (
    "-q1^2 q2^2 z1 z2 - q1^2 q2 z1 z2 - q1 q2^2 z1 z2 + 2 q1 q2 z1^2"
    " + 2 q1 q2 z1 z2 + 2 q1 q2 z2^2 - q1 z1 z2 - q2 z1 z2 - z1 z2"
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "expand", "sh[0,0]")
    assert code == 0
    assert out == GOLDEN_00 + "\n"


def test_expand_single_letter(capsys):
    code, out, _ = run(capsys, "expand", "sh[1]")
    assert (code, out) == (0, "z1\n")
    code, out, _ = run(capsys, "expand", "sh[0]")
    assert (code, out) == (0, "1\n")


def test_expand_scalar(capsys):
    code, out, _ = run(capsys, "expand", "q + 1")
    assert code == 0
    assert out == "q1 q2 + 1\n"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--json", "sh[0,0]")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "schema": 1,
        "kind": "element",
        "arity": 2,
        "poly": GOLDEN_00,
    }


def test_determinism(capsys):
    first = run(capsys, "expand", "sh[1,0,2]")
    second = run(capsys, "expand", "sh[1,0,2]")
    assert first == second


def test_wheel_exit_codes(capsys):
    code, out, _ = run(capsys, "wheel", "sh[0,0,0]")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "wheel", "(z1 z2 z3) sh[0,0,0] + sh[1,1,1]")
    assert code == 0  # equal expressions: still a shuffle element
    code, out, _ = run(capsys, "wheel", "z1 + z2 + z3")
    assert (code, out) == (1, "false\n")


def test_corollary(capsys):
    code, out, _ = run(capsys, "corollary", "sh[0,0]")
    assert code == 0
    assert out.strip() != ""
    code, out, _ = run(capsys, "corollary", "z1 z2")
    assert (code, out) == (1, "not divisible\n")


def test_lemma(capsys):
    code, out, _ = run(capsys, "lemma", "a", "[0,0]", "1")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "lemma", "b", "[1,0,2]", "-1")
    assert code == 0


def test_reduce2(capsys):
    code, out, _ = run(capsys, "reduce2", "[0,1]", "--verify")
    assert code == 0
    assert "target: sh[0,1]" in out
    assert "verified: true" in out


def test_reduce3_json(capsys):
    code, out, _ = run(capsys, "reduce3", "[0,0,1]", "--json", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["target"] == [0, 0, 1]
    assert payload["verified"] is True


def test_ideal_cert(capsys):
    code, out, _ = run(capsys, "ideal-cert", "[1,0]", "--verify")
    assert code == 0
    assert "A: 1/2 z1 + 1/2 z2" in out
    assert "B: 1/2 z1 z2" in out


def test_assoc(capsys):
    code, out, _ = run(capsys, "assoc", "1", "0", "-1")
    assert (code, out) == (0, "true\n")


def test_verify_cert_files(tmp_path, capsys):
    code, out, _ = run(capsys, "reduce3", "[2,0,1]", "--json")
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(out)
    code, out, _ = run(capsys, "verify-cert", str(cert_file))
    assert (code, out) == (0, "true\n")

    payload = json.loads(cert_file.read_text())
    payload["combination"][0][0] = payload["combination"][0][0] + " + 1"
    tampered = tmp_path / "bad.json"
    tampered.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "verify-cert", str(tampered))
    assert (code, out) == (1, "false\n")

    malformed = tmp_path / "broken.json"
    malformed.write_text("{not json")
    code, _, err = run(capsys, "verify-cert", str(malformed))
    assert code == 2 and "error:" in err


def test_verify_ideal_cert_file(tmp_path, capsys):
    code, out, _ = run(capsys, "ideal-cert", "[0,1,0]", "--json")
    assert code == 0
    cert_file = tmp_path / "ideal.json"
    cert_file.write_text(out)
    code, out, _ = run(capsys, "verify-ideal-cert", str(cert_file))
    assert (code, out) == (0, "true\n")


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "expand", "sh[0,0] +")
    assert code == 2
    assert "position 9" in err


def test_arity_error_exit_code(capsys):
    code, _, err = run(capsys, "expand", "sh[0,0] + sh[0]")
    assert code == 2
    code, _, err = run(capsys, "corollary", "sh[3]")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run(capsys, "lemma", "q", "[0,0]", "1")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_props_seeded(capsys):
    code, out, _ = run(capsys, "props", "--seed", "7", "--trials", "2")
    assert code == 0
    assert "FAIL" not in out
    again = run(capsys, "props", "--seed", "7", "--trials", "2")
    assert again == (code, out, "")
