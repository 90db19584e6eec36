import json

import pytest

from kisslat.algebra.field import field_make
from kisslat.cli import main
from kisslat.codes import LinearCode, NestedCodeChain, extended_hamming_8, repetition_code
from kisslat.codes.io import write_chain, write_code


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def hamming_chain(tmp_path):
    F = field_make(2, 1)
    ch = NestedCodeChain.build([LinearCode.full_space(F, 8), extended_hamming_8()], [1, 4])
    p = tmp_path / "h8.chain"
    p.write_text(write_chain(ch))
    return p


def test_rs_weights_csv(capsys):
    code, out, _ = run(capsys, "code", "rs", "--q", "8", "--a", "4", "--weights")
    assert code == 0
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert rows["4"] == "490"


def test_simplex_generator_shape(capsys):
    code, out, _ = run(capsys, "code", "simplex", "--s", "2")
    assert code == 0
    q, n, k = map(int, out.splitlines()[0].split())
    assert (q, n, k) == (2, 16, 4)


def test_code_file_weights_round_trip(tmp_path, capsys):
    p = tmp_path / "h8.code"
    p.write_text(write_code(extended_hamming_8()))
    code, out, _ = run(capsys, "code", "weights", str(p))
    assert code == 0 and "4,14" in out and "8,1" in out


def test_verify_chain_pass_and_fail(hamming_chain, capsys):
    code, out, _ = run(capsys, "code", "verify-chain", str(hamming_chain), "--json")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "code", "verify-chain", str(hamming_chain), "--profile", "1,5")
    assert code == 1 and out.strip().endswith("FAIL")


def test_construct_d_e8(hamming_chain, tmp_path, capsys):
    dest = tmp_path / "e8.lat"
    code, out, _ = run(capsys, "lattice", "construct-d", str(hamming_chain), "-o", str(dest))
    assert code == 0 and dest.exists()
    rep = json.loads(out)
    assert rep["kissing"] == 240 and rep["min_norm"] == "4"


def test_construct_e_gives_d4(tmp_path, capsys):
    F = field_make(2, 1)
    ch = NestedCodeChain.build([LinearCode.full_space(F, 2), repetition_code(F, 2)])
    p = tmp_path / "rep2.chain"
    p.write_text(write_chain(ch))
    dest = tmp_path / "d4.tlat"
    code, out, _ = run(capsys, "lattice", "construct-e", "--base", "Z2", "--chain", str(p), "-o", str(dest))
    assert code == 0
    assert json.loads(out)["kissing"] == 24
    code, out, _ = run(capsys, "lattice", "verify-t", str(dest))
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_t_named(capsys):
    code, out, _ = run(capsys, "lattice", "verify-t", "Z2")
    assert code == 0 and json.loads(out)["ok"] is True


def test_kiss_named_e8(capsys):
    code, out, _ = run(capsys, "lattice", "kiss", "E8", "--jobs", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["kissing"] == 240 and rep["dim"] == 8 and "runtime_ms" not in rep


def test_elkies_supersingular(capsys):
    code, out, _ = run(capsys, "curve", "elkies", "--q", "2", "--k", "3")
    assert code == 0 and json.loads(out)["supersingular"] == 8


def test_bounds_constant(capsys):
    code, out, _ = run(capsys, "bounds", "--const", "liminf.delta0")
    rep = json.loads(out)
    assert code == 0 and rep["passes"] is True and rep["value"].startswith("0.65066")


def test_x0m_precondition_and_raw(capsys):
    code, _, err = run(capsys, "curve", "x0m", "--q", "2", "--factors", "0,1^3;1,1")
    assert code == 1 and "check failed" in err
    code, out, _ = run(capsys, "curve", "x0m", "--q", "2", "--factors", "0,1^3;1,1", "--raw")
    rep = json.loads(out)
    assert code == 0 and (rep["epsilon"], rep["kappa"], rep["genus"]) == (36, 8, 5)


@pytest.mark.parametrize("argv", [
    ["lattice", "kiss", "NoSuchLattice"],
    ["bounds", "--const", "no.such.constant"],
    ["code", "weights", "/nonexistent/file.code"],
    ["code", "rs", "--q", "8"],
    ["bounds"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_manifest_written(tmp_path, hamming_chain, capsys):
    m = tmp_path / "run.json"
    code, _, _ = run(capsys, "code", "verify-chain", str(hamming_chain), "--manifest", str(m))
    man = json.loads(m.read_text())
    assert code == 0 and man["exit_code"] == 0
    assert str(hamming_chain) in man["input_hashes"]
    assert len(man["input_hashes"][str(hamming_chain)]) == 64
    assert man["precision"]["bits"] >= 53


def test_json_output_is_byte_stable(capsys):
    argv = ["bounds", "--const", "e_s.s3_half", "--const", "liminf.bound"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_subset(capsys):
    code, out, err = run(capsys, "verify", "--only", "3,7")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert [c["id"] for c in rep["criteria"]] == [3, 7]
    assert err.count("[PASS]") == 2
