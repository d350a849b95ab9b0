import json

import pytest

from octomod.cli import main
from octomod.homalg import right_mult_operator
from octomod.bimodule import O1
from octomod.octonion import E, Octonion, parse_octonion
from octomod.paralinear import ParaLinearMap

from .oracles import MULTIPLICATION_TABLE


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_matches_oracle(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert rows[0] == ["1"] + ["e%d" % i for i in range(1, 8)]
    for i, row in enumerate(rows[1:]):
        for j, cell in enumerate(row[1:]):
            assert parse_octonion(cell) == parse_octonion(MULTIPLICATION_TABLE[i].split()[j])


@pytest.mark.parametrize("a,b,expected", [
    ("e1", "e2", "e3"),
    ("e2", "e1", "-e3"),
    ("1+e1", "1+e1", "2e1"),
    ("0", "e5", "0"),
    ("1/2e7", "2e7", "-1"),
])
def test_mul(capsys, a, b, expected):
    code, out, _ = run(capsys, "mul", a, b)
    assert code == 0
    assert parse_octonion(out.strip()) == parse_octonion(expected)


def test_mul_parse_error(capsys):
    code, _, err = run(capsys, "mul", "1+x", "e1")
    assert code == 2
    assert "error" in err


def write_map(path, f):
    path.write_text(json.dumps(f.to_json()))
    return str(path)


def test_compose_right_multiplications(tmp_path, capsys):
    p, q = Octonion([1, 2, 0, 0, -1, 0, 3, 0]), E[5] + E[2]
    fp = write_map(tmp_path / "f.json", right_mult_operator(p, O1))
    fq = write_map(tmp_path / "g.json", right_mult_operator(q, O1))
    out = tmp_path / "out.json"
    code, _, _ = run(capsys, "compose", "left", fp, fq, str(out))
    assert code == 0
    got = ParaLinearMap.from_json(json.loads(out.read_text()))
    assert got == right_mult_operator(q * p, O1)


def test_compose_rejects_wrong_chirality(tmp_path, capsys):
    f = write_map(tmp_path / "f.json", right_mult_operator(E[1], O1))
    code, _, err = run(capsys, "compose", "right", f, f, str(tmp_path / "o.json"))
    assert code == 2 and "para-linear" in err


def test_compose_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "compose", "left", str(tmp_path / "nope"), str(tmp_path / "nope"), "o")
    assert code == 2


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "octonion_alternativity", "--trials", "3")[0] == 0
    code, out, _ = run(capsys, "check", "right_multiplication_composition_pq_order", "--trials", "3")
    assert code == 0 and out.startswith("DISC")
    assert run(capsys, "check", "bogus")[0] == 2
    assert run(capsys, "check", "octonion_alternativity", "--trials", "-1")[0] == 2


def test_check_json_is_deterministic(capsys):
    args = ("check", "paralinear_pAp_eq_App_bar", "--trials", "2", "--seed", "3", "--json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    data = json.loads(a)
    assert data[0]["name"] == "paralinear_pAp_eq_App_bar" and data[0]["status"] == "pass"


def test_check_list(capsys):
    code, out, _ = run(capsys, "check", "--list")
    assert code == 0
    assert "octonion_alternativity" in out and "(discovery)" in out


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1)])
def test_hom_dim(capsys, n, m):
    code, out, _ = run(capsys, "hom-dim", str(n), str(m))
    lines = out.splitlines()
    assert code == 0 and lines[0] == str(8 * n * m)
    assert all(line.endswith("ok") for line in lines[1:])


def test_hom_dim_rejects_zero(capsys):
    assert run(capsys, "hom-dim", "0", "1")[0] == 2
