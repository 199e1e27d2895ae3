import json
import subprocess
import sys

import pytest

from dyckstat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_table_with_oracle(capsys):
    code, out, _ = run(capsys, "count", "--k", "4", "--n", "3..6", "--oracle")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,target,closed_form,gf,oracle,agree"
    assert lines[1:] == ["3,L=4,1,,1,True", "4,L=4,2,,2,True", "5,L=4,5,,5,True", "6,L=4,9,,9,True"]


def test_count_prime_has_gf_column(capsys):
    code, out, _ = run(capsys, "count", "--k", "5", "--n", "5..8", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [r["closed_form"] for r in rows] == [2, 6, 14, 36]
    assert all(r["gf"] == r["closed_form"] and r["agree"] for r in rows)


def test_count_without_closed_form(capsys):
    code, out, _ = run(capsys, "count", "--k", "8", "--n", "6")
    assert code == 0
    assert "no closed form" in out


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--motzkin", "--order", "4")
    assert code == 0
    assert out.splitlines() == ["n,coefficient", "0,1", "1,1", "2,2", "3,4", "4,9"]


def test_bijection_certificate(capsys):
    code, out, _ = run(capsys, "bijection", "rshit2", "--p", "uhuhhdhhdudud", "--r", "3", "--s", "4")
    assert code == 0
    word, cert = out.splitlines()
    assert word == "uuduudduuudduddduuuuduuudddddd"
    assert "returns=2" in cert and "L=35" in cert


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bijection", "to-star", "udd"], 2),
        (["count", "--k", "1", "--n", "x"], 2),
        (["count", "--k", "3", "--n", "13", "--oracle"], 3),
        (["count", "--k", "3", "--n", "10", "--oracle", "--max-oracle-n", "9"], 3),
        (["series", "--lp", "9", "--order", "5"], 4),
        (["bijection", "inverse", "l4-t2", "uuddud"], 5),
        (["bijection", "l4-t1", "--m", "hudh", "--j1", "3", "--j2", "2"], 5),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_env_var_raises_bound(capsys, monkeypatch):
    monkeypatch.setenv("DYCKSTAT_MAX_DYCK_N", "4")
    try:
        got = main(["count", "--k", "1", "--n", "5", "--oracle"])
    except SystemExit as exc:
        got = exc.code
    assert got == 3
    assert main(["count", "--k", "1", "--n", "5", "--oracle", "--max-oracle-n", "5"]) == 0


def test_verify_figures_passes(capsys):
    code, out, _ = run(capsys, "verify", "figures")
    assert code == 0
    assert out.splitlines()[-1] == "OK: 0 failure(s)"


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "dyckstat", "count", "--rs", "2", "3", "--n", "4..9", "--oracle"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"n,target")
