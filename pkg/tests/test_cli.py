import json
from pathlib import Path

import pytest

from fermat_hgm.cli import EXIT_DATA, EXIT_DOMAIN, EXIT_OK, main

DATA = Path(__file__).resolve().parents[1] / "src" / "fermat_hgm" / "data" / "level22_ell11.json"


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.mark.parametrize("t0,mp", [(2, "x + 5"), (4, "x^2 - x - 1"), (10, "x^2 + x - 11")])
def test_trace(capsys, t0, mp):
    rc, out, _ = run(capsys, "trace", "--ell", "11", "--t0", str(t0))
    assert rc == EXIT_OK and f"minpoly\t{mp}" in out and "count+gauss" in out


def test_trace_refuses_degenerate_residue(capsys):
    rc, _, err = run(capsys, "trace", "--ell", "11", "--t0", "12")
    assert rc == EXIT_DOMAIN and "degenerate" in err


def test_degenerate(capsys):
    rc, out, _ = run(capsys, "degenerate", "--ell", "11", "--point", "0")
    assert rc == EXIT_OK and "x^2 - 4*x - 316" in out.splitlines()
    rc, out, _ = run(capsys, "degenerate", "--ell", "11", "--point", "inf")
    assert out.strip() == "x + 22"
    assert run(capsys, "degenerate", "--ell", "15")[0] == EXIT_DOMAIN


def test_conductor(capsys):
    rc, out, _ = run(capsys, "conductor", "--t0=-1/8")
    assert rc == EXIT_OK and "3^3 * sqrt5^3" in out
    rc, out, _ = run(capsys, "conductor", "--t0=9/8", "--q", "19")
    assert rc == EXIT_DOMAIN


def test_bound(capsys):
    assert run(capsys, "bound", "--ell", "2")[1].strip() == "6084 → C(2)=13"
    assert run(capsys, "bound", "--ell", "3")[1].strip() == "C(3)=41363281"


def test_ghost(capsys):
    rc, out, _ = run(capsys, "ghost", "--q", "5", "--r", "3")
    assert rc == EXIT_OK and out.startswith("t0_num\tt0_den")
    assert len(out.strip().splitlines()) == 11
    rc, _, err = run(capsys, "ghost", "--q", "5", "--r", "3", "--box", "10000,10000,30")
    assert rc == EXIT_DOMAIN and "budget" in err


def test_tate_and_igusa(capsys):
    rc, out, _ = run(capsys, "tate", "--curve", "frey_ppp", "--t", "1/2")
    assert rc == EXIT_OK and "conductor\t64" in out
    rc, out, _ = run(capsys, "igusa", "--t", "2")
    assert rc == EXIT_OK and "J2\t-4800" in out


def test_eliminate(capsys, tmp_path):
    prefix = tmp_path / "rep"
    rc, out, _ = run(capsys, "eliminate", "--level", "2", "2", "--data", str(DATA), "--primes", "11",
                     "--cases", "1", "--out", str(prefix))
    assert rc == EXIT_OK and "bound\t281" in out
    doc = json.loads(Path(str(prefix) + ".json").read_text())
    assert max(doc["primes"]) == 281
    assert Path(str(prefix) + ".tsv").read_text().startswith("form_label\tsurviving_primes")


def test_data_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(capsys, "eliminate", "--level", "2", "2", "--data", str(bad), "--primes", "11")[0] == EXIT_DATA
    missing = tmp_path / "none.json"
    assert run(capsys, "eliminate", "--level", "2", "2", "--data", str(missing), "--primes", "11")[0] == EXIT_DATA
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "--config", str(cfg), "bound", "--ell", "2")[0] == EXIT_DATA
