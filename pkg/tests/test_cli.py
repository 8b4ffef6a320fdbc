import json

import pytest

from x3curve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--q", "11", "--json")
    d = json.loads(out)
    assert code == 0
    assert (d["m"], d["genus"], d["group_order"], d["weierstrass_count"]["exact"]) == (4, 19, 288, 828)
    code, out, _ = run(capsys, "info", "--q", "5")
    assert code == 0 and "Aut order 360 exceeds G order 72" in out


def test_bad_q(capsys):
    code, _, err = run(capsys, "info", "--q", "7")
    assert code == 2 and "error" in err
    with pytest.raises(SystemExit) as exc:
        main(["info"])
    assert exc.value.code == 2


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--q", "11", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and lines[4] == "total,,540"
    code, out, _ = run(capsys, "census", "--q", "5", "--json")
    d = json.loads(out)
    assert len(d["rows"]) == 2 == d["divisors_of_m"] and d["total"] == 66


def test_semigroup(capsys):
    code, out, _ = run(capsys, "semigroup", "--q", "11", "--point", "sample:O:0", "--oracle", "--json")
    d = json.loads(out)
    assert code == 0 and d["oracle"]["matched_closed_form"] and d["class"]["label"] == "O"
    code, out, _ = run(capsys, "semigroup", "--q", "11", "--point", "sample:generic:1", "--seed", "3", "--json")
    assert code == 0 and json.loads(out)["class"]["label"] == "generic"
    code, _, _ = run(capsys, "semigroup", "--q", "5", "--point", "a=1,0;b=1,0")
    assert code == 2
    code, _, _ = run(capsys, "semigroup", "--q", "5", "--point", "Oinf", "--oracle")
    assert code == 0


def test_polys(capsys):
    code, out, _ = run(capsys, "polys", "--q", "5", "--json")
    d = json.loads(out)
    assert code == 0 and d["P"]["2"] == ["2,0"] * 4


def test_verify_and_determinism(capsys):
    code, out1, _ = run(capsys, "verify", "--q", "5", "--suite", "all", "--json")
    code2, out2, _ = run(capsys, "verify", "--q", "5", "--suite", "all", "--json")
    assert code == code2 == 0 and out1 == out2
    code, _, _ = run(capsys, "verify", "--q", "5", "--suite", "bogus")
    assert code == 2
    code, out, _ = run(capsys, "verify", "--q", "11", "--suite", "polys", "--seed", "7", "--json")
    d = json.loads(out)
    assert code == 0 and d["suites"]["polys"][0]["detail"]["instances"] == 500
