import json

import pytest

from prismatic import CliqueCover, read_edgelist, write_edgelist
from prismatic.cli import run
from prismatic.families.special import diamond


def gen(tmp_path, family, *extra):
    out = tmp_path / f"{family}.el"
    assert run(["gen", family, "-o", str(out), *extra]) == 0
    return out


def test_prism_cover_with_oracle(tmp_path, capsys):
    path = gen(tmp_path, "prism")
    capsys.readouterr()
    assert run(["cover", str(path), "--oracle"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("size 2") and "agrees" in out


def test_schlafli_hit_and_cover(tmp_path, capsys):
    path = gen(tmp_path, "schlafli")
    capsys.readouterr()
    assert run(["hit", str(path), "--k", "5"]) == 2
    assert capsys.readouterr().out.strip() == "no"
    assert run(["cover", str(path), "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["stats"]["size"] == 9
    assert report["branch"] == "schlafli-oracle"


def test_hit_yes(tmp_path, capsys):
    path = gen(tmp_path, "lk33")
    capsys.readouterr()
    assert run(["hit", str(path), "--k", "3"]) == 0
    assert len(capsys.readouterr().out.split()) == 3


def test_check_diamond(tmp_path, capsys):
    path = tmp_path / "diamond.el"
    write_edgelist(diamond(), path)
    assert run(["check", str(path), "--what", "prismatic"]) == 2
    out = capsys.readouterr().out
    assert out.startswith("prismatic: no") and "PrismaticViolation" in out


def test_check_all_json(tmp_path, capsys):
    path = gen(tmp_path, "lk33")
    capsys.readouterr()
    assert run(["check", str(path), "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report["result"]) == {"prismatic", "cobridge", "orientable", "3color"}
    assert all(v["ok"] for v in report["result"].values())


def test_contract_error_named(tmp_path, capsys):
    path = tmp_path / "diamond.el"
    write_edgelist(diamond(), path)
    assert run(["cover", str(path)]) == 2
    assert "NotDiamondK4Free" in capsys.readouterr().err


def test_exit_codes(tmp_path, capsys):
    assert run(["cover", str(tmp_path / "missing.el")]) == 74
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n")
    assert run(["cover", str(bad)]) == 74
    assert run(["frobnicate"]) == 64
    assert run(["hit", str(bad)]) == 64
    assert run(["gen", "nosuchfamily", "-o", str(tmp_path / "x.el")]) == 2


def test_json_cover_round_trips(tmp_path, capsys):
    path = gen(tmp_path, "cycle8")
    capsys.readouterr()
    assert run(["cover", str(path), "--format", "json", "--verify"]) == 0
    report = json.loads(capsys.readouterr().out)
    cover = CliqueCover(tuple(tuple(p) for p in report["result"]["parts"]))
    assert cover.is_valid(read_edgelist(path))
    assert report["elapsed_ms"] is None and report["seed"] == 0


@pytest.mark.parametrize("argv", [
    ["cover", "{path}"],
    ["cover", "{path}", "--format", "json"],
    ["check", "{path}", "--format", "json"],
])
def test_byte_identical(tmp_path, capsys, argv):
    path = gen(tmp_path, "ladder")
    capsys.readouterr()
    argv = [a.format(path=path) for a in argv]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_gen_with_spec_is_seeded(tmp_path):
    spec = tmp_path / "p.spec"
    spec.write_text("n = 3\nhats = 1, 2, 1\nextras = 1, 1, 1\n")
    a = gen(tmp_path, "path", "--spec", str(spec), "--seed", "5")
    first = a.read_text()
    b = gen(tmp_path, "path", "--spec", str(spec), "--seed", "5")
    assert b.read_text() == first


def test_selftest(capsys):
    assert run(["families", "selftest", "--count", "3"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("PASS")
