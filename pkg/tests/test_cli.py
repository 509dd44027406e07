import subprocess
import sys

import pytest

from pathdecomp.cli import main


def run(*argv):
    return main([str(a) for a in argv])


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.inst", tmp_path / "b.inst"
    assert run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--seed", "7", "--out", a) == 0
    assert run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--seed", "7", "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()
    m = [ln for ln in a.read_text().splitlines() if ln.startswith("matching")][0]
    assert len(m.split()) == 7


def test_gen_uses_env_seed(tmp_path, monkeypatch):
    monkeypatch.setenv("PD_SEED", "7")
    a = tmp_path / "a.inst"
    run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--out", a)
    b = tmp_path / "b.inst"
    run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--seed", "7", "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_gen_scg_violation(capsys):
    assert run("gen", "--group", "cyclic:12", "--g", "6", "--r", "1") == 2
    assert "condition (a)" in capsys.readouterr().err


def test_decompose_and_verify(tmp_path, capsys):
    inst, dec, tr = tmp_path / "z.inst", tmp_path / "z.dec", tmp_path / "z.trace"
    run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--seed", "7", "--out", inst)
    assert run("decompose", inst, "--out", dec, "--trace", tr) == 0
    out = capsys.readouterr().out
    assert out.startswith("route engine rewrites ")
    assert dec.read_text().splitlines()[0] == "paths 6 length 5"
    assert run("verify", inst, dec) == 0
    assert "CHECK coverage PASS" in capsys.readouterr().out


def test_tampered_decomposition_fails(tmp_path, capsys):
    inst, dec = tmp_path / "z.inst", tmp_path / "z.dec"
    run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--seed", "7", "--out", inst)
    run("decompose", inst, "--out", dec)
    lines = dec.read_text().splitlines()
    toks = lines[1].split()
    toks[0], toks[1] = toks[1], toks[0]
    lines[1] = " ".join(toks)
    dec.write_text("\n".join(lines) + "\n")
    capsys.readouterr()
    assert run("verify", inst, dec) == 1
    assert "FAIL" in capsys.readouterr().out


def test_degenerate_route(tmp_path, capsys):
    inst = tmp_path / "d.inst"
    inst.write_text("group product 4 2\ng 1,0\nr 1,1\nmatching 0,0-0,1 1,0-1,1 2,0-2,1 3,0-3,1\n")
    assert run("decompose", inst, "--out", tmp_path / "d.dec") == 0
    assert "route k44" in capsys.readouterr().out
    assert run("verify", inst, tmp_path / "d.dec", "--m-centered") == 0
    assert "," in (tmp_path / "d.dec").read_text().splitlines()[1]


def test_power_instance(tmp_path, capsys):
    inst = tmp_path / "p.inst"
    inst.write_text("# zig-zag example\npower 10 3\nmatching 2-8 0-5 1-6 3-7 4-9\n")
    out = tmp_path / "p.dec"
    assert run("decompose", inst, "--out", out) == 0
    assert "4 1 3 2 8 9 7 0" in out.read_text().splitlines()
    assert run("verify", inst, out, "--m-centered") == 0


def test_power_and_complete_commands(tmp_path):
    p = tmp_path / "p.inst"
    assert run("power", "--n", "20", "--k", "4", "--seed", "3", "--out", p) == 0
    assert run("decompose", p, "--out", tmp_path / "p.dec") == 0
    assert run("verify", p, tmp_path / "p.dec", "--m-centered") == 0
    c = tmp_path / "k.dec"
    assert run("complete", "7", "--out", c) == 0
    assert c.read_text().splitlines()[0] == "paths 4 length 7"
    assert run("complete", "4") == 2


def test_oracle_command(tmp_path, capsys):
    inst = tmp_path / "z.inst"
    run("gen", "--group", "cyclic:8", "--g", "1", "--r", "3", "--seed", "1", "--out", inst)
    assert run("oracle", inst, "--out", tmp_path / "o.dec") == 0
    assert "status found" in capsys.readouterr().out
    assert run("verify", inst, tmp_path / "o.dec") == 0
    assert run("oracle", inst, "--budget", "1") == 1
    assert "status budget" in capsys.readouterr().err


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.inst"
    bad.write_text("group cyclic 12\ng 1\nr 3\nmatching 0-3 1-7 2-8 4-10 5-11 6-9\n")
    assert run("decompose", bad) == 2
    bad.write_text("group cyclic 12\ng 1\n")
    assert run("decompose", bad) == 2
    assert run("decompose", tmp_path / "missing.inst") == 2
    good = tmp_path / "g.inst"
    run("gen", "--group", "cyclic:12", "--g", "1", "--r", "3", "--out", good)
    d = tmp_path / "x.dec"
    d.write_text("paths 2 length 5\n0 1 2 3 4 5\n")
    assert run("verify", good, d) == 2


def test_batch_mode(tmp_path):
    srcs = []
    for s in range(3):
        f = tmp_path / f"i{s}.inst"
        run("gen", "--group", "cyclic:16", "--g", "1", "--r", "3", "--seed", s, "--out", f)
        srcs.append(f)
    out = tmp_path / "out"
    assert run("decompose", *srcs, "--out-dir", out, "--trace-all", "--jobs", "2") == 0
    for s in range(3):
        assert (out / f"i{s}.dec").exists() and (out / f"i{s}.trace").exists()
        assert run("verify", srcs[s], out / f"i{s}.dec") == 0


def test_console_entry_point(tmp_path):
    r = subprocess.run(
        [sys.executable, "-m", "pathdecomp.cli", "complete", "3"], capture_output=True, text=True, check=True
    )
    assert r.stdout.splitlines()[0] == "paths 2 length 3"
