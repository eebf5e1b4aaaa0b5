import json

import pytest

from univfn import cli
from univfn.combinators import two_construction
from univfn.tables import FinTable

from conftest import random_table


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def table_file(tmp_path, T, name="g.json"):
    return write(tmp_path / name, {"dims": list(T.dims), "values": [str(v) for v in T.values]})


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,want",
    [(["pair", "3", "5"], "39"), (["rho", "0", "10"], "0"), (["unpair", "0"], "0 0"), (["unpair", "39"], "3 5")],
)
def test_scalar_commands(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


def test_big_scalar(capsys):
    a = 10**5000
    code, out, _ = run(capsys, "pair", str(a), "1")
    assert code == 0
    code, out, _ = run(capsys, "unpair", out.strip())
    assert out.split() == [str(a), "1"]


@pytest.mark.parametrize("argv", [["pair", "x", "1"], ["pair", "-1", "2"], ["rho", "1.5", "0"], ["unpair", "0x10"]])
def test_malformed_integers(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_synth_two_and_verify(tmp_path, capsys, rng):
    g = table_file(tmp_path, random_table(rng, (4, 4), 1000))
    w = str(tmp_path / "w.json")
    code, out, _ = run(capsys, "synth", "two", "--table", g, "--out", w)
    assert code == 0
    assert json.loads(out) == {"checked": 16, "mismatches": []}
    code, out, _ = run(capsys, "verify", "--table", g, "--witness", w)
    assert code == 0 and json.loads(out)["checked"] == 16


def test_tampered_bundle(tmp_path, capsys, rng):
    T = random_table(rng, (4, 4), 1000)
    g = table_file(tmp_path, T)
    w = tmp_path / "w.json"
    run(capsys, "synth", "two", "--table", g, "--out", str(w))
    bundle = json.loads(w.read_text())
    vals = bundle["witnesses"]["maps"]["row"]["values"]
    vals[2] = str(int(vals[2]) + 12)
    w.write_text(json.dumps(bundle))
    code, out, _ = run(capsys, "verify", "--table", g, "--witness", str(w))
    assert code == 1
    coords = [m["coords"] for m in json.loads(out)["mismatches"]]
    assert coords and all(c[0] == 2 for c in coords)


def test_wrong_dims(tmp_path, capsys, rng):
    g4 = table_file(tmp_path, random_table(rng, (4, 4), 10), "g4.json")
    g3 = table_file(tmp_path, random_table(rng, (3, 3), 10), "g3.json")
    w = str(tmp_path / "w.json")
    run(capsys, "synth", "two", "--table", g4, "--out", w)
    code, _, err = run(capsys, "verify", "--table", g3, "--witness", w)
    assert code == 2 and "dims" in err


def test_sigma_refusal(tmp_path, capsys, rng):
    g = table_file(tmp_path, random_table(rng, (2, 2, 2), 10))
    s = write(tmp_path / "s.json", {"n": 3, "family": [[0, 1]]})
    code, out, err = run(capsys, "synth", "sigma", "--table", g, "--sigma", s)
    assert code == 2
    assert json.loads(out) == {"verdict": "TriviallyFalse", "certificate": 2}
    assert "TriviallyFalse" in err


def test_additive_reports_carry_free(tmp_path, capsys, rng):
    g = table_file(tmp_path, random_table(rng, (4, 4), 100))
    code, out, _ = run(capsys, "synth", "additive", "--table", g)
    assert code == 0 and json.loads(out)["carry_free"] is True


@pytest.mark.parametrize(
    "kind,dims,extra",
    [
        ("two", (3, 3), []),
        ("single", (3, 3), []),
        ("dim3", (2, 2, 2), []),
        ("dimn", (2,) * 4, []),
        ("sigma", (2, 2, 2), ["sigma"]),
        ("s42", (2,) * 4, []),
        ("s32", (2, 2, 2), []),
        ("product", (3, 3), ["table2"]),
        ("additive", (3, 3), []),
    ],
)
def test_every_kind_round_trips(tmp_path, capsys, rng, kind, dims, extra):
    g = table_file(tmp_path, random_table(rng, dims, 30))
    args = ["synth", kind, "--table", g, "--out", str(tmp_path / "w.json")]
    vargs = ["verify", "--table", g, "--witness", str(tmp_path / "w.json")]
    if "sigma" in extra:
        args += ["--sigma", write(tmp_path / "s.json", {"n": 3, "family": [[0, 1], [1, 2]]})]
    if "table2" in extra:
        g2 = table_file(tmp_path, random_table(rng, dims, 30), "g2.json")
        args += ["--table2", g2]
        vargs += ["--table2", g2]
    code, out, err = run(capsys, *args)
    assert code == 0, err
    assert json.loads(out)["mismatches"] == []
    code, _, err = run(capsys, *vargs)
    assert code == 0, err


def test_missing_companion_files(tmp_path, capsys, rng):
    g = table_file(tmp_path, random_table(rng, (3, 3), 30))
    assert run(capsys, "synth", "sigma", "--table", g)[0] == 2
    assert run(capsys, "synth", "product", "--table", g)[0] == 2
    assert run(capsys, "synth", "two", "--table", str(tmp_path / "nope.json"))[0] == 2


@pytest.mark.parametrize(
    "payload",
    [
        {"dims": [2, 2], "values": ["1", "2", "3"]},
        {"dims": [2], "values": ["1", "-2"]},
        {"dims": [2], "values": [1.5, 2]},
        {"dims": [2], "values": ["1", " 2"]},
        {"values": ["1"]},
    ],
)
def test_bad_table_files(tmp_path, capsys, payload):
    g = write(tmp_path / "g.json", payload)
    code, _, err = run(capsys, "synth", "two", "--table", g)
    assert code == 2 and err


def test_internal_failure_exit_code(tmp_path, capsys, rng, monkeypatch):
    T = random_table(rng, (3, 3), 30)
    g = table_file(tmp_path, T)
    other = two_construction(FinTable(T.dims, [v + 1 for v in T.values]))
    monkeypatch.setattr(cli, "build", lambda *a, **k: (other, T))
    code, _, err = run(capsys, "synth", "two", "--table", g)
    assert code == 3 and "failed verification" in err


@pytest.mark.parametrize(
    "family,n,want",
    [
        ([[0, 1], [1, 2], [0, 2]], 3, {"verdict": "EquivalentTo", "m": 2}),
        ([[0, 1], [1, 2], [2, 3], [3, 0]], 4, {"verdict": "EquivalentTo", "m": 1}),
        ([[0]], 2, {"verdict": "TriviallyFalse"}),
    ],
)
def test_classify(tmp_path, capsys, family, n, want):
    s = write(tmp_path / "s.json", {"n": n, "family": family})
    code, out, _ = run(capsys, "classify", "--sigma", s)
    got = json.loads(out)
    assert code == 0
    assert {k: got[k] for k in want} == want and "certificate" in got


def test_classify_malformed(tmp_path, capsys):
    s = tmp_path / "s.json"
    s.write_text("{not json")
    assert run(capsys, "classify", "--sigma", str(s))[0] == 2
    s.write_text('{"n": 2, "family": [[5]]}')
    assert run(capsys, "classify", "--sigma", str(s))[0] == 2


def test_byte_stable(tmp_path, capsys, rng):
    g = table_file(tmp_path, random_table(rng, (4, 4), 10**30))
    outs = []
    for i in range(2):
        w = tmp_path / f"w{i}.json"
        _, out, _ = run(capsys, "synth", "single", "--table", g, "--out", str(w))
        outs.append((out, w.read_bytes()))
    assert outs[0] == outs[1]
