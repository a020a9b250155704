import json

import pytest

from deodhar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_cells_example(capsys):
    code, out = run(
        capsys, "cells", "--family", "A", "--rank", "2", "--word", "1,2,1", "--end", "e"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "mask=000 end=1,2,3 dim=3 affine=0 torus=3"
    assert lines[1] == "mask=101 end=1,2,3 dim=2 affine=1 torus=1"
    assert lines[2].startswith("point count:")


def test_cells_json(capsys):
    code, out = run(
        capsys,
        "cells", "--family", "A", "--rank", "2", "--word", "1,2,1", "--end", "e",
        "--json",
    )
    assert code == 0
    parsed = json.loads(out)
    assert [c["mask"] for c in parsed] == ["000", "101"]


def test_distinguished_example(capsys):
    code, out = run(capsys, "distinguished", "--word", "1,2,1", "--mask", "100")
    assert code == 0
    assert out.strip() == "false"
    code, out = run(capsys, "distinguished", "--word", "1,2,1", "--mask", "101")
    assert out.strip() == "true"


def test_phi_output(capsys):
    code, out = run(
        capsys, "phi", "--family", "B", "--rank", "3",
        "--word", "3,2,1,2,3,2,1,2,1", "--mask", "011001011",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[3] == "i=7 root=-1,0,0 free=true"


def test_order_command(capsys):
    code, out = run(
        capsys, "order", "--family", "B", "--rank", "3",
        "--word", "3,2,1,2,3,2,1,2,1",
        "--mask", "011001011", "--mask2", "010101101",
    )
    assert code == 0 and out.strip() == "true"


def test_hasse_to_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, _ = run(
        capsys, "hasse", "--family", "A", "--rank", "2", "--word", "1,2,1",
        "--dot", str(target),
    )
    assert code == 0
    text = target.read_text()
    assert text.startswith("digraph") and text.count("[label=") == 7


def test_count_csv(capsys):
    code, out = run(capsys, "count", "--q", "2")
    assert code == 0
    assert out.splitlines()[0] == "q,w,v,count"
    assert '2,"3,2,1","1,2,3",3' in out


def test_collect_roundtrip(tmp_path, capsys):
    payload = [
        {"root": [0, -1, 0], "coeff": [{"mono": {"x": 1}, "num": 1, "den": 1}]},
        {"root": [0, 0, -1], "coeff": [{"mono": {"y": 1}, "num": 1, "den": 1}]},
        {"root": [0, -1, 0], "coeff": [{"mono": {"x": 1}, "num": -1, "den": 1}]},
    ]
    source = tmp_path / "word.json"
    source.write_text(json.dumps(payload))
    code, out = run(capsys, "collect", "--input", str(source))
    assert code == 0
    collected = json.loads(out)
    assert [f["root"] for f in collected] == [[0, 0, -1], [0, -1, -1]]


def test_verify_closure(capsys):
    code, out = run(capsys, "verify", "closure", "--n", "3")
    assert code == 0
    assert out.strip().endswith("PASS")
    assert "[PASS] u_y support" in out


def test_verify_disjoint(capsys):
    code, out = run(capsys, "verify", "disjoint")
    assert code == 0
    assert "witness_index=7" in out
    code, out = run(capsys, "verify", "disjoint", "--n", "4")
    assert code == 0
    assert "PASS" in out


def test_verify_failure_exit_codes(capsys, monkeypatch):
    from deodhar import chevalley as chev
    from deodhar import cli as cli_mod

    def broken(n):
        raise chev.VerificationError("forced failure", report=None)

    monkeypatch.setattr(cli_mod.chevalley, "verify_closure_witness", broken)
    code, out = run(capsys, "verify", "closure", "--n", "3")
    assert code == 1 and "FAIL" in out

    monkeypatch.setattr(
        cli_mod.search, "disjointness_certificate", lambda a, b: None
    )
    code, out = run(capsys, "verify", "disjoint")
    assert code == 1 and "FAIL" in out


def test_parse_errors_report_positions(capsys):
    code = main(["distinguished", "--word", "1,2,1", "--mask", "1x0"])
    err = capsys.readouterr().err
    assert code == 2 and "position 2" in err
    code = main(["cells", "--family", "A", "--rank", "2", "--word", "1,a,1"])
    err = capsys.readouterr().err
    assert code == 2 and "position 2" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["cells"])  # missing --word
    assert err.value.code == 2


def test_invalid_word_exit_code(capsys):
    code = main(["cells", "--family", "B", "--rank", "3", "--word", "1,1"])
    assert code == 2


def test_deterministic_output(capsys):
    args = ["cells", "--family", "B", "--rank", "3", "--word", "3,2,1,2,3,2,1,2,1", "--json"]
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
