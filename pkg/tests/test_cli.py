import json

import pytest
from conftest import connected_graphs, net_graph
from hypothesis import given, settings

from histree.cli import main
from histree.dispatch import Limits, bench, dispatch_auto, run_method
from histree.generators import gen_A, gen_random
from histree.graph import Graph, parse_edge_list, serialize_edge_list, verify_hist
from histree.oracle import oracle_hist


def _write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(serialize_edge_list(g))
    return str(p)


# ---------------------------------------------------------------------------
# dispatch


def test_dispatch_examples():
    assert dispatch_auto(Graph.complete(3)).method == "trivial"
    v = dispatch_auto(gen_A([2, 5]))
    assert v.is_no and v.method == "diam2"


def test_large_split_graph_uses_split_branch():
    g = gen_random("split", 50, 0.5, 3)
    v = dispatch_auto(g)
    assert v.method in ("split", "blocksplit")
    if v.is_yes:
        assert verify_hist(g, v.witness)


@given(connected_graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_dispatch_matches_oracle(g):
    v = dispatch_auto(g)
    assert v.answer == oracle_hist(g).answer
    if v.is_yes:
        assert verify_hist(g, v.witness)


def test_unknown_method():
    with pytest.raises(ValueError):
        run_method(Graph.complete(4), "nope")


def test_small_limits_give_undecided():
    g = gen_random("any", 16, 0.3, 5)
    v = dispatch_auto(g, Limits(exact_max_n=8, quotient_max=8, cvd_budget=0))
    assert v.answer.value == "UNDECIDED" and v.method == "auto"


def test_bench_rows(tmp_path):
    _write(tmp_path, "a.txt", gen_A([3, 4]))
    (tmp_path / "broken.txt").write_text("3 1\n0 9\n")
    rows = bench(tmp_path, ["auto", "exact"])
    by_file = {(r["file"].split("/")[-1], r["method"]): r for r in rows}
    assert by_file[("a.txt", "auto")]["answer"] == "NO"
    assert by_file[("a.txt", "exact")]["answer"] == "NO"
    assert by_file[("broken.txt", None)]["answer"] == "ERROR"


def test_bench_empty_corpus(tmp_path, capsys):
    assert main(["bench", str(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "file,n,m,method,answer,seconds,error"


# ---------------------------------------------------------------------------
# exit codes


def test_decide_exit_codes(tmp_path, capsys):
    assert main(["decide", _write(tmp_path, "k4", Graph.complete(4))]) == 0
    assert main(["decide", _write(tmp_path, "k3", Graph.complete(3))]) == 1
    assert main(["decide", "--method", "exact", _write(tmp_path, "net", net_graph())]) == 1
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("YES")


def test_decide_json(tmp_path, capsys):
    assert main(["decide", "--json", _write(tmp_path, "a", gen_A([2, 5]))]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["answer"] == "NO"
    assert data["certificate"]["kind"] == "DiameterTwoFamily"


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad"
    bad.write_text("3 2\n0 1\n0 3\n")
    assert main(["decide", str(bad)]) == 3
    assert "VertexOutOfRange" in capsys.readouterr().err


def test_precondition_and_size_errors(tmp_path):
    cyc = _write(tmp_path, "c5", Graph.cycle(5))
    assert main(["decide", "--method", "split", cyc]) == 4
    big = _write(tmp_path, "k15", Graph.cycle(15))
    assert main(["decide", "--method", "exact", "--max-n", "10", big]) == 5


def test_construct_and_verify(tmp_path, capsys):
    gpath = _write(tmp_path, "k5", Graph.complete(5))
    wpath = tmp_path / "w.txt"
    assert main(["construct", gpath, "--witness-out", str(wpath)]) == 0
    assert main(["verify", gpath, str(wpath)]) == 0
    wpath.write_text("tree 4\n0 1\n1 2\n2 3\n3 4\n")
    assert main(["verify", gpath, str(wpath)]) == 1


def test_recognize(tmp_path, capsys):
    assert main(["recognize", "--json", "--modules", _write(tmp_path, "net", net_graph())]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["split"] and rep["block_split"] and rep["good_count"] == 0
    assert rep["dominating_clique"] == [0, 1, 2]


def test_generate_and_oracle(tmp_path, capsys):
    out = tmp_path / "b.txt"
    assert main(["generate", "--family", "B", "--n", "10", "-o", str(out)]) == 0
    g = parse_edge_list(out.read_text())
    assert (g.n, g.m) == (10, 16)
    assert main(["oracle", str(out)]) == 1
    assert main(["oracle", "--count", _write(tmp_path, "k4", Graph.complete(4))]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1] == "16"
    assert main(["oracle", "--hampath", "0", "3", _write(tmp_path, "p4", Graph.path(4))]) == 0
    assert main(["oracle", "--hisf", "1", _write(tmp_path, "k3", Graph.complete(3))]) == 1


def test_generate_hardness(tmp_path):
    base = _write(tmp_path, "ladder", Graph(6, [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]))
    out, meta = tmp_path / "h.txt", tmp_path / "h.json"
    args = ["generate", "--family", "hardness", "--input", base, "--s", "0", "--t", "5", "-o", str(out), "--meta", str(meta)]
    assert main(args) == 0
    assert json.loads(meta.read_text())["order"] == 16
    assert main(["generate", "--family", "hardness", "--input", _write(tmp_path, "k3", Graph.complete(3)), "--s", "0", "--t", "1"]) == 4


def test_kernelize(tmp_path):
    out, side = tmp_path / "k.txt", tmp_path / "k.json"
    assert main(["kernelize", _write(tmp_path, "k20", Graph.complete(20)), "-o", str(out), "--sidecar", str(side)]) == 0
    assert parse_edge_list(out.read_text()) == Graph.complete(2)
    assert json.loads(side.read_text())["S"] == []
