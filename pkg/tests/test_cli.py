import json

import pytest

from tmconn import graph6
from tmconn.cli import build_parser, main
from tmconn.graph import complete_multipartite, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tmc_examples(capsys):
    assert run(capsys, "tmc", "--graph6", "A_")[:2] == (0, "3\n")
    assert run(capsys, "tmc", "--graph6", graph6.encode(path_graph(4)))[:2] == (0, "3\n")
    assert run(capsys, "tmc", "--graph6", graph6.encode(complete_multipartite([2, 2, 1])))[:2] == (0, "9\n")


def test_tmc_batch_formats(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_text("A_\nBw\nCF\n")
    code, out, _ = run(capsys, "tmc", "--in", str(src), "--format", "csv", "--jobs", "1")
    assert code == 0
    assert out.splitlines() == ["graph6,n,m,tmc,waste", "A_,2,1,3,0", "Bw,3,3,6,0", "CF,4,3,4,3"]
    code, par, _ = run(capsys, "tmc", "--in", str(src), "--format", "csv", "--jobs", "2")
    assert par == out
    code, out, _ = run(capsys, "tmc", "--in", str(src), "--format", "structured")
    assert json.loads(out.splitlines()[2])["tmc"] == 4


def test_tmc_input_errors(capsys):
    assert run(capsys, "tmc", "--graph6", "A?")[0] == 2  # disconnected
    code, _, err = run(capsys, "tmc", "--graph6", "A\x01")
    assert code == 2 and "malformed" in err
    assert run(capsys, "tmc", "--graph6", graph6.encode(path_graph(9)))[0] == 2


def test_witness_feeds_verify_coloring(tmp_path, capsys):
    g6 = graph6.encode(complete_multipartite([2, 2, 1]))
    wit = tmp_path / "w.json"
    assert run(capsys, "tmc", "--graph6", g6, "--witness", str(wit))[0] == 0
    code, out, _ = run(capsys, "verify-coloring", "--coloring", str(wit))
    assert (code, out) == (0, "valid, 9 colors\n")
    code, out, _ = run(capsys, "verify-coloring", "--graph6", g6, "--coloring", str(wit))
    assert code == 0


def test_star_coloring_valid(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({
        "n": 5, "edges": [[0, 1], [0, 2], [0, 3], [0, 4]],
        "edge_colors": [0, 0, 0, 0], "vertex_colors": [0, 1, 2, 3, 4],
    }))
    assert run(capsys, "verify-coloring", "--coloring", str(path))[:2] == (0, "valid, 5 colors\n")


def test_all_distinct_path_invalid(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]], "edge_colors": [0, 1], "vertex_colors": [2, 3, 4]}))
    code, out, _ = run(capsys, "verify-coloring", "--coloring", str(path))
    assert code == 1
    assert out == "invalid, no total monochromatic path between 0 and 2, 5 colors\n"


def test_verify_coloring_schema_errors(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 3}')
    assert run(capsys, "verify-coloring", "--coloring", str(path))[0] == 2
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]], "edge_colors": [0, 0], "vertex_colors": [1, 0, 2]}))
    assert run(capsys, "verify-coloring", "--graph6", "Bw", "--coloring", str(path))[0] == 2
    assert run(capsys, "verify-coloring", "--coloring", str(tmp_path / "missing"))[0] == 2


def test_families_gen(capsys):
    code, out, _ = run(capsys, "families", "gen", "--family", "gts", "--n", "6", "--t", "3", "--s", "0")
    g6, meta = out.splitlines()
    assert code == 0 and graph6.decode(g6).m == 8 and json.loads(meta)["predicted_tmc"] == 7
    code, out, _ = run(capsys, "families", "gen", "--family", "multipartite", "--parts", "2,2,1", "--format", "structured")
    assert json.loads(out)["predicted_tmc"] == 9
    assert run(capsys, "families", "gen", "--family", "gnt", "--n", "6", "--p", "4")[0] == 2
    assert run(capsys, "families", "gen", "--family", "gts", "--n", "6")[0] == 2
    assert run(capsys, "families", "gen", "--family", "multipartite", "--parts", "2,x")[0] == 2


def test_formulas(capsys):
    assert run(capsys, "formulas", "f", "--n", "8", "--k", "30")[:2] == (0, "26 (case 4, r=2)\n")
    assert run(capsys, "formulas", "g", "--n", "6", "--k", "5")[1] == "undefined (undefined)\n"
    assert run(capsys, "formulas", "f", "--n", "8", "--k", "99")[0] == 2
    code, out, _ = run(capsys, "formulas", "table", "f", "--n", "3")
    assert out == "n,k,value,case,t,s,r\n3,3,2,case 1,,,\n3,4,3,case 4,,,0\n3,5,3,case 4,,,0\n3,6,3,case 4,,,0\n"
    assert run(capsys, "formulas", "table", "f", "--n", "3")[1] == out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T3", "--n", "5", "--jobs", "1")
    assert code == 0 and out.startswith("T3 n=5: PASS")
    code, out, _ = run(capsys, "verify", "--theorem", "T4", "--n", "4", "--format", "csv", "--jobs", "1")
    assert code == 0 and out.splitlines()[0].startswith("theorem,n,")
    assert run(capsys, "verify", "--theorem", "T3", "--n", "8", "--jobs", "1")[0] == 2


def test_verify_uses_cache_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TMCONN_CACHE_DIR", str(tmp_path))
    assert run(capsys, "verify", "--theorem", "T2", "--n", "4", "--jobs", "1")[0] == 0
    assert (tmp_path / "census-n4-v1.jsonl").exists()


@pytest.mark.parametrize("argv", [["tmc"], ["verify-coloring"], ["families", "gen"], ["formulas", "f"], ["formulas", "g"], ["formulas", "table"], ["verify"]])
def test_help_texts(capsys, argv):
    assert main([*argv, "--help"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("usage:")


def test_help_names_results():
    text = build_parser().format_help()
    for word in ("Theorem 3", "Theorem 4", "Theorems 2-4", "tmc"):
        assert word in text


def test_usage_error_exit_code(capsys):
    assert main([]) == 2
    assert main(["tmc", "--mode", "bogus"]) == 2
