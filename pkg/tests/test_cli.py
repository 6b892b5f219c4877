import json
import random

import pytest

from mdcolor.cli import run
from mdcolor.constructions import random_connected
from mdcolor.graph import complement, complete_graph, complete_multipartite, cycle_graph
from mdcolor.io import format_edge_list, read_graph, to_graph6


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_construct_cycle(tmp_path, capsys):
    code, out, _ = invoke(capsys, "construct", "cycle", 5, "--out-dir", tmp_path)
    assert code == 0
    data = json.loads(out)
    assert data["palette"] == 2 and data["method"] == "construction"
    assert read_graph(data["graph"]) == cycle_graph(5)
    colors = (tmp_path / "cycle_5.col").read_text().split()
    # residue construction: odd positions share a class of three edges
    assert colors == ["1", "2", "1", "2", "1"]
    assert sorted(colors.count(c) for c in set(colors)) == [2, 3]


def test_verify_alternating_c4(tmp_path, capsys):
    g = write(tmp_path, "c4.txt", format_edge_list(cycle_graph(4)))
    c = write(tmp_path, "alt.txt", "1 2 1 2\n")
    code, out, _ = invoke(capsys, "verify", g, c)
    assert code == 0
    assert json.loads(out) == {"is_md": True, "uncovered_pairs": []}


def test_verify_reports_uncovered(tmp_path, capsys):
    g = write(tmp_path, "c4.txt", format_edge_list(cycle_graph(4)))
    c = write(tmp_path, "bad.txt", "1 1 2 2\n")
    code, out, _ = invoke(capsys, "verify", g, c)
    data = json.loads(out)
    assert code == 0 and data["is_md"] is False and data["uncovered_pairs"]


def test_md_k23(tmp_path, capsys):
    g = write(tmp_path, "k23.txt", format_edge_list(complete_multipartite([2, 3])))
    code, out, _ = invoke(capsys, "md", g)
    assert code == 0 and json.loads(out)["md"] == 1


def test_graph6_input(tmp_path, capsys):
    g = write(tmp_path, "c6.g6", to_graph6(cycle_graph(6)) + "\n")
    code, out, _ = invoke(capsys, "md", g)
    assert code == 0 and json.loads(out)["md"] == 3


@pytest.mark.parametrize("family, params", [
    ("cycle", [7]), ("path", [5]), ("tree", [8]), ("star", [6]), ("unicyclic", [9]),
    ("complete", [5]), ("complete_minus", [5]), ("complete_multipartite", [2, 2, 2]),
    ("broom", [6]), ("ng_lower", [8]), ("n6_lower", []), ("petersen", []),
])
def test_construct_then_verify(tmp_path, capsys, family, params):
    code, out, _ = invoke(capsys, "construct", family, *params, "--out-dir", tmp_path, "--seed", 4)
    assert code == 0
    data = json.loads(out)
    code, out, _ = invoke(capsys, "verify", data["graph"], data["coloring"])
    assert code == 0 and json.loads(out)["is_md"] is True


def test_construct_from_graph_files(tmp_path, capsys):
    h = write(tmp_path, "h.txt", format_edge_list(cycle_graph(4)))
    for argv in (["join", h, h], ["square", h], ["line_graph", h]):
        code, out, _ = invoke(capsys, "construct", *argv, "--out-dir", tmp_path)
        assert code == 0
        data = json.loads(out)
        code, out, _ = invoke(capsys, "verify", data["graph"], data["coloring"])
        assert json.loads(out)["is_md"] is True


def test_md_agrees_with_oracle(tmp_path, capsys):
    rng = random.Random(17)
    for i in range(15):
        n = rng.randint(3, 6)
        G = random_connected(n, rng.randint(n - 1, min(12, n * (n - 1) // 2)), rng)
        g = write(tmp_path, f"g{i}.txt", format_edge_list(G))
        _, a, _ = invoke(capsys, "md", g)
        _, b, _ = invoke(capsys, "oracle", g)
        assert json.loads(a)["md"] == json.loads(b)["md"]


def test_decide_and_certify(tmp_path, capsys):
    g = write(tmp_path, "c5.txt", format_edge_list(cycle_graph(5)))
    _, out, _ = invoke(capsys, "decide", g, "-k", 2)
    assert json.loads(out)["found"] is True
    _, out, _ = invoke(capsys, "decide", g, "-k", 3)
    assert json.loads(out) == {"k": 3, "found": False, "witness": None}
    _, out, _ = invoke(capsys, "certify1", g, "--format", "plain")
    assert out.strip() == "none"
    k = write(tmp_path, "k23.txt", format_edge_list(complete_multipartite([2, 3])))
    _, out, _ = invoke(capsys, "certify1", k)
    assert json.loads(out)["certificate"]["gadgets"][0]["kind"] == "K23"


def test_generate_and_complement(tmp_path, capsys):
    out_path = tmp_path / "b.txt"
    assert invoke(capsys, "generate", "broom", 6, "-o", out_path)[0] == 0
    code, out, _ = invoke(capsys, "complement", out_path)
    assert code == 0
    comp = write(tmp_path, "co.txt", out)
    assert read_graph(comp) == complement(read_graph(out_path))


def test_ng_scan_search_random(tmp_path, capsys):
    b = write(tmp_path, "b.txt", format_edge_list(cycle_graph(5)))
    _, out, _ = invoke(capsys, "ng", b)
    assert json.loads(out)["sum"] == 4
    _, out, _ = invoke(capsys, "scan", "-n", 5, "--dedup")
    assert json.loads(out)["sum"] == {"lower": 4, "upper": 6}
    _, out, _ = invoke(capsys, "search", "-n", 7, "--target", "sum=2", "--budget", 100000, "--seed", 1)
    assert json.loads(out)["witness"]["sum"] == 2
    csv_path = tmp_path / "r.csv"
    _, out, _ = invoke(capsys, "random", "-n", 8, "-p", 0.5, "-t", 5, "--seed", 2, "--csv", csv_path)
    assert json.loads(out)["trials"] == 5
    assert len(csv_path.read_text().splitlines()) == 6


def test_plain_format(tmp_path, capsys):
    g = write(tmp_path, "c4.txt", format_edge_list(cycle_graph(4)))
    _, out, _ = invoke(capsys, "md", g, "--format", "plain")
    assert out.splitlines()[0] == "md: 2"


def test_output_is_deterministic(tmp_path, capsys):
    g = write(tmp_path, "c.txt", format_edge_list(random_connected(7, 12, random.Random(1))))
    first = invoke(capsys, "md", g, "--deterministic")[1]
    assert invoke(capsys, "md", g, "--deterministic")[1] == first


def test_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "good.txt", format_edge_list(cycle_graph(4)))
    disconnected = write(tmp_path, "dis.txt", "4 2\n0 1\n2 3\n")
    malformed = write(tmp_path, "bad.txt", "3 2\n0 1\n1 x\n")
    short = write(tmp_path, "short.txt", "3 3\n0 1\n1 2\n")
    loop = write(tmp_path, "loop.txt", "3 1\n1 1\n")
    wrong_len = write(tmp_path, "col.txt", "1 2\n")
    k6 = write(tmp_path, "k6.txt", format_edge_list(complete_graph(6)))
    matrix = [
        (["frobnicate"], 2),
        (["md"], 2),
        (["md", tmp_path / "missing.txt"], 2),
        (["md", malformed], 2),
        (["md", short], 2),
        (["decide", disconnected, "-k", "1"], 1),
        (["ng", disconnected], 1),
        (["md", loop], 1),
        (["decide", good, "-k", "0"], 1),
        (["verify", good, wrong_len], 1),
        (["ng", good], 1),
        (["scan", "-n", "9"], 1),
        (["search", "-n", "7", "--target", "bogus"], 1),
        (["random", "-n", "5", "-p", "2", "-t", "3"], 1),
        (["random", "-n", "5", "-p", "0.5", "-t", "0"], 1),
        (["construct", "nonsense", "--out-dir", tmp_path], 1),
        (["construct", "cycle", "two", "--out-dir", tmp_path], 1),
        (["oracle", k6], 1),
        (["md", good], 0),
    ]
    for argv, expected in matrix:
        code, _, err = invoke(capsys, *argv)
        assert code == expected, (argv, err)
    code, _, err = invoke(capsys, "md", malformed)
    assert "line 3" in err


def test_oracle_cap_flag(tmp_path, capsys):
    g = write(tmp_path, "c5.txt", format_edge_list(cycle_graph(5)))
    assert invoke(capsys, "oracle", g, "--oracle-cap", 4)[0] == 1
    assert invoke(capsys, "oracle", g, "--oracle-cap", 5)[0] == 0


def test_plain_empty_list(tmp_path, capsys):
    g = write(tmp_path, "c4.txt", format_edge_list(cycle_graph(4)))
    c = write(tmp_path, "alt.txt", "1 2 1 2\n")
    _, out, _ = invoke(capsys, "verify", g, c, "--format", "plain")
    assert out.splitlines() == ["is_md: true", "uncovered_pairs: []"]
