"""Edge-list parsing, document round trips, and the command line."""

import json

import pytest

from cleanfactor import (
    DocumentFormatError,
    EdgeListParseError,
    Graph,
    InvalidArgumentError,
    OperatorKind,
    build_document,
    cli_main,
    document_to_multipartite,
    format_edge_list,
    graph_content_hash,
    parse_document,
    read_edge_list,
    reconstruct_graph,
    run_series,
    to_dot,
    to_json,
    write_decomposition,
)

from conftest import make_g2, make_g3

G2_TEXT = "a b\na c\nb c\nb d\nc d\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def decomposition_text(g, op=OperatorKind.CLEAN):
    return write_decomposition(run_series(g, op), graph_content_hash(g))


def test_read_edge_list_triangle(tmp_path):
    path = write(tmp_path, "t.txt", "a b\nb c\na c\n")
    assert read_edge_list(path) == Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def test_read_edge_list_comments_and_duplicates(tmp_path):
    path = write(tmp_path, "d.txt", "# comment\n\na b\na b\nb a\n")
    g = read_edge_list(path)
    assert g.edges() == (("a", "b"),)


def test_read_edge_list_isolated_vertex(tmp_path):
    path = write(tmp_path, "i.txt", "a b\nz\n")
    g = read_edge_list(path)
    assert "z" in g and g.degree("z") == 0


def test_read_edge_list_errors(tmp_path):
    with pytest.raises(InvalidArgumentError):
        read_edge_list(write(tmp_path, "loop.txt", "a a\n"))
    with pytest.raises(EdgeListParseError) as err:
        read_edge_list(write(tmp_path, "bad.txt", "a b\nx y z\n"))
    assert err.value.line == 2
    with pytest.raises(InvalidArgumentError):
        read_edge_list(write(tmp_path, "empty.txt", "# nothing\n"))


def test_format_edge_list_round_trips(tmp_path):
    g = Graph(["a", "b", "z"], [("a", "b")])
    path = write(tmp_path, "r.txt", format_edge_list(g))
    assert read_edge_list(path) == g


def test_document_shape_triangle(triangle):
    doc = build_document(run_series(triangle, OperatorKind.CLEAN), graph_content_hash(triangle))
    assert len(doc.levels) == 2
    assert sum(len(level.vertices) for level in doc.levels) == 4
    assert len(doc.edges) == 3
    assert doc.status == "terminated" and doc.operator == "clean"


def test_document_shape_g2():
    g = make_g2()
    doc = build_document(run_series(g, OperatorKind.CLEAN), graph_content_hash(g))
    assert len(doc.levels) == 3
    assert sum(len(level.vertices) for level in doc.levels) == 7
    (record,) = doc.levels[2].vertices
    assert record.sequence == (("b", "c"),)


def test_serialization_is_byte_deterministic():
    g = make_g3()
    assert decomposition_text(g) == decomposition_text(g)


def test_reserializing_a_parsed_document_is_byte_identical():
    text = decomposition_text(make_g2())
    assert to_json(parse_document(text)) == text


def test_json_keys_are_sorted():
    payload = json.loads(decomposition_text(make_g2()))
    assert list(payload) == sorted(payload)


def test_reconstruct_graph_fixed_instances(triangle):
    for g in (triangle, make_g2(), make_g3()):
        doc = parse_document(decomposition_text(g))
        assert reconstruct_graph(doc) == g


def test_document_to_multipartite_round_trip():
    g = make_g3()
    result = run_series(g, OperatorKind.CLEAN)
    doc = parse_document(decomposition_text(g))
    assert document_to_multipartite(doc) == result.final


def test_parse_document_rejects_malformed_input():
    with pytest.raises(DocumentFormatError):
        parse_document("not json")
    with pytest.raises(DocumentFormatError):
        parse_document("{}")
    good = json.loads(decomposition_text(make_g2()))
    bad = dict(good, format_version=99)
    with pytest.raises(DocumentFormatError):
        parse_document(json.dumps(bad))
    bad = dict(good, edges=good["edges"] + [["ghost", "a"]])
    with pytest.raises(DocumentFormatError):
        parse_document(json.dumps(bad))


def test_to_dot_mentions_every_vertex():
    g = make_g2()
    m = run_series(g, OperatorKind.CLEAN).final
    dot = to_dot(m)
    for v in m.vertices:
        assert f'"{v}"' in dot
    assert dot.count("--") == m.edge_count()


def test_cli_decompose_and_verify_round_trip(tmp_path, capsys):
    graph_path = write(tmp_path, "g2.txt", G2_TEXT)
    out_path = str(tmp_path / "d.json")
    assert cli_main(["decompose", "--operator", "clean", "--input", graph_path, "--output", out_path]) == 0
    assert "status=terminated" in capsys.readouterr().out
    assert cli_main(["verify", "--decomposition", out_path, "--input", graph_path]) == 0
    out = capsys.readouterr().out
    assert out.count(": ok") == 4


def test_cli_verify_rejects_tampered_document(tmp_path, capsys):
    graph_path = write(tmp_path, "g2.txt", G2_TEXT)
    out_path = str(tmp_path / "d.json")
    cli_main(["decompose", "--operator", "clean", "--input", graph_path, "--output", out_path])
    payload = json.loads((tmp_path / "d.json").read_text())
    payload["edges"] = payload["edges"][1:]  # drop one edge
    (tmp_path / "d.json").write_text(json.dumps(payload))
    capsys.readouterr()
    assert cli_main(["verify", "--decomposition", out_path, "--input", graph_path]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_verify_rejects_mismatched_input(tmp_path, capsys):
    g2_path = write(tmp_path, "g2.txt", G2_TEXT)
    tri_path = write(tmp_path, "tri.txt", "a b\nb c\na c\n")
    out_path = str(tmp_path / "d.json")
    cli_main(["decompose", "--operator", "clean", "--input", g2_path, "--output", out_path])
    capsys.readouterr()
    assert cli_main(["verify", "--decomposition", out_path, "--input", tri_path]) == 1
    assert "source-hash: FAIL" in capsys.readouterr().out


def test_cli_budget_exhaustion_is_a_normal_outcome(tmp_path, capsys):
    graph_path = write(
        tmp_path,
        "w.txt",
        "v0 v1\nv0 v2\nv0 v4\nv1 v3\nv1 v4\nv2 v3\nv2 v4\nv3 v4\n",
    )
    out_path = str(tmp_path / "w.json")
    code = cli_main(
        ["decompose", "--operator", "weak", "--max-levels", "5", "--input", graph_path, "--output", out_path]
    )
    assert code == 0
    assert "status=budget-exceeded" in capsys.readouterr().out


def test_cli_threads_do_not_change_output_bytes(tmp_path):
    graph_path = write(tmp_path, "g3.txt", format_edge_list(make_g3()))
    one = tmp_path / "one.json"
    two = tmp_path / "two.json"
    cli_main(["decompose", "--operator", "clean", "--input", graph_path, "--output", str(one)])
    cli_main(["decompose", "--operator", "clean", "--input", graph_path, "--output", str(two), "--threads", "4"])
    assert one.read_bytes() == two.read_bytes()


def test_cli_dot_export(tmp_path):
    graph_path = write(tmp_path, "g2.txt", G2_TEXT)
    out_path = str(tmp_path / "d.json")
    dot_path = tmp_path / "d.dot"
    cli_main(
        ["decompose", "--operator", "clean", "--input", graph_path, "--output", out_path, "--dot", str(dot_path)]
    )
    assert dot_path.read_text().startswith("graph decomposition {")


def test_cli_cliques_and_oracle(tmp_path, capsys):
    graph_path = write(tmp_path, "g3.txt", format_edge_list(make_g3()))
    assert cli_main(["cliques", "--input", graph_path]) == 0
    assert capsys.readouterr().out == "1 2 3 4\n1 2 3 5\n1 2 6\n"
    assert cli_main(["oracle", "--input", graph_path, "--chains", "2"]) == 0
    assert capsys.readouterr().out == "1,2\n1,2,3\n1,2 < 1,2,3\n"


def test_cli_gen_reconstruct_and_exit_codes(tmp_path, capsys):
    assert cli_main(["gen", "anti-matching", "3"]) == 0
    gen_out = capsys.readouterr().out
    assert "b1 u2" in gen_out and gen_out.startswith("#")

    graph_path = write(tmp_path, "g2.txt", G2_TEXT)
    out_path = str(tmp_path / "d.json")
    cli_main(["decompose", "--operator", "clean", "--input", graph_path, "--output", out_path])
    capsys.readouterr()
    assert cli_main(["reconstruct", "--decomposition", out_path]) == 0
    assert capsys.readouterr().out == G2_TEXT

    assert cli_main(["decompose", "--operator", "bogus", "--input", "x", "--output", "y"]) == 2
    assert cli_main(["nonsense"]) == 2
    assert cli_main(["cliques", "--input", str(tmp_path / "missing.txt")]) == 2
    assert cli_main(["gen", "anti-matching", "1"]) == 2
    bad_doc = write(tmp_path, "bad.json", "{}")
    assert cli_main(["reconstruct", "--decomposition", bad_doc]) == 2
    loop = write(tmp_path, "loop.txt", "a a\n")
    assert cli_main(["cliques", "--input", loop]) == 2
