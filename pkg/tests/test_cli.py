import json

from magiccover import cycle, label_flower
from magiccover.cli import run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_construct_emits_graph_json(capsys, tmp_path):
    code, data = run_json(capsys, ["construct", "--family", "flower:n=5"])
    assert code == 0
    assert sorted(data) == ["edges", "vertices"]
    assert len(data["vertices"]) == 11 and len(data["edges"]) == 20

    out = tmp_path / "g.json"
    assert run(["construct", "--family", "cycle:n=3", "--out", str(out)]) == 0
    saved = json.loads(out.read_text())
    assert saved["vertices"] == ["c1", "c2", "c3"]


def test_label_emits_graph_and_labels(capsys):
    code, data = run_json(capsys, ["label", "--family", "flower:n=5"])
    assert code == 0
    assert data["labels"]["x0"] == 6
    assert len(data["labels"]) == 31
    assert sorted(data["graph"]) == ["edges", "vertices"]


def test_verify_certifies_and_fails_honestly(capsys, tmp_path):
    gfile = tmp_path / "g.json"
    lfile = tmp_path / "l.json"
    f = label_flower(5)
    gfile.write_text(json.dumps(f.graph.to_json_dict()))
    lfile.write_text(json.dumps(f.to_json_dict()))

    code, report = run_json(
        capsys,
        ["verify", "--graph", str(gfile), "--pattern", "cycle:n=3",
         "--labeling", str(lfile)],
    )
    assert code == 0
    assert report["magic_sum"] == 87

    # corrupt: swap two labels so a triangle sum breaks
    labels = dict(f.to_json_dict()["labels"])
    labels["x1"], labels["x2"] = labels["x2"], labels["x1"]
    lfile.write_text(json.dumps({"labels": labels}))
    code, report = run_json(
        capsys,
        ["verify", "--graph", str(gfile), "--pattern", "cycle:n=3",
         "--labeling", str(lfile)],
    )
    assert code == 1
    assert report["failure"]["kind"] == "sum_mismatch"


def test_verify_text_output(capsys, tmp_path):
    gfile = tmp_path / "g.json"
    lfile = tmp_path / "l.json"
    f = label_flower(5)
    gfile.write_text(json.dumps(f.graph.to_json_dict()))
    lfile.write_text(json.dumps(f.to_json_dict()))
    code = run(
        ["verify", "--graph", str(gfile), "--pattern", "cycle:n=3",
         "--labeling", str(lfile), "--text"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "certified: magic sum 87 over 10 copies" in out


def test_search_solution_and_count(capsys, tmp_path):
    gfile = tmp_path / "p4.json"
    hfile = tmp_path / "p3.json"
    gfile.write_text(json.dumps({"vertices": ["a", "b", "c", "d"],
                                 "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}))
    hfile.write_text(json.dumps({"vertices": ["u", "v", "w"],
                                 "edges": [["u", "v"], ["v", "w"]]}))

    code, data = run_json(
        capsys, ["search", "--graph", str(gfile), "--pattern", str(hfile)]
    )
    assert code == 0 and data["outcome"] == "solution"
    assert len(data["labels"]) == 7

    code, data = run_json(
        capsys,
        ["search", "--graph", str(gfile), "--pattern", str(hfile), "--count"],
    )
    assert code == 0 and data == {"outcome": "count", "count": 32, "nodes": data["nodes"]}

    code, data = run_json(
        capsys,
        ["search", "--graph", str(gfile), "--pattern", str(hfile),
         "--target", "999"],
    )
    assert code == 1 and data["outcome"] == "no_solution"

    code, data = run_json(
        capsys,
        ["search", "--graph", str(gfile), "--pattern", str(hfile),
         "--node-limit", "3"],
    )
    assert code == 1 and data["outcome"] == "exhausted"


def test_export_dot_and_json(capsys, tmp_path):
    gfile = tmp_path / "g.json"
    lfile = tmp_path / "l.json"
    g = cycle(3)
    gfile.write_text(json.dumps(g.to_json_dict()))
    lfile.write_text(json.dumps(
        {"labels": {"c1": 1, "c2": 2, "c3": 3, "c1|c2": 4, "c2|c3": 5, "c1|c3": 6}}
    ))
    code = run(["export", "--graph", str(gfile), "--labeling", str(lfile),
                "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("graph G {") and out.rstrip().endswith("}")
    assert '"c1" [label="c1 [1]"];' in out
    assert '"c1" -- "c2" [label="4"];' in out

    code, data = run_json(
        capsys, ["export", "--graph", str(gfile), "--format", "json"]
    )
    assert code == 0 and data["graph"]["vertices"] == ["c1", "c2", "c3"]


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(["construct", "--family", "nosuch:n=1"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err

    assert run(["verify", "--graph", "/nonexistent.json",
                "--pattern", "cycle:n=3", "--labeling", "/nonexistent.json"]) == 2

    gfile = tmp_path / "bad.json"
    gfile.write_text("{not json")
    assert run(["construct", "--family", "flower:n=x"]) == 2


def test_json_error_reporting(capsys):
    code = run(["search", "--graph", "/nope.json", "--pattern", "cycle:n=3",
                "--json"])
    assert code == 2


def test_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("MAGICCOVER_THREADS", "4")
    code, _ = run_json(capsys, ["construct", "--family", "cycle:n=3"])
    assert code == 0
    monkeypatch.setenv("MAGICCOVER_THREADS", "zero")
    assert run(["construct", "--family", "cycle:n=3"]) == 2


def test_combined_graph_file_accepted(capsys, tmp_path):
    # files produced by `label` (graph + labels together) feed straight into verify
    f = label_flower(5)
    combined = tmp_path / "combined.json"
    combined.write_text(json.dumps(
        {"graph": f.graph.to_json_dict(), **f.to_json_dict()}
    ))
    code, report = run_json(
        capsys,
        ["verify", "--graph", str(combined), "--pattern", "cycle:n=3",
         "--labeling", str(combined)],
    )
    assert code == 0 and report["magic_sum"] == 87
