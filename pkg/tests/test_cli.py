from __future__ import annotations

import json

import pytest

from dgqs.cli import EXIT_IO, EXIT_OK, EXIT_PARTIAL, main
from dgqs.graph import cycle_graph, rooted_product, to_graph6
from dgqs.store import ReportStore, record_key


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_jsonl_with_bad_line(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text("A_\nE@Vg\nB!\n", encoding="utf-8")
    code, out, err = run(capsys, "certify", "--in", str(src), "--format", "jsonl")
    assert code == EXIT_PARTIAL
    lines = [json.loads(x) for x in out.splitlines()]
    assert "manifest" in lines[0]
    assert [r.get("verdict") for r in lines[1:]] == ["not-certified", "certified-DGQS", None]
    assert "error" in lines[3] and "offset" in err


def test_certify_inline_and_variant(capsys):
    code, out, _ = run(capsys, "certify", "--g", "A_", "--exponent-variant", "intro", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    (cert,) = doc["results"]
    assert cert["det_WQ"] == "0" and cert["verdict"] == "not-certified"
    assert cert["exponent_variant"] == "intro"
    assert doc["manifest"]["params"]["exponent_variant"] == "intro"


def test_certify_errors(capsys, tmp_path):
    assert run(capsys, "certify")[0] == EXIT_IO
    assert run(capsys, "certify", "--in", str(tmp_path / "missing.g6"))[0] == EXIT_IO


def test_rooted_product(capsys):
    code, out, _ = run(capsys, "rooted-product", "--g", "Bw", "--k", "2")
    assert code == EXIT_OK
    assert out.strip() == to_graph6(rooted_product(cycle_graph(3), 2))
    code, out, _ = run(capsys, "rooted-product", "--g", "@", "--k", "2", "--t", "40")
    assert code == EXIT_IO


def test_find_seeds_and_survey(capsys):
    code, out, _ = run(capsys, "find-seeds", "--n", "4")
    assert code == EXIT_OK and "exhaustive" in out
    code, out, _ = run(capsys, "survey", "--n", "2", "--format", "json")
    assert json.loads(out)["results"][0]["valuation_histogram"] == {"inf": 2}


def test_mates(capsys, tmp_path):
    code, out, _ = run(capsys, "mates", "--g", "Cs")
    assert code == EXIT_OK and "CJ" in out and "not-DGQS" in out
    cat = tmp_path / "four.g6"
    cat.write_text("Cs\nCJ\nCF\n", encoding="utf-8")
    code, out, _ = run(capsys, "mates", "--g", "Cs", "--catalog", str(cat))
    assert "CJ" in out and "graph6 file" in out


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--g", "E@Vg", "--k", "2", "--format", "json")
    assert code == EXIT_OK
    verdicts = {r["theorem"]: r["verdict"] for r in json.loads(out)["results"]}
    assert verdicts["det-formula"] == "holds"
    assert verdicts["tower-det"] == "precondition-not-met"


def test_store_is_idempotent(tmp_path, capsys):
    store = tmp_path / "out.jsonl"
    for _ in range(2):
        assert run(capsys, "certify", "--g", "E@Vg", "--g", "A_", "--store", str(store))[0] == EXIT_OK
        if _ == 0:
            first = store.read_bytes()
    assert store.read_bytes() == first
    assert len(ReportStore(store)) == 2


def test_store_replaces_by_key(tmp_path):
    s = ReportStore(tmp_path / "s.jsonl")
    key = record_key("CF", "mates", {})
    s.put(key, {"v": 1}, "m1")
    s.put(key, {"v": 2}, "m2")
    s.save()
    again = ReportStore(tmp_path / "s.jsonl")
    assert len(again) == 1 and again.get(key)["value"] == {"v": 2}


def test_out_writes_manifest(tmp_path, capsys):
    out = tmp_path / "r.json"
    run(capsys, "certify", "--g", "A_", "--format", "json", "--out", str(out))
    assert json.loads(out.read_text())["results"][0]["graph"] == "A_"
    assert json.loads((tmp_path / "r.json.manifest.json").read_text())["subcommand"] == "certify"


@pytest.mark.slow
def test_verify_paper_quick_is_reproducible(tmp_path, capsys):
    store = tmp_path / "bundle.jsonl"
    outs = []
    for i in range(2):
        out = tmp_path / f"bundle{i}.json"
        code, _, err = run(capsys, "verify-paper", "--quick", "--format", "json", "--out", str(out), "--store", str(store))
        assert code == EXIT_OK, err
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert len(ReportStore(store)) == 8
