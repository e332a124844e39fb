import json
import subprocess
import sys

import pytest

from seraeval.cli import INDEX_ENV, main
from seraeval.pipeline import minicorpus_dir

MINI = minicorpus_dir()


def run(argv, capsys=None):
    code = main([str(a) for a in argv])
    out = capsys.readouterr() if capsys else None
    return code, out


def tsv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split("\t")
    return [dict(zip(header, line.split("\t"))) for line in lines[1:]]


@pytest.fixture(scope="module")
def index_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("ix") / "index"
    assert main(["index", "build", "--corpus", str(MINI / "corpus.jsonl"), "--out", str(out)]) == 0
    return out


@pytest.fixture
def gold_as_candidates(tmp_path):
    golds = [json.loads(line) for line in (MINI / "golds.jsonl").read_text().splitlines()]
    path = tmp_path / "cands.jsonl"
    path.write_text("".join(
        json.dumps({"topic_id": g["topic_id"], "system_id": "gold" + g["gold_id"], "text": g["text"]}) + "\n"
        for g in golds
    ))
    return path


class TestIndex:
    def test_manifest(self, index_dir, capsys):
        manifest = json.loads((index_dir / "manifest.json").read_text())
        assert manifest["doc_count"] == 50

    def test_prints_stats(self, tmp_path, capsys):
        code, out = run(["index", "build", "--corpus", MINI / "corpus.jsonl", "--out", tmp_path / "i"], capsys)
        assert code == 0
        assert "documents\t50" in out.out and "vocabulary\t" in out.out and "tokens\t" in out.out

    def test_empty_file(self, tmp_path, capsys):
        (tmp_path / "c.jsonl").write_text("")
        code, _ = run(["index", "build", "--corpus", tmp_path / "c.jsonl", "--out", tmp_path / "i"], capsys)
        assert code != 0

    def test_duplicate_id(self, tmp_path, capsys):
        (tmp_path / "c.jsonl").write_text('{"id": "dupe", "text": "gene"}\n{"id": "dupe", "text": "cell"}\n')
        code, out = run(["index", "build", "--corpus", tmp_path / "c.jsonl", "--out", tmp_path / "i"], capsys)
        assert code != 0 and "dupe" in out.err

    def test_malformed_line(self, tmp_path, capsys):
        (tmp_path / "c.jsonl").write_text('{"id": "a", "text": "gene"}\n\n{"id": \n')
        code, out = run(["index", "build", "--corpus", tmp_path / "c.jsonl", "--out", tmp_path / "i"], capsys)
        assert code != 0 and ":3:" in out.err


class TestScore:
    def test_sera_candidate_equals_gold(self, index_dir, tmp_path, capsys):
        # A candidate scored against the gold set that contains it is
        # compared with a second gold too, so pair each candidate with only
        # its own text.
        cands = tmp_path / "c.jsonl"
        golds = tmp_path / "g.jsonl"
        g = json.loads((MINI / "golds.jsonl").read_text().splitlines()[0])
        cands.write_text(json.dumps({"topic_id": "t", "system_id": "s", "text": g["text"]}) + "\n")
        golds.write_text(json.dumps({"topic_id": "t", "gold_id": "A", "text": g["text"]}) + "\n")
        out = tmp_path / "s.tsv"
        code, _ = run(["score", "sera", "--candidates", cands, "--golds", golds, "--index", index_dir,
                       "--out", out], capsys)
        assert code == 0
        rows = tsv(out)
        assert len(rows) == 12
        assert {r["value"] for r in rows} == {"1.0"}

    def test_sera_metric_names(self, index_dir, gold_as_candidates, tmp_path, capsys):
        out = tmp_path / "s.tsv"
        code, _ = run(["score", "sera", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                       "--index", index_dir, "--n", "5", "--modes", "np", "--discount", "no", "--out", out], capsys)
        assert code == 0
        assert {r["metric_name"] for r in tsv(out)} == {"SERA-NP-5"}

    def test_index_from_environment(self, index_dir, gold_as_candidates, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv(INDEX_ENV, str(index_dir))
        out = tmp_path / "s.tsv"
        code, _ = run(["score", "sera", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                       "--n", "5", "--out", out], capsys)
        assert code == 0 and len(tsv(out)) == 10 * 6

    def test_flag_beats_environment(self, index_dir, gold_as_candidates, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv(INDEX_ENV, str(tmp_path / "nowhere"))
        code, _ = run(["score", "sera", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                       "--index", index_dir, "--n", "5", "--out", tmp_path / "s.tsv"], capsys)
        assert code == 0

    def test_analyzer_mismatch(self, index_dir, gold_as_candidates, tmp_path, capsys):
        code, out = run(["score", "sera", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                         "--index", index_dir, "--no-stem", "--out", tmp_path / "s.tsv"], capsys)
        assert code != 0 and "analyzer" in out.err
        assert not (tmp_path / "s.tsv").exists()

    def test_missing_gold_file(self, index_dir, gold_as_candidates, tmp_path, capsys):
        code, _ = run(["score", "sera", "--candidates", gold_as_candidates, "--golds", tmp_path / "none.jsonl",
                       "--index", index_dir], capsys)
        assert code != 0

    def test_rouge(self, gold_as_candidates, tmp_path, capsys):
        out = tmp_path / "r.tsv"
        code, _ = run(["score", "rouge", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                       "--out", out], capsys)
        assert code == 0
        rows = tsv(out)
        assert len(rows) == 10 * 21
        assert any(r["metric_name"] == "ROUGE-W-1.2-R" for r in rows)

    def test_pyramid_table1(self, tmp_path, capsys):
        tiers = {"n1": 3, "n2": 2, "n3": 1, "n4": 1, "n5": 4, "n6": 2}
        (tmp_path / "p.json").write_text(json.dumps(
            {"topic_id": "t1", "nuggets": [{"id": k, "text": k, "tier": v} for k, v in tiers.items()]}))
        (tmp_path / "m.json").write_text(json.dumps([
            {"topic_id": "t1", "system_id": "top", "matched_ids": ["n1", "n5"]},
            {"topic_id": "t1", "system_id": "low", "matched_ids": ["n3"]},
        ]))
        out = tmp_path / "p.tsv"
        code, _ = run(["score", "pyramid", "--pyramid", tmp_path / "p.json", "--matches", tmp_path / "m.json",
                       "--out", out], capsys)
        assert code == 0
        assert {r["system_id"]: r["value"] for r in tsv(out)} == {"top": "1.0", "low": "0.25"}

    def test_bundled_pyramid_scores_reproducible(self, tmp_path, capsys):
        out = tmp_path / "p.tsv"
        code, _ = run(["score", "pyramid", "--pyramid", *sorted((MINI / "pyramids").glob("*.json")),
                       "--matches", MINI / "matches.json", "--out", out], capsys)
        assert code == 0
        assert out.read_bytes() == (MINI / "pyramid_scores.tsv").read_bytes()


def _scores(path, rows):
    path.write_text("topic_id\tsystem_id\tmetric_name\tvalue\n" + "".join(
        f"t1\t{s}\t{m}\t{v}\n" for s, m, v in rows))
    return path


class TestCorrelate:
    def test_self_correlation(self, tmp_path, capsys):
        x = _scores(tmp_path / "x.tsv", [(s, "M", v) for s, v in zip("abcde", [0.1, 0.5, 0.3, 0.9, 0.2])])
        out = tmp_path / "c.tsv"
        assert run(["correlate", x, x, "--out", out], capsys)[0] == 0
        (row,) = tsv(out)
        assert (row["r"], row["rho"], row["tau"]) == ("1.000000",) * 3

    def test_fixture(self, tmp_path, capsys):
        x = _scores(tmp_path / "x.tsv", [(s, "X", v) for s, v in zip("abcd", [1, 2, 3, 4])])
        y = _scores(tmp_path / "y.tsv", [(s, "Y", v) for s, v in zip("abcd", [1, 3, 2, 4])])
        code, out = run(["correlate", x, y], capsys)
        assert code == 0
        assert out.out.splitlines()[1] == "X vs Y\t4\t0.800000\t0.800000\t0.666667"

    def test_disjoint_systems(self, tmp_path, capsys):
        x = _scores(tmp_path / "x.tsv", [(s, "X", v) for s, v in zip("abc", [1, 2, 3])])
        y = _scores(tmp_path / "y.tsv", [(s, "Y", v) for s, v in zip("def", [1, 2, 3])])
        code, _ = run(["correlate", x, y, "--out", tmp_path / "c.tsv"], capsys)
        assert code != 0 and not (tmp_path / "c.tsv").exists()

    def test_constant_metric(self, tmp_path, capsys):
        x = _scores(tmp_path / "x.tsv", [(s, "X", 1.0) for s in "abc"])
        y = _scores(tmp_path / "y.tsv", [(s, "Y", v) for s, v in zip("abc", [1, 2, 3])])
        code, out = run(["correlate", x, y], capsys)
        assert code == 0 and "undefined" in out.out and "constant" in out.err
        assert run(["correlate", x, y, "--strict"], capsys)[0] != 0


class TestSweep:
    def test_full_grid(self, index_dir, gold_as_candidates, tmp_path, capsys):
        out = tmp_path / "sw.tsv"
        code, _ = run(["sweep", "--index", index_dir, "--candidates", gold_as_candidates,
                       "--golds", MINI / "golds.jsonl", "--out", out], capsys)
        assert code == 0
        rows = tsv(out)
        assert list(rows[0]) == ["n", "mode", "discounted", "topic_id", "system_id", "value"]
        per_pair = {}
        for r in rows:
            per_pair.setdefault((r["topic_id"], r["system_id"]), set()).add((r["n"], r["mode"], r["discounted"]))
        assert len(per_pair) == 10 and all(len(v) == 12 for v in per_pair.values())

    def test_single_n(self, index_dir, gold_as_candidates, tmp_path, capsys):
        out = tmp_path / "sw.tsv"
        run(["sweep", "--index", index_dir, "--candidates", gold_as_candidates, "--golds",
             MINI / "golds.jsonl", "--n", "5", "--out", out], capsys)
        assert {r["n"] for r in tsv(out)} == {"5"} and len(tsv(out)) == 10 * 6

    def test_zero_n(self, index_dir, gold_as_candidates, tmp_path, capsys):
        code, _ = run(["sweep", "--index", index_dir, "--candidates", gold_as_candidates, "--golds",
                       MINI / "golds.jsonl", "--n", "0"], capsys)
        assert code != 0

    def test_against_pyramid(self, index_dir, tmp_path, capsys):
        run(["pipeline", "--out", tmp_path / "p"], capsys)
        corr = tmp_path / "corr.tsv"
        code, _ = run(["sweep", "--index", index_dir, "--candidates", tmp_path / "p" / "candidates.jsonl",
                       "--golds", MINI / "golds.jsonl", "--against", MINI / "pyramid_scores.tsv",
                       "--correlations-out", corr, "--out", tmp_path / "sw.tsv"], capsys)
        assert code == 0
        names = [r["metric_pair"] for r in tsv(corr)]
        assert names[0] == "SERA-5 vs PYRAMID" and len(names) == 12


class TestMisc:
    def test_summarize(self, tmp_path, capsys):
        article = MINI / "articles" / "idh.txt"
        code, out = run(["summarize", "--input", article, "--method", "sumbasic", "--k", "3"], capsys)
        assert code == 0
        lines = out.out.splitlines()
        text = article.read_text()
        assert len(lines) == 3
        assert [text.index(s) for s in lines] == sorted(text.index(s) for s in lines)

    def test_help_shows_defaults(self, capsys):
        with pytest.raises(SystemExit):
            main(["score", "sera", "--help"])
        help_text = capsys.readouterr().out
        assert "2000" in help_text and "(5, 10)" in help_text
        with pytest.raises(SystemExit):
            main(["summarize", "--help"])
        help_text = capsys.readouterr().out
        assert "0.85" in help_text and "0.5" in help_text
        with pytest.raises(SystemExit):
            main(["score", "rouge", "--help"])
        assert "AVERAGE" in capsys.readouterr().out

    def test_module_entry_point(self):
        res = subprocess.run([sys.executable, "-m", "seraeval", "--version"], capture_output=True, text=True)
        assert res.returncode == 0 and "seraeval" in res.stdout

    def test_reruns_byte_identical(self, index_dir, gold_as_candidates, tmp_path, capsys):
        outs = []
        for i in range(2):
            out = tmp_path / f"s{i}.tsv"
            run(["score", "sera", "--candidates", gold_as_candidates, "--golds", MINI / "golds.jsonl",
                 "--index", index_dir, "--workers", str(1 + 3 * i), "--out", out], capsys)
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
