"""Regenerate the bundled mini-corpus under src/seraeval/data/minicorpus.

The nugget match files are synthetic: a system summary is matched to a nugget
when every content stem of the nugget occurs in the summary.  They are built
from the same baseline settings the pipeline uses (k sentences per summary).
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "scripts"))

from minicorpus_text import TOPICS  # noqa: E402

from seraeval.baselines import METHODS, summarize  # noqa: E402
from seraeval.pipeline import SUMMARY_SENTENCES, load_minicorpus_pyramids, score_pyramid  # noqa: E402
from seraeval.stats import write_scores  # noqa: E402
from seraeval.textproc import tokenize  # noqa: E402

OUT = ROOT / "src" / "seraeval" / "data" / "minicorpus"


def main() -> None:
    (OUT / "articles").mkdir(parents=True, exist_ok=True)
    (OUT / "pyramids").mkdir(parents=True, exist_ok=True)
    corpus, golds, matches = [], [], []
    for topic, data in TOPICS.items():
        article = "\n".join(ln.strip() for ln in data["article"].strip().splitlines()) + "\n"
        (OUT / "articles" / f"{topic}.txt").write_text(article, encoding="utf-8")
        corpus.append({"id": f"{topic}-00", "title": data["title"], "text": article.replace("\n", " ").strip()})
        for i, text in enumerate(data["docs"], start=1):
            corpus.append({"id": f"{topic}-{i:02d}", "text": text})
        for gid, text in zip("AB", data["golds"]):
            golds.append({"topic_id": topic, "gold_id": gid, "text": text})
        pyramid = {
            "topic_id": topic,
            "nuggets": [{"id": nid, "text": text, "tier": tier} for nid, text, tier in data["nuggets"]],
        }
        (OUT / "pyramids" / f"{topic}.json").write_text(json.dumps(pyramid, indent=2) + "\n", encoding="utf-8")

        for method in METHODS:
            summary = " ".join(summarize(article, method, SUMMARY_SENTENCES))
            stems = {t.stem for t in tokenize(summary)}
            hit = [nid for nid, text, _ in data["nuggets"] if {t.stem for t in tokenize(text)} <= stems]
            matches.append({"topic_id": topic, "system_id": method.lower(), "matched_ids": hit})

    with open(OUT / "corpus.jsonl", "w", encoding="utf-8") as fh:
        fh.write("# mini biomedical corpus: 5 topics x 10 documents\n")
        for doc in corpus:
            fh.write(json.dumps(doc) + "\n")
    with open(OUT / "golds.jsonl", "w", encoding="utf-8") as fh:
        for g in golds:
            fh.write(json.dumps(g) + "\n")
    (OUT / "matches.json").write_text(json.dumps(matches, indent=1) + "\n", encoding="utf-8")
    write_scores(score_pyramid(load_minicorpus_pyramids(OUT), matches), OUT / "pyramid_scores.tsv")
    print(f"wrote {len(corpus)} documents, {len(golds)} gold summaries, {len(matches)} match records")


if __name__ == "__main__":
    main()
