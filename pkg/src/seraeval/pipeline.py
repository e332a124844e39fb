"""Batch scoring over (topic, system) summaries and the bundled end-to-end run.

Everything here produces ``ScoreRow`` lists; callers write them with
``stats.write_scores`` so output order never depends on worker scheduling.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .baselines import METHODS, summarize
from .errors import InvalidArgumentError
from .index import Index, build_index, read_corpus
from .pyramid import load_pyramid, match, pyramid_score
from .retrieval import DEFAULT_MU
from .rouge import RougeOptions, rouge_all
from .sera import MODES, SeraConfig, SeraScorer
from .stats import (
    ScoreRow,
    ScoreTable,
    correlate_tables,
    read_scores,
    write_correlations,
    write_scores,
)

log = logging.getLogger(__name__)

SUMMARY_SENTENCES = 3
TABLE_CUTOFFS = (5, 10)
SWEEP_CUTOFFS = tuple(range(1, 11))
PYRAMID_METRIC = "PYRAMID"
SWEEP_HEADER = ("n", "mode", "discounted", "topic_id", "system_id", "value")
DEFAULT_WORKERS = 4


@dataclass(frozen=True)
class Summary:
    topic_id: str
    system_id: str
    text: str


def _read_jsonl(path: str | Path, fields: Sequence[str]) -> list[dict]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InvalidArgumentError(f"{path}:{lineno}: malformed JSON ({exc.msg})") from None
            if not isinstance(obj, dict) or not all(isinstance(obj.get(f), str) for f in fields):
                raise InvalidArgumentError(f"{path}:{lineno}: expected string fields {', '.join(fields)}")
            out.append(obj)
    return out


def read_candidates(path: str | Path) -> list[Summary]:
    """JSONL with ``topic_id``, ``system_id`` and ``text`` per line."""
    rows = _read_jsonl(path, ("topic_id", "system_id", "text"))
    seen = set()
    for r in rows:
        key = (r["topic_id"], r["system_id"])
        if key in seen:
            raise InvalidArgumentError(f"{path}: duplicate candidate {key}")
        seen.add(key)
    return [Summary(r["topic_id"], r["system_id"], r["text"]) for r in rows]


def read_golds(path: str | Path) -> dict[str, list[str]]:
    """JSONL with ``topic_id``, ``gold_id`` and ``text``; texts are ordered by gold id."""
    by_topic: dict[str, dict[str, str]] = {}
    for r in _read_jsonl(path, ("topic_id", "gold_id", "text")):
        golds = by_topic.setdefault(r["topic_id"], {})
        if r["gold_id"] in golds:
            raise InvalidArgumentError(f"{path}: duplicate gold {r['topic_id']}/{r['gold_id']}")
        golds[r["gold_id"]] = r["text"]
    return {t: [g[k] for k in sorted(g)] for t, g in sorted(by_topic.items())}


def write_candidates(summaries: Iterable[Summary], path: str | Path) -> None:
    lines = [
        json.dumps({"topic_id": s.topic_id, "system_id": s.system_id, "text": s.text}, sort_keys=True)
        for s in sorted(summaries, key=lambda s: (s.topic_id, s.system_id))
    ]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def _by_topic(candidates: Sequence[Summary], golds: Mapping[str, Sequence[str]]) -> dict[str, list[Summary]]:
    groups: dict[str, list[Summary]] = {}
    for c in candidates:
        if c.topic_id not in golds:
            raise InvalidArgumentError(f"no gold summaries for topic {c.topic_id!r}")
        groups.setdefault(c.topic_id, []).append(c)
    return groups


def _run_topics(fn, groups: Mapping[str, list], workers: int) -> list:
    """Apply ``fn(topic, items)`` to every topic on a bounded pool; flatten the results."""
    if workers < 1:
        raise InvalidArgumentError(f"workers must be >= 1, got {workers}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, t, items) for t, items in sorted(groups.items())]
        return [row for f in futures for row in f.result()]


def sera_configs(
    cutoffs: Sequence[int] = TABLE_CUTOFFS,
    modes: Sequence[str] = MODES,
    discounts: Sequence[bool] = (False, True),
    mu: float = DEFAULT_MU,
) -> list[SeraConfig]:
    if not cutoffs:
        raise InvalidArgumentError("the cut-off list is empty")
    return [SeraConfig(n, m, d, mu) for n in cutoffs for m in modes for d in discounts]


def metric_order(configs: Sequence[SeraConfig]) -> list[str]:
    """Metric names grouped by discounting, then mode, then cut-off."""
    ordered = sorted(configs, key=lambda c: (c.discounted, MODES.index(c.mode), c.cutoff))
    return list(dict.fromkeys(c.metric_name for c in ordered))


def score_sera(
    scorer: SeraScorer,
    candidates: Sequence[Summary],
    golds: Mapping[str, Sequence[str]],
    configs: Sequence[SeraConfig],
    workers: int = DEFAULT_WORKERS,
) -> list[tuple[SeraConfig, ScoreRow]]:
    def topic_rows(topic, items):
        return [
            (cfg, ScoreRow(topic, c.system_id, cfg.metric_name, scorer.score(c.text, golds[topic], cfg).value))
            for c in items
            for cfg in configs
        ]

    return _run_topics(topic_rows, _by_topic(candidates, golds), workers)


def score_rouge(
    candidates: Sequence[Summary],
    golds: Mapping[str, Sequence[str]],
    options: RougeOptions = RougeOptions(),
    workers: int = DEFAULT_WORKERS,
) -> list[ScoreRow]:
    def topic_rows(topic, items):
        return [
            ScoreRow(topic, c.system_id, name, value)
            for c in items
            for name, value in rouge_all(c.text, golds[topic], options).items()
        ]

    return _run_topics(topic_rows, _by_topic(candidates, golds), workers)


def score_pyramid(pyramids: Mapping[str, object], matches: Iterable[dict]) -> list[ScoreRow]:
    rows = []
    for m in matches:
        topic = m["topic_id"]
        if topic not in pyramids:
            raise InvalidArgumentError(f"no pyramid for topic {topic!r}")
        pyr = pyramids[topic]
        cand = match(pyr, m["matched_ids"], topic, m["system_id"])
        rows.append(ScoreRow(topic, m["system_id"], PYRAMID_METRIC, pyramid_score(cand, pyr)))
    return rows


def write_sweep(rows: Iterable[tuple[SeraConfig, ScoreRow]], path_or_file) -> None:
    """Long-format sweep TSV: one line per (n, mode, discounted, topic, system)."""
    ordered = sorted(
        rows, key=lambda cr: (cr[0].cutoff, cr[0].mode, cr[0].discounted, cr[1].topic_id, cr[1].system_id)
    )
    lines = ["\t".join(SWEEP_HEADER)]
    for cfg, r in ordered:
        lines.append(
            f"{cfg.cutoff}\t{cfg.mode}\t{int(cfg.discounted)}\t{r.topic_id}\t{r.system_id}\t{r.value!r}"
        )
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------- bundled data


def minicorpus_dir() -> Path:
    return Path(str(resources.files("seraeval").joinpath("data").joinpath("minicorpus")))


def load_minicorpus_pyramids(root: Optional[Path] = None) -> dict:
    root = root or minicorpus_dir()
    pyramids = {}
    for p in sorted((root / "pyramids").glob("*.json")):
        pyr = load_pyramid(p)
        pyramids[pyr.topic_id] = pyr
    return pyramids


def baseline_summaries(articles_dir: Path, k: int = SUMMARY_SENTENCES) -> list[Summary]:
    out = []
    for path in sorted(articles_dir.glob("*.txt")):
        text = path.read_text(encoding="utf-8")
        for method in METHODS:
            out.append(Summary(path.stem, method.lower(), " ".join(summarize(text, method, k))))
    return out


@dataclass
class PipelineResult:
    index: Index
    candidates: list[Summary]
    score_files: dict[str, Path]
    correlation_file: Path
    sweep_file: Path
    sweep_correlation_file: Path


def run_pipeline(
    out_dir: str | Path, workers: int = DEFAULT_WORKERS, mu: float = DEFAULT_MU,
    sweep_cutoffs: Sequence[int] = SWEEP_CUTOFFS,
) -> PipelineResult:
    """Summarize, score, and correlate the bundled mini-corpus.

    Writes candidates.jsonl, sera.tsv, rouge.tsv, pyramid.tsv, correlations.tsv
    (every SERA and ROUGE metric against the pyramid score, system level),
    sweep.tsv and sweep_correlations.tsv into ``out_dir``.
    """
    root = minicorpus_dir()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    index = build_index(read_corpus(root / "corpus.jsonl"))
    golds = read_golds(root / "golds.jsonl")
    candidates = baseline_summaries(root / "articles")
    write_candidates(candidates, out / "candidates.jsonl")

    scorer = SeraScorer(index, mu)
    table_configs = sera_configs(TABLE_CUTOFFS, MODES, (False, True), mu)
    sera_rows = [r for _, r in score_sera(scorer, candidates, golds, table_configs, workers)]
    rouge_rows = score_rouge(candidates, golds, workers=workers)
    pyramid_table = read_scores(root / "pyramid_scores.tsv")

    files = {"sera": out / "sera.tsv", "rouge": out / "rouge.tsv", "pyramid": out / "pyramid.tsv"}
    write_scores(sera_rows, files["sera"])
    write_scores(rouge_rows, files["rouge"])
    write_scores(pyramid_table.rows, files["pyramid"])

    metrics = ScoreTable(sera_rows + rouge_rows)
    order = metric_order(table_configs) + list(dict.fromkeys(r.metric_name for r in rouge_rows))
    corr = correlate_tables(metrics, pyramid_table, strict=False, metrics_x=order)
    write_correlations(corr, out / "correlations.tsv")

    sweep_configs = sera_configs(sweep_cutoffs, mu=mu)
    sweep = score_sera(scorer, candidates, golds, sweep_configs, workers)
    write_sweep(sweep, out / "sweep.tsv")
    write_correlations(
        correlate_tables(
            ScoreTable([r for _, r in sweep]), pyramid_table, strict=False, metrics_x=metric_order(sweep_configs)
        ),
        out / "sweep_correlations.tsv",
    )
    return PipelineResult(
        index, candidates, files, out / "correlations.tsv", out / "sweep.tsv", out / "sweep_correlations.tsv"
    )
