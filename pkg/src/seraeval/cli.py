"""Command-line interface: ``seraeval {index,score,summarize,correlate,sweep,pipeline}``."""

from __future__ import annotations

import argparse
import io
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .baselines import METHODS, summarize
from .errors import InvalidArgumentError, SeraEvalError
from .index import build_index, load_index, read_corpus, save_index
from .pipeline import (
    DEFAULT_WORKERS,
    metric_order,
    read_candidates,
    read_golds,
    run_pipeline,
    score_pyramid,
    score_rouge,
    score_sera,
    sera_configs,
    write_sweep,
)
from .pyramid import load_matches, load_pyramid
from .retrieval import DEFAULT_MU
from .rouge import AVERAGE, MAX, RougeOptions
from .sera import MODES, SeraScorer
from .stats import SYSTEM, TOPIC, ScoreTable, correlate_tables, read_scores, write_correlations, write_scores
from .textproc import AnalyzerOptions


INDEX_ENV = "SERAEVAL_INDEX"


@dataclass
class RunConfig:
    """Resolved inputs of one invocation, validated before any work starts."""

    subcommand: str
    inputs: list[Path] = field(default_factory=list)
    index: Optional[Path] = None
    cutoffs: tuple[int, ...] = ()
    modes: tuple[str, ...] = ()
    mu: float = DEFAULT_MU
    output: Optional[Path] = None

    def validate(self) -> None:
        for p in self.inputs + ([self.index] if self.index else []):
            if not p.exists():
                raise InvalidArgumentError(f"{p}: no such file or directory")
        for n in self.cutoffs:
            if n < 1:
                raise InvalidArgumentError(f"cut-off values must be >= 1, got {n}")
        if not self.mu > 0:
            raise InvalidArgumentError(f"mu must be > 0, got {self.mu}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _mode_list(text: str) -> tuple[str, ...]:
    modes = tuple(m.strip().upper() for m in text.split(",") if m.strip())
    bad = [m for m in modes if m not in MODES]
    if bad or not modes:
        raise argparse.ArgumentTypeError(f"modes must be drawn from {','.join(MODES)}, got {text!r}")
    return modes


_DISCOUNTS = {"both": (False, True), "no": (False,), "yes": (True,)}


def _emit(text: str, out: Optional[Path]) -> None:
    """Write to ``out`` atomically (temp file + rename), or to stdout."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=out.parent, prefix=f".{out.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _render(writer, rows) -> str:
    buf = io.StringIO()
    writer(rows, buf)
    return buf.getvalue()


def _analyzer(args) -> AnalyzerOptions:
    return AnalyzerOptions(
        lowercase=not args.no_lowercase,
        strip_numeric=not args.keep_numeric,
        remove_stopwords=not args.keep_stopwords,
        stem=not args.no_stem,
    )


def _resolve_index(args) -> Path:
    path = args.index or os.environ.get(INDEX_ENV)
    if not path:
        raise InvalidArgumentError(f"no index given (use --index or set {INDEX_ENV})")
    return Path(path)


def _open_index(args):
    index = load_index(_resolve_index(args))
    index.check_fingerprint(_analyzer(args).fingerprint())
    return index


# ------------------------------------------------------------------ commands


def cmd_index(args) -> int:
    cfg = RunConfig("index", [Path(args.corpus)], output=Path(args.out))
    cfg.validate()
    index = build_index(read_corpus(args.corpus), _analyzer(args))
    save_index(index, args.out)
    print(f"documents\t{index.doc_count}")
    print(f"vocabulary\t{index.vocabulary_size}")
    print(f"tokens\t{index.total_token_count}")
    return 0


def cmd_score_sera(args) -> int:
    cfg = RunConfig(
        "score sera", [Path(args.candidates), Path(args.golds)], _resolve_index(args), args.n, args.modes,
        args.mu, args.out,
    )
    cfg.validate()
    index = _open_index(args)
    candidates, golds = read_candidates(args.candidates), read_golds(args.golds)
    configs = sera_configs(args.n, args.modes, _DISCOUNTS[args.discount], args.mu)
    rows = score_sera(SeraScorer(index, args.mu), candidates, golds, configs, args.workers)
    _emit(_render(write_scores, [r for _, r in rows]), args.out)
    return 0


def cmd_score_rouge(args) -> int:
    RunConfig("score rouge", [Path(args.candidates), Path(args.golds)], output=args.out).validate()
    options = RougeOptions(
        stem=not args.no_stem, remove_stopwords=not args.keep_stopwords, multi_ref=args.multi_ref,
        w_weight=args.w_weight, s_max_gap=args.s_max_gap,
    )
    rows = score_rouge(read_candidates(args.candidates), read_golds(args.golds), options, args.workers)
    _emit(_render(write_scores, rows), args.out)
    return 0


def cmd_score_pyramid(args) -> int:
    RunConfig("score pyramid", [Path(p) for p in args.pyramid + args.matches], output=args.out).validate()
    pyramids = {}
    for p in args.pyramid:
        pyr = load_pyramid(p)
        if pyr.topic_id in pyramids:
            raise InvalidArgumentError(f"two pyramids for topic {pyr.topic_id!r}")
        pyramids[pyr.topic_id] = pyr
    matches = [m for p in args.matches for m in load_matches(p)]
    _emit(_render(write_scores, score_pyramid(pyramids, matches)), args.out)
    return 0


def cmd_summarize(args) -> int:
    RunConfig("summarize", [Path(args.input)], output=args.out).validate()
    text = Path(args.input).read_text(encoding="utf-8")
    method = args.method.upper()
    params = {}
    if method == "LEXRANK":
        params = {"damping": args.damping, "sim_threshold": args.threshold}
    elif method == "KL":
        params = {"smoothing_alpha": args.alpha}
    elif method == "MMR":
        params = {"lam": args.lam}
    sentences = summarize(text, method, args.k, **params)
    _emit("".join(s.replace("\n", " ") + "\n" for s in sentences), args.out)
    return 0


def cmd_correlate(args) -> int:
    RunConfig("correlate", [Path(args.x), Path(args.y)], output=args.out).validate()
    rows = correlate_tables(read_scores(args.x), read_scores(args.y), args.level, strict=args.strict)
    for r in rows:
        if r.r is None:
            print(f"seraeval: warning: {r.metric_pair}: a metric is constant over the joined rows; "
                  "correlation undefined", file=sys.stderr)
    _emit(_render(write_correlations, rows), args.out)
    return 0


def cmd_sweep(args) -> int:
    cfg = RunConfig(
        "sweep", [Path(args.candidates), Path(args.golds)], _resolve_index(args), args.n, args.modes,
        args.mu, args.out,
    )
    if args.against:
        cfg.inputs.append(Path(args.against))
    cfg.validate()
    index = _open_index(args)
    configs = sera_configs(args.n, args.modes, (False, True), args.mu)
    rows = score_sera(
        SeraScorer(index, args.mu), read_candidates(args.candidates), read_golds(args.golds), configs,
        args.workers,
    )
    if args.against:
        corr = correlate_tables(
            ScoreTable([r for _, r in rows]), read_scores(args.against), args.level, strict=False,
            metrics_x=metric_order(configs),
        )
        _emit(_render(write_correlations, corr), Path(args.correlations_out) if args.correlations_out else None)
    _emit(_render(write_sweep, rows), args.out)
    return 0


def cmd_pipeline(args) -> int:
    result = run_pipeline(args.out, args.workers, args.mu)
    print(f"wrote {result.correlation_file} and {result.sweep_file}")
    return 0


# ------------------------------------------------------------------- parser


def _add_analyzer_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("analyzer (must match the index)")
    g.add_argument("--no-lowercase", action="store_true", help="keep case (default: lowercase)")
    g.add_argument("--keep-numeric", action="store_true", help="keep numeric tokens (default: drop)")
    g.add_argument("--keep-stopwords", action="store_true", help="keep stopwords (default: drop)")
    g.add_argument("--no-stem", action="store_true", help="disable Porter stemming (default: stem)")


def _add_index_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--index", help=f"index directory (default: ${INDEX_ENV})")


def _add_common(p: argparse.ArgumentParser, workers: bool = True) -> None:
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    if workers:
        p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="topic worker threads")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="seraeval", description=__doc__, formatter_class=fmt)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build a retrieval index", formatter_class=fmt)
    isub = p_index.add_subparsers(dest="index_command", required=True)
    p = isub.add_parser("build", help="index a JSONL corpus", formatter_class=fmt)
    p.add_argument("--corpus", required=True, help="JSONL with id, text and optional title")
    p.add_argument("--out", required=True, help="index directory to write")
    _add_analyzer_flags(p)
    p.set_defaults(func=cmd_index)

    p_score = sub.add_parser("score", help="score candidate summaries", formatter_class=fmt)
    ssub = p_score.add_subparsers(dest="kind", required=True)

    p = ssub.add_parser("sera", help="retrieval-overlap scores", formatter_class=fmt)
    p.add_argument("--candidates", required=True, help="JSONL with topic_id, system_id, text")
    p.add_argument("--golds", required=True, help="JSONL with topic_id, gold_id, text")
    _add_index_flag(p)
    p.add_argument("--n", type=_int_list, default=(5, 10), help="comma-separated rank cut-offs")
    p.add_argument("--modes", type=_mode_list, default=MODES, help="comma-separated query reformulations")
    p.add_argument("--discount", choices=sorted(_DISCOUNTS), default="both", help="simple, discounted or both")
    p.add_argument("--mu", type=float, default=DEFAULT_MU, help="Dirichlet prior mass")
    _add_analyzer_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_score_sera)

    p = ssub.add_parser("rouge", help="ROUGE-1/2/3/L/S/SU/W F, P and R", formatter_class=fmt)
    p.add_argument("--candidates", required=True, help="JSONL with topic_id, system_id, text")
    p.add_argument("--golds", required=True, help="JSONL with topic_id, gold_id, text")
    p.add_argument("--no-stem", action="store_true", help="disable stemming (default: stem)")
    p.add_argument("--keep-stopwords", action="store_true", help="keep stopwords (default: drop)")
    p.add_argument("--multi-ref", choices=(AVERAGE, MAX), default=AVERAGE, help="multi-reference aggregation")
    p.add_argument("--w-weight", type=float, default=1.2, help="ROUGE-W weighting exponent")
    p.add_argument("--s-max-gap", type=int, default=None, help="ROUGE-S/SU maximum skip (default: unlimited)")
    _add_common(p)
    p.set_defaults(func=cmd_score_rouge)

    p = ssub.add_parser("pyramid", help="pyramid scores from nugget matches", formatter_class=fmt)
    p.add_argument("--pyramid", nargs="+", required=True, help="pyramid JSON files, one per topic")
    p.add_argument("--matches", nargs="+", required=True, help="match JSON files")
    _add_common(p, workers=False)
    p.set_defaults(func=cmd_score_pyramid)

    p = sub.add_parser("summarize", help="extractive baseline summary", formatter_class=fmt)
    p.add_argument("--input", required=True, help="plain-text document")
    p.add_argument("--method", type=str.upper, choices=METHODS, default="LEXRANK", help="baseline")
    p.add_argument("--k", type=int, default=3, help="number of sentences")
    p.add_argument("--damping", type=float, default=0.85, help="LexRank damping factor")
    p.add_argument("--threshold", type=float, default=0.1, help="LexRank similarity threshold")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5, help="MMR relevance weight")
    p.add_argument("--alpha", type=float, default=1e-3, help="KL add-alpha smoothing")
    _add_common(p, workers=False)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("correlate", help="Pearson, Spearman and Kendall between score files", formatter_class=fmt)
    p.add_argument("x", help="score TSV")
    p.add_argument("y", help="score TSV")
    p.add_argument("--level", choices=(SYSTEM, TOPIC), default=SYSTEM, help="join level")
    p.add_argument("--strict", action="store_true", help="fail on constant metrics instead of writing 'undefined'")
    _add_common(p, workers=False)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("sweep", help="SERA over a grid of cut-offs, modes and discounting", formatter_class=fmt)
    p.add_argument("--candidates", required=True, help="JSONL with topic_id, system_id, text")
    p.add_argument("--golds", required=True, help="JSONL with topic_id, gold_id, text")
    _add_index_flag(p)
    p.add_argument("--n", type=_int_list, default=(5, 10), help="comma-separated rank cut-offs")
    p.add_argument("--modes", type=_mode_list, default=MODES, help="comma-separated query reformulations")
    p.add_argument("--mu", type=float, default=DEFAULT_MU, help="Dirichlet prior mass")
    p.add_argument("--against", default=None, help="score TSV to correlate each SERA variant with")
    p.add_argument("--level", choices=(SYSTEM, TOPIC), default=SYSTEM, help="join level for --against")
    p.add_argument("--correlations-out", default=None, help="correlation TSV (default: stdout)")
    _add_analyzer_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("pipeline", help="end-to-end run on the bundled mini-corpus", formatter_class=fmt)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="topic worker threads")
    p.add_argument("--mu", type=float, default=DEFAULT_MU, help="Dirichlet prior mass")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="seraeval: %(levelname)s: %(message)s"
    )
    try:
        return args.func(args)
    except (SeraEvalError, OSError, ValueError, KeyError) as exc:
        print(f"seraeval: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
