"""SERA: summary evaluation by overlap of retrieval results.

The candidate and each gold summary are turned into queries against a domain
index; the candidate is scored by how much its ranked result list overlaps
with each gold's list, either as plain set overlap or discounted by the log of
the rank difference of every shared document.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from .errors import EmptyQueryError, InvalidArgumentError
from .index import Index
from .retrieval import DEFAULT_MU, KW, NP, PLAIN, QUERY_SOURCES, Query, retrieve
from .textproc import (
    AnalyzerOptions,
    IdfTable,
    compute_idf,
    extract_keywords,
    np_chunks,
    pos_tag,
    tokenize,
)

MODES = QUERY_SOURCES


@dataclass(frozen=True)
class SeraConfig:
    cutoff: int = 5
    mode: str = PLAIN
    discounted: bool = False
    mu: float = DEFAULT_MU

    def __post_init__(self):
        if self.cutoff < 1:
            raise InvalidArgumentError(f"cutoff must be >= 1, got {self.cutoff}")
        if self.mode not in MODES:
            raise InvalidArgumentError(f"unknown reformulation mode {self.mode!r}")
        if not self.mu > 0:
            raise InvalidArgumentError(f"mu must be > 0, got {self.mu}")

    @property
    def metric_name(self) -> str:
        """Table-style name, e.g. ``SERA-5``, ``SERA-NP-5``, ``SERA-DIS-KW-10``."""
        parts = ["SERA"]
        if self.discounted:
            parts.append("DIS")
        if self.mode != PLAIN:
            parts.append(self.mode)
        parts.append(str(self.cutoff))
        return "-".join(parts)


@dataclass(frozen=True)
class SeraScore:
    value: float
    components: tuple[float, ...]
    diagnostics: dict = field(default_factory=dict, compare=False)


def reformulate(
    summary_text: str,
    mode: str,
    idf_table: Optional[IdfTable] = None,
    options: AnalyzerOptions = AnalyzerOptions(),
) -> Query:
    """Reduce a summary to a query.

    PLAIN keeps every non-stopword, non-numeric term; NP keeps the terms of
    noun-phrase chunks; KW keeps the terms of idf-thresholded, stopword-free
    keyphrases (``idf_table`` required).  ``options`` must be the index's
    analyzer options; numeric tokens are always dropped from queries.
    """
    if mode not in MODES:
        raise InvalidArgumentError(f"unknown reformulation mode {mode!r}")
    if not summary_text.strip():
        raise InvalidArgumentError("summary text is empty")
    tokens = tokenize(summary_text, replace(options, strip_numeric=True, remove_stopwords=False))
    if mode == PLAIN:
        terms = [t.stem for t in tokens if not t.is_stopword]
    elif mode == NP:
        # Chunks are tagged on the unfiltered stream and kept whole.
        terms = [t.stem for chunk in np_chunks(pos_tag(tokens)) for t in chunk]
    else:
        if idf_table is None:
            raise InvalidArgumentError("KW reformulation needs an idf table")
        terms = [term for phrase in sorted(extract_keywords(tokens, idf_table)) for term in phrase]
    if not terms:
        raise EmptyQueryError(f"{mode} reformulation produced no terms")
    return Query.from_terms(terms, mode, options.fingerprint())


def simple_overlap(rc: Sequence[str], rg: Sequence[str]) -> float:
    """``|set(rc) & set(rg)| / max(|rc|, |rg|, 1)``."""
    return len(set(rc) & set(rg)) / max(len(rc), len(rg), 1)


def discounted_overlap_sum(
    rc: Sequence[str], rg: Sequence[str], log: Callable[[float], float] = math.log
) -> float:
    """Sum over shared documents of ``1 / log(|j - k| + 2)``."""
    rank_in_gold = {d: k for k, d in enumerate(rg)}
    total = 0.0
    for j, d in enumerate(rc):
        k = rank_in_gold.get(d)
        if k is not None:
            total += 1.0 / log(abs(j - k) + 2)
    return total


def _relative_discount_sum(
    rc: Sequence[str], rg: Sequence[str], log: Callable[[float], float] = math.log
) -> float:
    """``discounted_overlap_sum * log(2)``, computed so rank-aligned matches add exactly 1."""
    rank_in_gold = {d: k for k, d in enumerate(rg)}
    log2 = log(2)
    return math.fsum(
        log2 / log(abs(j - rank_in_gold[d]) + 2) for j, d in enumerate(rc) if d in rank_in_gold
    )


def sera_from_lists(
    rc: Sequence[str],
    gold_lists: Sequence[Sequence[str]],
    discounted: bool = False,
    log: Callable[[float], float] = math.log,
) -> SeraScore:
    """Score a candidate result list against gold result lists.

    For the discounted score every per-gold sum is normalized by
    ``D_max = L / log(2)``, the score of identical lists of length
    ``L = max(|rc|, max |rg_i|, 1)``.
    """
    if not gold_lists:
        raise InvalidArgumentError("at least one gold summary is required")
    for lst in (rc, *gold_lists):
        if len(set(lst)) != len(lst):
            raise InvalidArgumentError("ranked lists must not repeat a document")
    if discounted:
        # Dividing by D_max = L / log(2) is done as (sum * log(2)) / L so that
        # identical lists score exactly 1.0.
        longest = max(len(rc), max(len(g) for g in gold_lists), 1)
        comps = tuple(_relative_discount_sum(rc, g, log) / longest for g in gold_lists)
    else:
        comps = tuple(simple_overlap(rc, g) for g in gold_lists)
    return SeraScore(math.fsum(comps) / len(comps), comps)


class SeraScorer:
    """Batch scorer that caches reformulated queries and ranked lists.

    Safe to share between threads: the cache only ever grows with values that
    are pure functions of their keys.
    """

    def __init__(self, index: Index, mu: float = DEFAULT_MU, idf_table: Optional[IdfTable] = None):
        self.index = index
        self.mu = mu
        self._idf = idf_table
        self._lists: dict[tuple[str, str, int], Optional[tuple[str, ...]]] = {}

    @property
    def idf_table(self) -> IdfTable:
        if self._idf is None:
            self._idf = compute_idf(self.index)
        return self._idf

    def ranked(self, text: str, mode: str, n: int) -> Optional[tuple[str, ...]]:
        """Doc ids retrieved for ``text``; ``None`` when the query is empty."""
        key = (text, mode, n)
        if key not in self._lists:
            try:
                query = reformulate(
                    text, mode, self.idf_table if mode == KW else None, self.index.options
                )
            except EmptyQueryError:
                self._lists[key] = None
            else:
                self._lists[key] = tuple(retrieve(query, self.index, n, self.mu).doc_ids)
        return self._lists[key]

    def score(self, candidate: str, golds: Sequence[str], config: SeraConfig) -> SeraScore:
        if not golds:
            raise InvalidArgumentError("at least one gold summary is required")
        if config.mu != self.mu:
            raise InvalidArgumentError(f"scorer built for mu={self.mu}, config has mu={config.mu}")
        n, mode = config.cutoff, config.mode
        rc = self.ranked(candidate, mode, n)
        rgs = [self.ranked(g, mode, n) for g in golds]

        base = sera_from_lists(
            rc or (), [rg or () for rg in rgs], discounted=config.discounted
        )
        comps = list(base.components)
        empty_pairs = []
        for i, rg in enumerate(rgs):
            if rc is None or rg is None:
                comps[i] = 0.0
            if not rc and not rg:
                empty_pairs.append(i)
        diagnostics = {
            "empty_candidate_query": rc is None,
            "empty_gold_queries": [i for i, rg in enumerate(rgs) if rg is None],
            "empty_pairs": empty_pairs,
            "candidate_list_length": len(rc or ()),
            "gold_list_lengths": [len(rg or ()) for rg in rgs],
        }
        return SeraScore(math.fsum(comps) / len(comps), tuple(comps), diagnostics)


def sera_simple(
    candidate: str, golds: Sequence[str], index: Index, config: SeraConfig = SeraConfig(),
    idf_table: Optional[IdfTable] = None,
) -> SeraScore:
    """Mean over golds of ``|R_C & R_G| / max(|R_C|, |R_G|)``."""
    return SeraScorer(index, config.mu, idf_table).score(
        candidate, golds, replace(config, discounted=False)
    )


def sera_discounted(
    candidate: str, golds: Sequence[str], index: Index, config: SeraConfig = SeraConfig(),
    idf_table: Optional[IdfTable] = None,
) -> SeraScore:
    """Rank-difference-discounted overlap, normalized to [0, 1]."""
    return SeraScorer(index, config.mu, idf_table).score(
        candidate, golds, replace(config, discounted=True)
    )
