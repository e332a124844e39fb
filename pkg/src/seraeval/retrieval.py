"""Query-likelihood retrieval with Dirichlet smoothing."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyQueryError, InvalidArgumentError
from .index import Index

DEFAULT_MU = 2000.0

PLAIN, NP, KW = "PLAIN", "NP", "KW"
QUERY_SOURCES = (PLAIN, NP, KW)


@dataclass(frozen=True)
class Query:
    """Multiset of analyzed (stemmed, stopword-free) terms.

    ``terms`` is stored as sorted ``(term, count)`` pairs so that scoring
    always sums in the same order.
    """

    terms: tuple[tuple[str, int], ...]
    source: str = PLAIN
    fingerprint: str = ""

    @classmethod
    def from_terms(cls, terms: Iterable[str] | Mapping[str, int], source: str = PLAIN,
                   fingerprint: str = "") -> "Query":
        counts = Counter(terms)
        return cls(tuple(sorted((t, c) for t, c in counts.items() if c > 0)), source, fingerprint)

    def __len__(self) -> int:
        return sum(c for _, c in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)


@dataclass(frozen=True)
class RankedList:
    entries: tuple[tuple[str, float], ...]
    cutoff: int

    @property
    def doc_ids(self) -> list[str]:
        return [d for d, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def _check_mu(mu: float) -> None:
    if not mu > 0:
        raise InvalidArgumentError(f"mu must be > 0, got {mu}")


def _score_at(doc_idx: int, query: Query, index: Index, mu: float) -> float:
    total = index.total_token_count
    denom = index.length_at(doc_idx) + mu
    score = 0.0
    for term, qcount in query.terms:
        cf = index.cf(term)
        if cf == 0:
            continue
        tf = len(index.term_postings(term).get(doc_idx, ()))
        score += qcount * math.log((tf + mu * cf / total) / denom)
    return score


def lm_dirichlet_score(query: Query, doc_id: str, index: Index, mu: float = DEFAULT_MU) -> float:
    """Log query likelihood of ``doc_id`` under a Dirichlet-smoothed document model.

    ``sum_t c(t,q) * ln((c(t,d) + mu * cf(t)/|C|) / (|d| + mu))``; terms that
    never occur in the collection are skipped.
    """
    _check_mu(mu)
    return _score_at(index.doc_index(doc_id), query, index, mu)


def retrieve(query: Query, index: Index, n: int, mu: float = DEFAULT_MU) -> RankedList:
    """Top-``n`` documents by Dirichlet LM score, ties broken by ascending doc id.

    Only documents containing at least one query term are ranked.
    """
    if n < 1:
        raise InvalidArgumentError(f"cutoff n must be >= 1, got {n}")
    _check_mu(mu)
    if not query:
        raise EmptyQueryError("cannot retrieve with an empty query")
    if query.fingerprint:
        index.check_fingerprint(query.fingerprint)

    candidates = set()
    for term, _ in query.terms:
        candidates.update(index.term_postings(term))
    scored = [(index.doc_ids[d], _score_at(d, query, index, mu)) for d in candidates]
    scored.sort(key=lambda e: (-e[1], e[0]))
    return RankedList(tuple(scored[:n]), n)
