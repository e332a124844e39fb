"""Extractive baseline summarizers: LexRank, Luhn frequency, SumBasic, KL-greedy, MMR.

Each selector takes a list of sentence strings and returns the chosen sentence
indices in document order.  Every tie is broken by the lower sentence index.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidArgumentError
from .textproc import AnalyzerOptions, sentence_split, tokenize

LEXRANK, FREQ, SUMBASIC, KL, MMR = "LEXRANK", "FREQ", "SUMBASIC", "KL", "MMR"
METHODS = (LEXRANK, FREQ, SUMBASIC, KL, MMR)

# Scores closer than this are treated as tied so index order decides.
_TIE_DIGITS = 12

_ANALYZER = AnalyzerOptions()


def sentence_terms(sentences: Sequence[str]) -> list[list[str]]:
    if not sentences:
        raise InvalidArgumentError("no sentences to summarize")
    terms = [[t.stem for t in tokenize(s, _ANALYZER)] for s in sentences]
    if not any(terms):
        raise InvalidArgumentError("every sentence is empty after stopword removal")
    return terms


def _check_k(k: int) -> None:
    if k < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k}")


def _top_k(scores: Sequence[float], k: int) -> list[int]:
    order = sorted(range(len(scores)), key=lambda i: (-round(scores[i], _TIE_DIGITS), i))
    return sorted(order[:k])


def tfidf_matrix(terms: Sequence[Sequence[str]]) -> np.ndarray:
    """Sentence-by-term tf-idf with ``idf = 1 + ln(N / df)`` over sentences."""
    vocab = sorted({t for s in terms for t in s})
    col = {t: j for j, t in enumerate(vocab)}
    df = Counter(t for s in terms for t in set(s))
    n = len(terms)
    mat = np.zeros((n, len(vocab)))
    for i, s in enumerate(terms):
        for t, c in Counter(s).items():
            mat[i, col[t]] = c * (1.0 + math.log(n / df[t]))
    return mat


def cosine_matrix(mat: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(mat, axis=1)
    safe = np.where(norms > 0, norms, 1.0)
    unit = mat / safe[:, None]
    sim = unit @ unit.T
    np.fill_diagonal(sim, 1.0)
    return np.clip(sim, 0.0, 1.0)


def _connected(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.nonzero(adj[i])[0]:
            if j not in seen:
                seen.add(int(j))
                stack.append(int(j))
    return len(seen) == n


def lexrank_scores(
    sentences: Sequence[str], damping: float = 0.85, sim_threshold: float = 0.1, eps: float = 1e-4,
    max_iter: int = 10_000,
) -> np.ndarray:
    """Stationary centrality of the sentence similarity graph.

    Uses the binary graph thresholded at ``sim_threshold`` when it is
    connected, otherwise the continuous cosine weights.  Power iteration runs
    until the L1 change drops below ``eps``.
    """
    sim = cosine_matrix(tfidf_matrix(sentence_terms(sentences)))
    adj = (sim >= sim_threshold).astype(float)
    weights = adj if _connected(adj) else sim
    trans = weights / weights.sum(axis=1, keepdims=True)
    n = len(sentences)
    p = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        nxt = (1.0 - damping) / n + damping * (trans.T @ p)
        delta = np.abs(nxt - p).sum()
        p = nxt
        if delta < eps:
            break
    return p / p.sum()


def lexrank(
    sentences: Sequence[str], k: int, damping: float = 0.85, sim_threshold: float = 0.1,
    eps: float = 1e-4,
) -> list[int]:
    _check_k(k)
    return _top_k(lexrank_scores(sentences, damping, sim_threshold, eps).tolist(), k)


def luhn_scores(sentences: Sequence[str]) -> list[float]:
    """Mean document frequency of a sentence's content words (-1 if it has none)."""
    terms = sentence_terms(sentences)
    freq = Counter(t for s in terms for t in s)
    return [sum(freq[t] for t in s) / len(s) if s else -1.0 for s in terms]


def freq_luhn(sentences: Sequence[str], k: int) -> list[int]:
    _check_k(k)
    return _top_k(luhn_scores(sentences), k)


def sumbasic(sentences: Sequence[str], k: int) -> list[int]:
    """SumBasic: take the best sentence containing the most probable word,
    then square the probabilities of the words it covered."""
    _check_k(k)
    terms = sentence_terms(sentences)
    counts = Counter(t for s in terms for t in s)
    total = sum(counts.values())
    prob = {t: c / total for t, c in counts.items()}
    first_seen = {}
    for s in terms:
        for t in s:
            first_seen.setdefault(t, len(first_seen))

    remaining = [i for i, s in enumerate(terms) if s]
    empty = [i for i, s in enumerate(terms) if not s]
    chosen: list[int] = []
    while len(chosen) < k and remaining:
        words = {t for i in remaining for t in terms[i]}
        best_word = min(words, key=lambda t: (-prob[t], first_seen[t]))
        holders = [i for i in remaining if best_word in terms[i]]
        pick = min(
            holders,
            key=lambda i: (-round(sum(prob[t] for t in terms[i]) / len(terms[i]), _TIE_DIGITS), i),
        )
        chosen.append(pick)
        remaining.remove(pick)
        for t in set(terms[pick]):
            prob[t] = prob[t] ** 2
    chosen.extend(empty[: max(0, k - len(chosen))])
    return sorted(chosen)


def kl_divergence(p: dict[str, float], counts: Counter, vocab_size: int, alpha: float) -> float:
    """KL(P || Q) with Q the add-``alpha`` smoothed unigram model of ``counts``."""
    denom = sum(counts.values()) + alpha * vocab_size
    return math.fsum(pw * math.log(pw / ((counts[w] + alpha) / denom)) for w, pw in p.items())


def kl_greedy(sentences: Sequence[str], k: int, smoothing_alpha: float = 1e-3) -> list[int]:
    """Greedily add the sentence that brings the summary's unigram model closest
    (in KL divergence) to the document's."""
    _check_k(k)
    if not smoothing_alpha > 0:
        raise InvalidArgumentError("smoothing_alpha must be > 0")
    terms = sentence_terms(sentences)
    doc = Counter(t for s in terms for t in s)
    total = sum(doc.values())
    p = {w: c / total for w, c in doc.items()}
    summary: Counter = Counter()
    chosen: list[int] = []
    remaining = list(range(len(terms)))
    while len(chosen) < k and remaining:
        pick = min(
            remaining,
            key=lambda i: (
                round(kl_divergence(p, summary + Counter(terms[i]), len(doc), smoothing_alpha), _TIE_DIGITS),
                i,
            ),
        )
        chosen.append(pick)
        remaining.remove(pick)
        summary.update(terms[pick])
    return sorted(chosen)


def mmr_order(
    sentences: Sequence[str], k: int, lam: float = 0.5, query_vector: Optional[np.ndarray] = None
) -> list[int]:
    """Indices in MMR selection order.

    Each step maximizes ``lam * sim(s, q) - (1 - lam) * max_{t chosen} sim(s, t)``;
    ``q`` defaults to the centroid of the sentence tf-idf vectors.
    """
    _check_k(k)
    if not 0.0 <= lam <= 1.0:
        raise InvalidArgumentError(f"lambda must be in [0, 1], got {lam}")
    mat = tfidf_matrix(sentence_terms(sentences))
    query = mat.mean(axis=0) if query_vector is None else np.asarray(query_vector, dtype=float)
    rel = cosine_matrix(np.vstack([mat, query]))[-1, :-1]
    sim = cosine_matrix(mat)
    chosen: list[int] = []
    remaining = list(range(len(sentences)))
    while len(chosen) < k and remaining:
        def objective(i: int) -> float:
            redundancy = max((sim[i, j] for j in chosen), default=0.0)
            return lam * rel[i] - (1.0 - lam) * redundancy

        pick = min(remaining, key=lambda i: (-round(objective(i), _TIE_DIGITS), i))
        chosen.append(pick)
        remaining.remove(pick)
    return chosen


def mmr(sentences: Sequence[str], k: int, lam: float = 0.5, query_vector: Optional[np.ndarray] = None) -> list[int]:
    return sorted(mmr_order(sentences, k, lam, query_vector))


def select(method: str, sentences: Sequence[str], k: int, **params) -> list[int]:
    method = method.upper()
    if method == LEXRANK:
        return lexrank(sentences, k, **params)
    if method == FREQ:
        return freq_luhn(sentences, k)
    if method == SUMBASIC:
        return sumbasic(sentences, k)
    if method == KL:
        return kl_greedy(sentences, k, **params)
    if method == MMR:
        return mmr(sentences, k, **params)
    raise InvalidArgumentError(f"unknown summarization method {method!r}")


def summarize(text: str, method: str, k: int, **params) -> list[str]:
    """Split ``text`` into sentences and return the selected ones in document order."""
    sentences = sentence_split(text)
    return [sentences[i] for i in select(method, sentences, k, **params)]
