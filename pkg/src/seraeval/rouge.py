"""ROUGE-N, -L, -W, -S and -SU with recall, precision and F1.

Summaries are compared as whole token sequences (no per-sentence union LCS).
Inputs may be raw text, which is tokenized with the package analyzer, or an
already tokenized sequence of strings.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .errors import InvalidArgumentError
from .textproc import AnalyzerOptions, ngrams, tokenize

TextOrTokens = Union[str, Sequence[str]]

AVERAGE, MAX = "AVERAGE", "MAX"


@dataclass(frozen=True)
class RougeOptions:
    stem: bool = True
    remove_stopwords: bool = True
    multi_ref: str = AVERAGE
    w_weight: float = 1.2
    s_max_gap: Optional[int] = None

    def __post_init__(self):
        if not self.w_weight > 1:
            raise InvalidArgumentError(f"w_weight must be > 1, got {self.w_weight}")
        if self.multi_ref not in (AVERAGE, MAX):
            raise InvalidArgumentError(f"unknown multi-reference aggregation {self.multi_ref!r}")
        if self.s_max_gap is not None and self.s_max_gap < 0:
            raise InvalidArgumentError("s_max_gap must be >= 0")


@dataclass(frozen=True)
class RougeResult:
    recall: float
    precision: float
    f: float
    variant: str
    note: str = ""


def f_score(recall: float, precision: float, beta: float = 1.0) -> float:
    if recall + precision <= 0:
        return 0.0
    b2 = beta * beta
    return (1 + b2) * recall * precision / (recall + b2 * precision)


def preprocess(text: TextOrTokens, options: RougeOptions = RougeOptions()) -> list[str]:
    if not isinstance(text, str):
        return list(text)
    analyzer = AnalyzerOptions(
        lowercase=True,
        strip_numeric=False,
        remove_stopwords=options.remove_stopwords,
        stem=options.stem,
    )
    return [t.stem for t in tokenize(text, analyzer)]


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


# Each scorer maps (candidate tokens, reference tokens) to (recall, precision).
PairScorer = Callable[[list, list], "tuple[float, float]"]


def _aggregate(
    variant: str,
    candidate: TextOrTokens,
    references: Union[TextOrTokens, Sequence[TextOrTokens]],
    options: RougeOptions,
    pair: PairScorer,
) -> RougeResult:
    if isinstance(references, str):
        references = [references]
    if not references:
        raise InvalidArgumentError("at least one reference is required")
    cand = preprocess(candidate, options)
    refs = [preprocess(r, options) for r in references]
    if not cand or any(not r for r in refs):
        return RougeResult(0.0, 0.0, 0.0, variant, "empty candidate or reference after preprocessing")

    scores = [pair(cand, ref) for ref in refs]
    if options.multi_ref == MAX:
        r, p = max(scores, key=lambda rp: f_score(*rp))
    else:
        r = math.fsum(s[0] for s in scores) / len(scores)
        p = math.fsum(s[1] for s in scores) / len(scores)
    return RougeResult(r, p, f_score(r, p), variant)


def _overlap_scores(cand_counts: Counter, ref_counts: Counter) -> tuple[float, float]:
    hit = sum((cand_counts & ref_counts).values())
    return _ratio(hit, sum(ref_counts.values())), _ratio(hit, sum(cand_counts.values()))


def rouge_n(candidate, references, n: int = 1, options: RougeOptions = RougeOptions()) -> RougeResult:
    """Clipped n-gram overlap; recall over reference n-grams, precision over candidate's."""
    if not 1 <= n <= 4:
        raise InvalidArgumentError(f"ROUGE-N supports 1 <= n <= 4, got {n}")
    return _aggregate(
        f"ROUGE-{n}", candidate, references, options,
        lambda c, r: _overlap_scores(ngrams(c, n), ngrams(r, n)),
    )


def lcs_length(a: Sequence, b: Sequence) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate, references, options: RougeOptions = RougeOptions()) -> RougeResult:
    def pair(c, r):
        ell = lcs_length(c, r)
        return _ratio(ell, len(r)), _ratio(ell, len(c))

    return _aggregate("ROUGE-L", candidate, references, options, pair)


def wlcs(a: Sequence, b: Sequence, weight: float = 1.2) -> float:
    """Weighted LCS with ``f(k) = k**weight``, rewarding consecutive matches.

    The DP carries, per cell, the length of the consecutive match run ending
    there; extending a run of length k adds ``f(k+1) - f(k)``.
    """
    m = len(b)
    score = [0.0] * (m + 1)
    run = [0] * (m + 1)
    for x in a:
        new_score = [0.0] * (m + 1)
        new_run = [0] * (m + 1)
        for j in range(1, m + 1):
            if x == b[j - 1]:
                k = run[j - 1]
                new_score[j] = score[j - 1] + (k + 1) ** weight - k ** weight
                new_run[j] = k + 1
            elif score[j] > new_score[j - 1]:
                new_score[j] = score[j]
            else:
                new_score[j] = new_score[j - 1]
        score, run = new_score, new_run
    return score[m]


def rouge_w(candidate, references, options: RougeOptions = RougeOptions()) -> RougeResult:
    w = options.w_weight

    def pair(c, r):
        value = wlcs(c, r, w)
        recall = (value / len(r) ** w) ** (1 / w)
        precision = (value / len(c) ** w) ** (1 / w)
        return recall, precision

    return _aggregate(f"ROUGE-W-{w:g}", candidate, references, options, pair)


def skip_bigrams(tokens: Sequence, max_gap: Optional[int] = None) -> Counter:
    """Ordered token pairs separated by at most ``max_gap`` skipped tokens."""
    out: Counter = Counter()
    n = len(tokens)
    for i in range(n):
        stop = n if max_gap is None else min(n, i + max_gap + 2)
        for j in range(i + 1, stop):
            out[(tokens[i], tokens[j])] += 1
    return out


def _s_name(prefix: str, gap: Optional[int]) -> str:
    return prefix if gap is None else f"{prefix}{gap}"


def rouge_s(candidate, references, options: RougeOptions = RougeOptions()) -> RougeResult:
    gap = options.s_max_gap
    return _aggregate(
        _s_name("ROUGE-S", gap), candidate, references, options,
        lambda c, r: _overlap_scores(skip_bigrams(c, gap), skip_bigrams(r, gap)),
    )


def _su_counts(tokens: Sequence, gap: Optional[int]) -> Counter:
    counts = skip_bigrams(tokens, gap)
    counts.update((t,) for t in tokens)
    return counts


def rouge_su(candidate, references, options: RougeOptions = RougeOptions()) -> RougeResult:
    """ROUGE-S with unigram matches pooled into the skip-bigram counts."""
    gap = options.s_max_gap
    return _aggregate(
        _s_name("ROUGE-SU", gap), candidate, references, options,
        lambda c, r: _overlap_scores(_su_counts(c, gap), _su_counts(r, gap)),
    )


TABLE_VARIANTS = ("1", "2", "3", "L", "S", "SU", "W")


def rouge_all(
    candidate: TextOrTokens,
    references: Sequence[TextOrTokens],
    options: RougeOptions = RougeOptions(),
    variants: Sequence[str] = TABLE_VARIANTS,
) -> dict[str, float]:
    """Metric name -> value for every requested variant and each of F/P/R.

    The default variant set yields the 21 names ``ROUGE-1-F`` ... ``ROUGE-W-1.2-R``.
    """
    cand = preprocess(candidate, options)
    refs = [preprocess(r, options) for r in references]
    out = {}
    for v in variants:
        if v in ("1", "2", "3", "4"):
            res = rouge_n(cand, refs, int(v), options)
        elif v == "L":
            res = rouge_l(cand, refs, options)
        elif v == "W":
            res = rouge_w(cand, refs, options)
        elif v == "S":
            res = rouge_s(cand, refs, options)
        elif v == "SU":
            res = rouge_su(cand, refs, options)
        else:
            raise InvalidArgumentError(f"unknown ROUGE variant {v!r}")
        out[f"{res.variant}-F"] = res.f
        out[f"{res.variant}-P"] = res.precision
        out[f"{res.variant}-R"] = res.recall
    return out
