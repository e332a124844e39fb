"""Tokenization, stemming, tagging, chunking and idf-based keyword extraction.

Everything here is a pure function over immutable inputs.  The stopword list,
POS lexicon and abbreviation list are plain text files shipped in
``seraeval/data`` and are part of the analyzer fingerprint.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import TYPE_CHECKING, Callable, Hashable, Iterable, Mapping, Sequence

from .errors import InvalidArgumentError, InvalidStateError
from .porter import porter_stem

if TYPE_CHECKING:
    from .index import Index

__all__ = [
    "AnalyzerOptions",
    "Token",
    "TaggedToken",
    "IdfTable",
    "POS_TAGS",
    "stopwords",
    "tokenize",
    "porter_stem",
    "sentence_split",
    "ngrams",
    "pos_tag",
    "np_chunks",
    "compute_idf",
    "extract_keywords",
]

POS_TAGS = ("NOUN", "ADJ", "DET", "VERB", "OTHER")

# Letters/digits, with intra-word hyphens kept inside the token.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")
_NUMERIC_RE = re.compile(r"[\d-]+")


def _read_lines(name: str) -> list[str]:
    text = resources.files("seraeval").joinpath("data").joinpath(name).read_text(encoding="utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    """The bundled SMART English stopword list."""
    return frozenset(_read_lines("stopwords.txt"))


@lru_cache(maxsize=None)
def _abbreviations() -> frozenset[str]:
    return frozenset(_read_lines("abbreviations.txt"))


@lru_cache(maxsize=None)
def _lexicon() -> dict[str, str]:
    lex = {}
    for line in _read_lines("pos_lexicon.txt"):
        word, tag = line.split("\t")
        if tag not in POS_TAGS:
            raise InvalidStateError(f"bad tag {tag!r} for {word!r} in POS lexicon")
        lex[word] = tag
    return lex


@lru_cache(maxsize=None)
def _resource_digest() -> str:
    h = hashlib.sha256()
    for name in ("stopwords.txt",):
        h.update(resources.files("seraeval").joinpath("data").joinpath(name).read_bytes())
    return h.hexdigest()[:16]


@dataclass(frozen=True)
class AnalyzerOptions:
    lowercase: bool = True
    strip_numeric: bool = True
    remove_stopwords: bool = True
    stem: bool = True

    def to_dict(self) -> dict[str, bool]:
        return {
            "lowercase": self.lowercase,
            "strip_numeric": self.strip_numeric,
            "remove_stopwords": self.remove_stopwords,
            "stem": self.stem,
        }

    def fingerprint(self) -> str:
        """Stable digest of the options plus the stopword list and stemmer id."""
        payload = dict(self.to_dict(), stemmer="porter-1980-c", stopwords=_resource_digest())
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:24]


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    is_stopword: bool
    position: int


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    pos: str


def _stem_word(word: str) -> str:
    # Hyphenated compounds are stemmed part by part.
    if "-" in word:
        return "-".join(porter_stem(p) for p in word.split("-"))
    return porter_stem(word)


def tokenize(text: str, options: AnalyzerOptions = AnalyzerOptions()) -> list[Token]:
    """Split ``text`` into tokens.

    Tokens are maximal runs of letters/digits; punctuation (including ``/``)
    separates tokens except for hyphens inside a word.  ``position`` is the
    offset in the unfiltered token stream, so filtered tokens leave gaps and
    phrase adjacency is never invented across removed words.
    """
    stop = stopwords()
    out = []
    for pos, m in enumerate(_TOKEN_RE.finditer(text)):
        surface = m.group()
        if options.lowercase:
            surface = surface.lower()
        if options.strip_numeric and _NUMERIC_RE.fullmatch(surface):
            continue
        is_stop = surface.lower() in stop
        if options.remove_stopwords and is_stop:
            continue
        stem = _stem_word(surface) if options.stem else surface
        out.append(Token(surface, stem or surface, is_stop, pos))
    return out


_BOUNDARY_RE = re.compile(r"[.!?][\"')\]]*\s+(?=[\"'(\[]?[A-Z])|\n\s*\n")


def sentence_split(text: str) -> list[str]:
    """Split text into sentences.

    A boundary is ``[.!?]`` (plus closing quotes/brackets) followed by
    whitespace and a capital letter, unless the word before the period is a
    known abbreviation.  Blank lines always end a sentence.
    """
    abbrevs = _abbreviations()
    sentences = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        piece = text[start : m.start() + 1]
        if m.group()[0] == ".":
            words = piece.split()
            if words and words[-1].lower().lstrip("(\"'[") in abbrevs:
                continue
        if m.group()[0] == "\n":
            piece = text[start : m.start()]
        sentence = " ".join(piece.split())
        if sentence:
            sentences.append(sentence)
        start = m.end()
    tail = " ".join(text[start:].split())
    if tail:
        sentences.append(tail)
    return sentences


def ngrams(tokens: Sequence[Hashable], n: int) -> Counter:
    """Multiset of contiguous ``n``-grams (as tuples) over ``tokens``."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


_DETERMINERS = frozenset(
    "a an the this that these those each every some any no another either "
    "neither all both such what which whose".split()
)
_SUFFIX_RULES = (
    (("tion", "sion", "ness", "ment", "ity", "ism", "ase", "osis", "ance", "ence"), "NOUN"),
    (("ous", "ful", "ble", "al", "ive", "ic"), "ADJ"),
    (("ize", "ise", "ate", "ify"), "VERB"),
)


def _tag_word(word: str) -> str:
    word = word.lower()
    if word in _DETERMINERS:
        return "DET"
    if "-" in word:
        word = word.rsplit("-", 1)[1]
    lex = _lexicon()
    if word in lex:
        return lex[word]
    if _NUMERIC_RE.fullmatch(word):
        return "OTHER"
    singular = None
    if len(word) > 3 and word.endswith("ies"):
        singular = word[:-3] + "y"
    elif len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        singular = word[:-1]
    if singular is not None and lex.get(singular) == "NOUN":
        return "NOUN"
    for suffixes, tag in _SUFFIX_RULES:
        if word.endswith(suffixes):
            return tag
        if singular is not None and tag == "NOUN" and singular.endswith(suffixes):
            return "NOUN"
    return "OTHER"


def pos_tag(tokens: Sequence[Token]) -> list[TaggedToken]:
    """Coarse POS tags from the bundled lexicon, then suffix rules, else OTHER."""
    return [TaggedToken(t, _tag_word(t.surface)) for t in tokens]


def np_chunks(tagged: Sequence[TaggedToken]) -> list[list[Token]]:
    """Greedy left-to-right chunks matching ``DET? (ADJ|NOUN)* NOUN+``.

    The leading determiner is dropped from the emitted phrase.  Tokens must
    be adjacent in the original stream to belong to one chunk.
    """
    chunks = []
    i, n = 0, len(tagged)
    while i < n:
        j = i
        if tagged[j].pos == "DET":
            j += 1
        start = j
        last_noun = -1
        while j < n and tagged[j].pos in ("ADJ", "NOUN"):
            if j > start and tagged[j].token.position != tagged[j - 1].token.position + 1:
                break
            if tagged[j].pos == "NOUN":
                last_noun = j
            j += 1
        if last_noun >= start:
            chunks.append([tt.token for tt in tagged[start : last_noun + 1]])
            i = last_noun + 1
        else:
            # No noun in tagged[start:j], so no chunk can begin before j.
            i = max(i + 1, j)
    return chunks


def _smoothed_idf(n_docs: int, df: int) -> float:
    return math.log((n_docs + 1) / (df + 1))


@dataclass(frozen=True)
class IdfTable:
    """Term idf values plus a phrase document-frequency lookup.

    ``idf(t) = ln((N + 1) / (df(t) + 1))``; unseen terms get ``ln(N + 1)``.
    """

    n_docs: int
    idf_by_term: Mapping[str, float]
    mean_nonstop_idf: float
    phrase_df: Callable[[Sequence[str]], int] = field(repr=False)

    def idf(self, term: str) -> float:
        value = self.idf_by_term.get(term)
        return value if value is not None else _smoothed_idf(self.n_docs, 0)

    def phrase_idf(self, phrase: Sequence[str]) -> float:
        if len(phrase) == 1:
            return self.idf(phrase[0])
        return _smoothed_idf(self.n_docs, self.phrase_df(phrase))


def compute_idf(index: "Index") -> IdfTable:
    if index.doc_count < 1 or not index.vocabulary_size:
        raise InvalidStateError("cannot compute idf over an empty index")
    n = index.doc_count
    idf = {t: _smoothed_idf(n, df) for t, df in index.iter_df()}
    stop = stopwords()
    nonstop = [v for t, v in idf.items() if t not in stop]
    mean = math.fsum(nonstop) / len(nonstop) if nonstop else 0.0
    return IdfTable(n, idf, mean, index.phrase_df)


def extract_keywords(
    summary_tokens: Sequence[Token], idf_table: IdfTable, max_len: int = 3
) -> set[tuple[str, ...]]:
    """Stemmed 1..max_len-grams whose idf exceeds the mean non-stopword idf.

    N-grams span only tokens adjacent in the original text and never include
    a stopword.
    """
    threshold = idf_table.mean_nonstop_idf
    keywords = set()
    toks = list(summary_tokens)
    for i, first in enumerate(toks):
        if first.is_stopword:
            continue
        phrase = [first.stem]
        for j in range(i, min(i + max_len, len(toks))):
            if j > i:
                tok = toks[j]
                if tok.is_stopword or tok.position != toks[j - 1].position + 1:
                    break
                phrase.append(tok.stem)
            key = tuple(phrase)
            if key not in keywords and idf_table.phrase_idf(key) > threshold:
                keywords.add(key)
    return keywords


def stems(tokens: Iterable[Token]) -> list[str]:
    return [t.stem for t in tokens]
