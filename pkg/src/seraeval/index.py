"""Positional inverted index with collection statistics, plus on-disk persistence.

On-disk layout (format version "1")::

    <dir>/manifest.json   format tag, version, N, total tokens, analyzer options,
                          analyzer fingerprint, sha256 of every data file
    <dir>/docs.json       {"ids": [...], "lengths": [...]}  (ids sorted)
    <dir>/terms.json      {term: [df, cf]}
    <dir>/postings.jsonl  one line per term: [term, [[doc_idx, [pos, ...]], ...]]
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    AnalyzerMismatchError,
    IndexingError,
    IntegrityError,
    InvalidArgumentError,
    NotFoundError,
    UnsupportedFormatError,
)
from .textproc import AnalyzerOptions, tokenize

log = logging.getLogger(__name__)

FORMAT_TAG = "seraeval-index"
FORMAT_VERSION = "1"
_DATA_FILES = ("docs.json", "terms.json", "postings.jsonl")


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    title: Optional[str] = None

    def indexable_text(self) -> str:
        return f"{self.title}\n{self.text}" if self.title else self.text


class Index:
    """Immutable positional index.

    Documents are addressed internally by their rank in sorted id order, so
    every posting list is sorted by doc id.
    """

    def __init__(
        self,
        doc_ids: Sequence[str],
        doc_lengths: Sequence[int],
        postings: Mapping[str, Mapping[int, Sequence[int]]],
        options: AnalyzerOptions,
    ):
        self._doc_ids = tuple(doc_ids)
        self._doc_lengths = tuple(doc_lengths)
        self._doc_pos = {d: i for i, d in enumerate(self._doc_ids)}
        self._postings = {
            t: {d: tuple(p) for d, p in sorted(plist.items())} for t, plist in postings.items()
        }
        self._cf = {t: sum(len(p) for p in plist.values()) for t, plist in self._postings.items()}
        self.options = options
        self.fingerprint = options.fingerprint()
        self.total_token_count = sum(self._doc_lengths)

    @property
    def doc_count(self) -> int:
        return len(self._doc_ids)

    @property
    def vocabulary_size(self) -> int:
        return len(self._postings)

    @property
    def doc_ids(self) -> tuple[str, ...]:
        return self._doc_ids

    def has_doc(self, doc_id: str) -> bool:
        return doc_id in self._doc_pos

    def doc_index(self, doc_id: str) -> int:
        try:
            return self._doc_pos[doc_id]
        except KeyError:
            raise NotFoundError(f"unknown document id {doc_id!r}") from None

    def doc_length(self, doc_id: str) -> int:
        return self._doc_lengths[self.doc_index(doc_id)]

    def length_at(self, doc_idx: int) -> int:
        return self._doc_lengths[doc_idx]

    def df(self, term: str) -> int:
        return len(self._postings.get(term, ()))

    def cf(self, term: str) -> int:
        return self._cf.get(term, 0)

    def iter_df(self) -> Iterator[tuple[str, int]]:
        for term in sorted(self._postings):
            yield term, len(self._postings[term])

    def terms(self) -> list[str]:
        return sorted(self._postings)

    def term_postings(self, term: str) -> Mapping[int, tuple[int, ...]]:
        """doc_idx -> positions for ``term`` (empty when unseen)."""
        return self._postings.get(term, {})

    def postings(self, term: str) -> list[tuple[str, tuple[int, ...]]]:
        return [(self._doc_ids[d], p) for d, p in self.term_postings(term).items()]

    def term_count(self, term: str, doc_id: str) -> int:
        return len(self.term_postings(term).get(self.doc_index(doc_id), ()))

    def phrase_df(self, phrase: Sequence[str]) -> int:
        """Number of documents containing ``phrase`` at consecutive positions."""
        if not phrase:
            return 0
        lists = [self.term_postings(t) for t in phrase]
        if any(not pl for pl in lists):
            return 0
        common = set(lists[0])
        for pl in lists[1:]:
            common &= pl.keys()
        count = 0
        for d in common:
            starts = set(lists[0][d])
            for offset, pl in enumerate(lists[1:], start=1):
                starts &= {p - offset for p in pl[d]}
                if not starts:
                    break
            if starts:
                count += 1
        return count

    def check_fingerprint(self, fingerprint: str) -> None:
        if fingerprint != self.fingerprint:
            raise AnalyzerMismatchError(
                f"query analyzer fingerprint {fingerprint} does not match index "
                f"fingerprint {self.fingerprint}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Index):
            return NotImplemented
        return (
            self._doc_ids == other._doc_ids
            and self._doc_lengths == other._doc_lengths
            and self._postings == other._postings
            and self.options == other.options
        )

    def __repr__(self) -> str:
        return (
            f"Index(N={self.doc_count}, vocab={self.vocabulary_size}, "
            f"tokens={self.total_token_count})"
        )


def build_index(corpus: Iterable[Document], options: AnalyzerOptions = AnalyzerOptions()) -> Index:
    docs: dict[str, Document] = {}
    for doc in corpus:
        if not doc.id:
            raise IndexingError("document with empty id")
        if doc.id in docs:
            raise IndexingError(f"duplicate document id {doc.id!r}")
        if not doc.text.strip():
            raise InvalidArgumentError(f"document {doc.id!r} has empty text")
        docs[doc.id] = doc
    if not docs:
        raise InvalidArgumentError("cannot index an empty corpus")

    doc_ids = sorted(docs)
    lengths = []
    postings: dict[str, dict[int, list[int]]] = {}
    for idx, doc_id in enumerate(doc_ids):
        tokens = tokenize(docs[doc_id].indexable_text(), options)
        lengths.append(len(tokens))
        for tok in tokens:
            postings.setdefault(tok.stem, {}).setdefault(idx, []).append(tok.position)
    index = Index(doc_ids, lengths, postings, options)
    log.info("built %r", index)
    return index


def read_corpus(path: str | Path) -> list[Document]:
    """Read a JSON Lines corpus (``id``, ``text``, optional ``title``).

    Blank lines and lines starting with ``#`` are skipped.
    """
    docs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise IndexingError(f"{path}:{lineno}: malformed JSON ({exc.msg})") from None
            if not isinstance(obj, dict) or not isinstance(obj.get("id"), str) or not isinstance(
                obj.get("text"), str
            ):
                raise IndexingError(f"{path}:{lineno}: expected an object with string 'id' and 'text'")
            title = obj.get("title")
            docs.append(Document(obj["id"], obj["text"], title if isinstance(title, str) else None))
    return docs


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def save_index(index: Index, directory: str | Path) -> Path:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    (out / "docs.json").write_text(
        json.dumps({"ids": list(index.doc_ids), "lengths": list(index._doc_lengths)}),
        encoding="utf-8",
    )
    terms = {t: [index.df(t), index.cf(t)] for t in index.terms()}
    (out / "terms.json").write_text(json.dumps(terms, sort_keys=True), encoding="utf-8")
    with open(out / "postings.jsonl", "w", encoding="utf-8") as fh:
        for t in index.terms():
            plist = [[d, list(p)] for d, p in index.term_postings(t).items()]
            fh.write(json.dumps([t, plist], separators=(",", ":")) + "\n")
    manifest = {
        "format": FORMAT_TAG,
        "format_version": FORMAT_VERSION,
        "doc_count": index.doc_count,
        "total_token_count": index.total_token_count,
        "vocabulary_size": index.vocabulary_size,
        "analyzer": index.options.to_dict(),
        "fingerprint": index.fingerprint,
        "checksums": {name: _sha256(out / name) for name in _DATA_FILES},
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return out


def load_index(directory: str | Path) -> Index:
    src = Path(directory)
    manifest_path = src / "manifest.json"
    if not manifest_path.is_file():
        raise UnsupportedFormatError(f"no index manifest in {src}")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError:
        raise UnsupportedFormatError(f"unreadable index manifest in {src}") from None
    if not isinstance(manifest, dict) or manifest.get("format") != FORMAT_TAG:
        raise UnsupportedFormatError(f"{manifest_path} is not a {FORMAT_TAG} manifest")
    version = str(manifest.get("format_version"))
    if version != FORMAT_VERSION:
        raise UnsupportedFormatError(f"unsupported index format version {version!r}")

    checksums = manifest.get("checksums", {})
    for name in _DATA_FILES:
        path = src / name
        if not path.is_file():
            raise IntegrityError(f"index file {name} is missing")
        if checksums.get(name) != _sha256(path):
            raise IntegrityError(f"checksum mismatch for index file {name}")

    try:
        docs = json.loads((src / "docs.json").read_text(encoding="utf-8"))
        terms = json.loads((src / "terms.json").read_text(encoding="utf-8"))
        postings = {}
        with open(src / "postings.jsonl", encoding="utf-8") as fh:
            for line in fh:
                term, plist = json.loads(line)
                postings[term] = {int(d): p for d, p in plist}
        options = AnalyzerOptions(**manifest["analyzer"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise IntegrityError(f"corrupt index data: {exc}") from None

    index = Index(docs["ids"], docs["lengths"], postings, options)
    stats_ok = (
        index.doc_count == manifest["doc_count"]
        and index.total_token_count == manifest["total_token_count"]
        and all(terms.get(t) == [index.df(t), index.cf(t)] for t in index.terms())
        and len(terms) == index.vocabulary_size
    )
    if not stats_ok:
        raise IntegrityError(f"index statistics in {src} disagree with the manifest")
    if index.fingerprint != manifest["fingerprint"]:
        raise AnalyzerMismatchError(
            f"index in {src} was built with analyzer {manifest['fingerprint']}, "
            f"this installation computes {index.fingerprint}"
        )
    return index
