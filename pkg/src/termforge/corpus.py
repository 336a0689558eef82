"""Document ingestion, cumulative page sampling and extraction-run persistence."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path


class IngestError(Exception):
    pass


class EncodingError(IngestError):
    def __init__(self, path, offset):
        super().__init__(f"invalid UTF-8 in {path} at byte offset {offset}")
        self.path = str(path)
        self.offset = offset


class InsufficientTextError(Exception):
    def __init__(self, required, available):
        super().__init__(
            f"corpus too small: {required} pages required, {available} available")
        self.required = required
        self.available = available


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    source: str = "literal"


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    page_size: int = 400  # whitespace-delimited tokens per "page"

    def __post_init__(self):
        if self.page_size <= 0:
            raise ValueError("page_size must be positive")
        ids = [d.id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate document ids in corpus")

    def __len__(self):
        return len(self.documents)

    def full_text(self) -> str:
        return "\n".join(d.text for d in self.documents)

    def flat_tokens(self) -> list[str]:
        return self.full_text().split()

    def page_count(self) -> int:
        return len(self.flat_tokens()) // self.page_size

    def sha256(self) -> str:
        h = hashlib.sha256()
        for doc in self.documents:
            h.update(doc.id.encode("utf-8"))
            h.update(b"\x00")
            h.update(doc.text.encode("utf-8"))
            h.update(b"\x00")
        return h.hexdigest()


@dataclass(frozen=True)
class Sample:
    """One iteration of the cumulative protocol: the first k blocks of pages.

    Each page is materialized as its own Document so document-count-sensitive
    extractors (TF-IDF) see a multi-document corpus.
    """

    index: int  # 1-based
    documents: tuple[Document, ...]

    def as_corpus(self, page_size: int = 400) -> Corpus:
        return Corpus(self.documents, page_size=page_size)

    def text(self) -> str:
        return "\n".join(d.text for d in self.documents)


def ingest(paths, page_size: int = 400) -> Corpus:
    """Build a Corpus from text files and/or directories of .txt files.

    Directory contents are sorted by filename; document ids come from file
    stems (prefixed with the parent directory name on collision).
    """
    files: list[Path] = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            files.extend(sorted(q for q in p.iterdir()
                                if q.is_file() and q.suffix == ".txt"))
        elif p.is_file():
            files.append(p)
        else:
            raise IngestError(f"unreadable path: {p}")

    documents = []
    seen = set()
    for f in files:
        raw = f.read_bytes()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f, exc.start) from exc
        doc_id = f.stem
        if doc_id in seen:
            doc_id = f"{f.parent.name}/{f.stem}"
        seen.add(doc_id)
        documents.append(Document(id=doc_id, text=text, source=str(f)))
    return Corpus(tuple(documents), page_size=page_size)


def pages_of(corpus: Corpus) -> list[Document]:
    """Slice the flattened corpus token stream into page-sized Documents."""
    tokens = corpus.flat_tokens()
    size = corpus.page_size
    pages = []
    for n in range(len(tokens) // size):
        chunk = tokens[n * size:(n + 1) * size]
        pages.append(Document(id=f"page-{n + 1:04d}", text=" ".join(chunk),
                              source="page"))
    return pages


def cumulative_samples(corpus: Corpus, pages_per_step: int, steps: int) -> list[Sample]:
    """Sample k covers the first pages_per_step*k pages; samples are cumulative."""
    if pages_per_step <= 0 or steps <= 0:
        raise ValueError("pages_per_step and steps must be positive")
    pages = pages_of(corpus)
    required = pages_per_step * steps
    if len(pages) < required:
        raise InsufficientTextError(required, len(pages))
    return [Sample(index=k, documents=tuple(pages[:pages_per_step * k]))
            for k in range(1, steps + 1)]


def save_run(path, corpus: Corpus, extractor: str, config: dict, terms) -> None:
    """Persist an extraction run as JSON keyed by corpus hash and config."""
    payload = {
        "corpus_hash": corpus.sha256(),
        "extractor": extractor,
        "config": config,
        "terms": [{"term": t.term, "score": t.score} for t in terms],
    }
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8")


def load_run(path) -> dict:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise IngestError(f"malformed run file {path}: {exc}") from exc
    for key in ("corpus_hash", "extractor", "config", "terms"):
        if key not in payload:
            raise IngestError(f"malformed run file {path}: missing {key!r}")
    return payload
