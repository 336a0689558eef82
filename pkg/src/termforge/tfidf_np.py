"""Noun-phrase TF-IDF extraction over a multi-document corpus."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Corpus
from .linguistics import PhraseFilter, StopList, analyze, match_phrases
from .terms import ScoredTerm, rank

DEFAULT_FILTER = PhraseFilter("(ADJ|NOUN)* NOUN", min_words=1, max_words=6)


class SingleDocumentError(ValueError):
    def __init__(self):
        super().__init__("TF-IDF requires a multi-document corpus")


@dataclass
class CandidateTerm:
    term: tuple[str, ...]
    f: int = 0                       # corpus frequency (sum over documents)
    docs: set = field(default_factory=set)
    first_pos: int = 0


@dataclass
class DocFrequencyTable:
    total_docs: int
    doc_counts: dict  # term -> number of documents containing it

    def df(self, term) -> int:
        if term not in self.doc_counts:
            raise KeyError(f"unknown term: {term!r}")
        return self.doc_counts[term]


def candidate_terms(tagged_docs, doc_ids,
                    phrase_filter: PhraseFilter = DEFAULT_FILTER,
                    stops: StopList | None = None) -> dict[tuple, CandidateTerm]:
    """Noun-phrase candidates with per-document presence and corpus frequency."""
    if len(doc_ids) < 2:
        raise SingleDocumentError()
    table: dict[tuple, CandidateTerm] = {}
    pos = 0
    for doc_id, sentences in zip(doc_ids, tagged_docs):
        for sentence in sentences:
            for phrase in match_phrases(sentence, phrase_filter, offset=pos):
                key = phrase.lemmas
                if stops is not None and (key[0] in stops or key[-1] in stops):
                    continue
                if key not in table:
                    table[key] = CandidateTerm(key, first_pos=phrase.start)
                entry = table[key]
                entry.f += 1
                entry.docs.add(doc_id)
            pos += len(sentence)
    return table


def doc_frequency_table(candidates: dict[tuple, CandidateTerm],
                        total_docs: int) -> DocFrequencyTable:
    return DocFrequencyTable(total_docs,
                             {k: len(v.docs) for k, v in candidates.items()})


def idf(term, table: DocFrequencyTable) -> float:
    """Natural log of D / D_i; 0 when the term is in every document."""
    return math.log(table.total_docs / table.df(term))


def tf_idf(term, candidates: dict[tuple, CandidateTerm],
           table: DocFrequencyTable) -> float:
    return candidates[term].f * idf(term, table)


class TfidfExtractor:
    name = "tfidf"

    def __init__(self, lexicon: dict, stops: StopList,
                 phrase_filter: PhraseFilter = DEFAULT_FILTER,
                 threshold: float = 0.0):
        self.lexicon = lexicon
        self.stops = stops
        self.phrase_filter = phrase_filter
        self.threshold = threshold

    def config(self) -> dict:
        return {"filter": self.phrase_filter.pattern,
                "max_words": self.phrase_filter.max_words,
                "threshold": self.threshold}

    def extract(self, corpus: Corpus) -> list[ScoredTerm]:
        if len(corpus) < 2:
            raise SingleDocumentError()
        tagged_docs = [analyze(doc.text, self.lexicon) for doc in corpus.documents]
        candidates = candidate_terms(tagged_docs, [d.id for d in corpus.documents],
                                     self.phrase_filter, self.stops)
        table = doc_frequency_table(candidates, len(corpus))
        scored = []
        for key, cand in candidates.items():
            score = tf_idf(key, candidates, table)
            if score > self.threshold:
                scored.append(ScoredTerm(term=" ".join(key), score=score,
                                         count=cand.f, first_pos=cand.first_pos))
        return rank(scored)
