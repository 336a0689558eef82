"""C-Value extraction: linguistic-filter candidates with nested-term
frequency discounting. Emits multi-word terms only."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Corpus
from .linguistics import PhraseFilter, StopList, analyze, match_phrases
from .terms import ScoredTerm, rank

DEFAULT_FILTER = PhraseFilter("(ADJ|NOUN)* NOUN", min_words=2, max_words=6)


@dataclass
class TermStats:
    term: tuple[str, ...]  # lemma sequence
    f: int = 0             # total occurrences, nested ones included
    first_pos: int = 0

    @property
    def length(self) -> int:
        return len(self.term)


def generate_candidates(tagged_docs, phrase_filter: PhraseFilter = DEFAULT_FILTER,
                        stops: StopList | None = None) -> dict[tuple, TermStats]:
    """Collect filter-matching phrases (nested sub-phrases included) with
    total corpus frequencies, lemma-normalized.

    tagged_docs: iterable of documents, each a list of tagged sentences.
    Candidates starting or ending with a stop word are rejected.
    """
    stats: dict[tuple, TermStats] = {}
    pos = 0
    for sentences in tagged_docs:
        for sentence in sentences:
            for phrase in match_phrases(sentence, phrase_filter, offset=pos):
                key = phrase.lemmas
                if stops is not None and (key[0] in stops or key[-1] in stops):
                    continue
                if key not in stats:
                    stats[key] = TermStats(key, first_pos=phrase.start)
                stats[key].f += 1
            pos += len(sentence)
    return stats


def build_nested_index(candidates) -> dict[tuple, set[tuple]]:
    """N_t: the strictly longer candidates containing t contiguously."""
    terms = list(candidates)
    index: dict[tuple, set[tuple]] = {t: set() for t in terms}
    for t in terms:
        n = len(t)
        for longer in terms:
            if len(longer) <= n:
                continue
            if any(longer[i:i + n] == t for i in range(len(longer) - n + 1)):
                index[t].add(longer)
    return index


def c_value(stats: TermStats, nested: set[tuple], freq_of) -> float:
    """log2|t| * f(t), discounted by the mean frequency of containing terms."""
    weight = math.log2(stats.length)
    if not nested:
        return weight * stats.f
    nested_mass = sum(freq_of(v) for v in nested) / len(nested)
    return weight * (stats.f - nested_mass)


def score_candidates(candidates: dict[tuple, TermStats]) -> list[ScoredTerm]:
    index = build_nested_index(candidates)
    out = []
    for key, stats in candidates.items():
        score = c_value(stats, index[key], lambda v: candidates[v].f)
        out.append(ScoredTerm(term=" ".join(key), score=score,
                              count=stats.f, first_pos=stats.first_pos))
    return out


class CValueExtractor:
    name = "cvalue"

    def __init__(self, lexicon: dict, stops: StopList,
                 phrase_filter: PhraseFilter = DEFAULT_FILTER,
                 threshold: float | None = 0.0):
        if phrase_filter.min_words < 2:
            raise ValueError("c-value operates on multi-word terms only")
        self.lexicon = lexicon
        self.stops = stops
        self.phrase_filter = phrase_filter
        self.threshold = threshold  # None keeps everything, ranked

    def config(self) -> dict:
        return {"filter": self.phrase_filter.pattern,
                "max_words": self.phrase_filter.max_words,
                "threshold": self.threshold}

    def extract(self, corpus: Corpus) -> list[ScoredTerm]:
        tagged_docs = [analyze(doc.text, self.lexicon) for doc in corpus.documents]
        candidates = generate_candidates(tagged_docs, self.phrase_filter, self.stops)
        scored = score_candidates(candidates)
        if self.threshold is not None:
            scored = [t for t in scored if t.score > self.threshold]
        return rank(scored)
