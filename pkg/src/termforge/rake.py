"""Rapid keyword extraction: stop-word/punctuation-delimited candidates,
degree/frequency word scores, adjoining-keyword recovery, top-fraction cut."""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass

from .corpus import Corpus
from .linguistics import PUNCT_KIND, StopList, Token, tokenize
from .terms import ScoredTerm, rank

DEFAULT_RATIO = 1 / 3
ADJOIN_MIN_OCCURRENCES = 3


@dataclass(frozen=True)
class CandidatePhrase:
    """One occurrence of a delimiter-free keyword candidate."""

    words: tuple[str, ...]  # lowercased
    start: int              # token index of the first word
    end: int                # token index past the last word


def split_candidates(tokens: list[Token], stops: StopList) -> list[CandidatePhrase]:
    """Maximal runs of non-stop word/number tokens between delimiters.

    Delimiters are stop words and punctuation (sentence boundaries are
    punctuation, so they delimit too). Every occurrence is recorded.
    """
    candidates = []
    run: list[str] = []
    run_start = 0
    for i, tok in enumerate(tokens):
        if tok.kind == PUNCT_KIND or tok.surface in stops:
            if run:
                candidates.append(CandidatePhrase(tuple(run), run_start, i))
                run = []
        else:
            if not run:
                run_start = i
            run.append(tok.surface.lower())
    if run:
        candidates.append(CandidatePhrase(tuple(run), run_start, len(tokens)))
    return candidates


def word_scores(candidates: list[CandidatePhrase]) -> dict[str, float]:
    """score(w) = degree(w) / frequency(w) over all candidate occurrences."""
    freq: Counter = Counter()
    degree: Counter = Counter()
    for cand in candidates:
        for w in cand.words:
            freq[w] += 1
            degree[w] += len(cand.words)
    return {w: degree[w] / freq[w] for w in freq}


def phrase_scores(candidates: list[CandidatePhrase],
                  scores: dict[str, float]) -> list[ScoredTerm]:
    """Score each distinct candidate as the sum of its member word scores.

    Duplicate occurrences merge into one term with an occurrence count.
    """
    first_pos: dict[tuple, int] = {}
    counts: Counter = Counter()
    for cand in candidates:
        counts[cand.words] += 1
        if cand.words not in first_pos:
            first_pos[cand.words] = cand.start
    out = []
    for words, count in counts.items():
        out.append(ScoredTerm(
            term=" ".join(words),
            score=sum(scores[w] for w in words),
            count=count,
            first_pos=first_pos[words],
        ))
    return out


def recover_adjoining(tokens: list[Token], candidates: list[CandidatePhrase],
                      stops: StopList, scores: dict[str, float],
                      min_occurrences: int = ADJOIN_MIN_OCCURRENCES) -> list[ScoredTerm]:
    """Combined keywords: candidate pairs joined by interior stop words.

    A pair of candidates separated only by stop-word word tokens forms a
    combined keyword; it is kept when the exact combined word sequence occurs
    at least min_occurrences times in the document. Interior stop words
    contribute 0 to the score.
    """
    by_start = {c.start: c for c in candidates}
    combined: dict[tuple, list[int]] = defaultdict(list)
    for cand in candidates:
        i = cand.end
        interior = []
        while i < len(tokens) and tokens[i].kind != PUNCT_KIND and tokens[i].surface in stops:
            interior.append(tokens[i].surface.lower())
            i += 1
        if interior and i in by_start:
            nxt = by_start[i]
            key = cand.words + tuple(interior) + nxt.words
            combined[key].append(cand.start)
    out = []
    for words, starts in combined.items():
        if len(starts) >= min_occurrences:
            out.append(ScoredTerm(
                term=" ".join(words),
                score=sum(scores.get(w, 0.0) for w in words),
                count=len(starts),
                first_pos=min(starts),
            ))
    return out


def select_top(scored: list[ScoredTerm], ratio: float = DEFAULT_RATIO) -> list[ScoredTerm]:
    """Top ceil(ratio * N) terms by score; deterministic tie-break."""
    if not scored:
        return []
    keep = math.ceil(ratio * len(scored))
    return rank(scored)[:keep]


class RakeExtractor:
    """Full pipeline over a corpus, treated as one concatenated document."""

    name = "rake"

    def __init__(self, stops: StopList, ratio: float = DEFAULT_RATIO):
        self.stops = stops
        self.ratio = ratio

    def config(self) -> dict:
        return {"ratio": self.ratio}

    def extract_text(self, text: str) -> list[ScoredTerm]:
        tokens = tokenize(text)
        candidates = split_candidates(tokens, self.stops)
        scores = word_scores(candidates)
        scored = phrase_scores(candidates, scores)
        scored.extend(recover_adjoining(tokens, candidates, self.stops, scores))
        return select_top(scored, self.ratio)

    def extract(self, corpus: Corpus) -> list[ScoredTerm]:
        return self.extract_text(corpus.full_text())
