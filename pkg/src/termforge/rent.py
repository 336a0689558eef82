"""Regex-seeded extraction: seed terms from domain patterns, stop-word
pruning, noun/adjective phrase expansion anchored on seeds, and a
three-component weight (noun flag + pattern support + frequency)."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Corpus
from .linguistics import PhraseFilter, StopList, analyze, lemma_of, match_phrases
from .terms import ScoredTerm, rank

EXPANSION_FILTER = PhraseFilter("(ADJ|NOUN)* NOUN", min_words=2, max_words=6)


class PatternError(ValueError):
    pass


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SeedPattern:
    name: str
    source: str

    def __post_init__(self):
        try:
            compiled = re.compile(self.source, re.IGNORECASE)
        except re.error as exc:
            raise PatternError(f"pattern {self.name!r} does not compile: {exc}") from exc
        if compiled.groups != 1:
            raise PatternError(
                f"pattern {self.name!r} must have exactly one capture group "
                f"(has {compiled.groups})")

    @property
    def regex(self):
        return re.compile(self.source, re.IGNORECASE)


@dataclass
class SeedSet:
    seeds: set = field(default_factory=set)
    pattern_hits: dict = field(default_factory=dict)  # word -> distinct patterns

    def hits(self, word: str) -> int:
        return self.pattern_hits.get(word, 0)


@dataclass(frozen=True)
class WeightConfig:
    a: float = 1.0   # structural component (noun flag + pattern support)
    b: float = 0.1   # frequency component

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or (self.a == 0 and self.b == 0):
            raise ValueError("need a >= 0, b >= 0, not both zero")


def load_patterns(path) -> list[SeedPattern]:
    """Pattern file: one `name TAB regex` per line, '#' comments."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"pattern file not found: {path}")
    patterns = []
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        name, sep, source = line.partition("\t")
        if not sep or not source.strip():
            raise ConfigError(f"malformed pattern line (need name TAB regex): {line!r}")
        patterns.append(SeedPattern(name.strip(), source.strip()))
    return patterns


def extract_seeds(texts, patterns: list[SeedPattern]) -> SeedSet:
    """Run every pattern over every text; captures become lemma seeds.

    pattern_hits counts the number of distinct patterns that captured each
    word, not the number of matches.
    """
    per_pattern: dict[str, set] = {p.name: set() for p in patterns}
    for pattern in patterns:
        regex = pattern.regex
        for text in texts:
            for match in regex.finditer(text):
                capture = match.group(1)
                if capture is None:
                    continue
                for word in capture.split():
                    per_pattern[pattern.name].add(lemma_of(word, "NOUN"))
    seed_set = SeedSet()
    for captured in per_pattern.values():
        for word in captured:
            seed_set.seeds.add(word)
            seed_set.pattern_hits[word] = seed_set.pattern_hits.get(word, 0) + 1
    return seed_set


def prune_seeds(seed_set: SeedSet, stops: StopList) -> SeedSet:
    kept = {w for w in seed_set.seeds if w not in stops}
    return SeedSet(seeds=kept,
                   pattern_hits={w: n for w, n in seed_set.pattern_hits.items()
                                 if w in kept})


@dataclass
class CorpusIndex:
    """Per-lemma evidence collected in one pass over the tagged corpus."""

    frequency: Counter = field(default_factory=Counter)
    noun_lemmas: set = field(default_factory=set)
    first_pos: dict = field(default_factory=dict)

    def is_noun(self, lemma: str) -> bool:
        # seeds never seen in the corpus default to noun, matching the
        # unknown-word tagging default
        return lemma in self.noun_lemmas or lemma not in self.frequency


def index_corpus(tagged_docs) -> CorpusIndex:
    index = CorpusIndex()
    pos = 0
    for sentences in tagged_docs:
        for sentence in sentences:
            for i, tok in enumerate(sentence):
                if tok.tag == "PUNCT":
                    continue
                index.frequency[tok.lemma] += 1
                index.first_pos.setdefault(tok.lemma, pos + i)
                if tok.tag == "NOUN":
                    index.noun_lemmas.add(tok.lemma)
            pos += len(sentence)
    return index


def expand_terms(tagged_docs, seed_set: SeedSet,
                 phrase_filter: PhraseFilter = EXPANSION_FILTER) -> dict[tuple, list]:
    """Candidates: seed words plus noun/adjective phrases containing a seed.

    Returns lemma-tuple -> [first occurrence position, occurrence count].
    """
    candidates: dict[tuple, list] = {}
    pos = 0
    for sentences in tagged_docs:
        for sentence in sentences:
            for phrase in match_phrases(sentence, phrase_filter, offset=pos):
                if any(lemma in seed_set.seeds for lemma in phrase.lemmas):
                    entry = candidates.setdefault(phrase.lemmas, [phrase.start, 0])
                    entry[1] += 1
            pos += len(sentence)
    index = index_corpus(tagged_docs)
    for seed in seed_set.seeds:
        candidates.setdefault(
            (seed,), [index.first_pos.get(seed, 1 << 30),
                      index.frequency.get(seed, 0)])
    return candidates


def word_weight(is_noun: bool, pattern_hits: int, frequency: int,
                cfg: WeightConfig) -> float:
    """a * ((1 if noun) + pattern hits) + b * frequency."""
    base = (1 if is_noun else 0) + pattern_hits
    return cfg.a * base + cfg.b * frequency


def weigh(term: tuple[str, ...], seed_set: SeedSet, cfg: WeightConfig,
          index: CorpusIndex) -> float:
    """Term score: sum of constituent word weights."""
    return sum(word_weight(index.is_noun(w), seed_set.hits(w),
                           index.frequency.get(w, 0), cfg)
               for w in term)


class RentExtractor:
    name = "rent"

    def __init__(self, lexicon: dict, stops: StopList,
                 patterns: list[SeedPattern], cfg: WeightConfig = WeightConfig()):
        if not patterns:
            raise ConfigError("at least one seed pattern is required")
        self.lexicon = lexicon
        self.stops = stops
        self.patterns = patterns
        self.cfg = cfg

    def config(self) -> dict:
        return {"patterns": [p.name for p in self.patterns],
                "a": self.cfg.a, "b": self.cfg.b}

    def extract(self, corpus: Corpus) -> list[ScoredTerm]:
        texts = [doc.text for doc in corpus.documents]
        seed_set = prune_seeds(extract_seeds(texts, self.patterns), self.stops)
        if not seed_set.seeds:
            return []
        tagged_docs = [analyze(doc.text, self.lexicon) for doc in corpus.documents]
        index = index_corpus(tagged_docs)
        candidates = expand_terms(tagged_docs, seed_set)
        scored = [ScoredTerm(term=" ".join(term),
                             score=weigh(term, seed_set, self.cfg, index),
                             count=max(count, 1),
                             first_pos=first)
                  for term, (first, count) in candidates.items()]
        return rank(scored)
