"""Shared linguistic layer: tokenization, sentence splitting, stop lists,
rule-based coarse POS tagging, lemmatization and POS-pattern phrase filters.

Everything here is a pure function over immutable inputs, so extractors can
process documents in parallel without coordination.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

WORD = "word"
NUMBER = "number"
PUNCT_KIND = "punctuation"

TAGS = ("NOUN", "ADJ", "VERB", "ADP", "DET", "CONJ", "NUM", "PUNCT", "OTHER")

# one letter per tag, used to compile phrase patterns against tag sequences
_TAG_CHAR = {
    "NOUN": "N",
    "ADJ": "A",
    "VERB": "V",
    "ADP": "P",
    "DET": "D",
    "CONJ": "C",
    "NUM": "M",
    "PUNCT": "U",
    "OTHER": "O",
}

_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*|[^\w\s]|_", re.UNICODE)
_NUM_RE = re.compile(r"\d+(?:[.,]\d+)*")

_SENT_FINAL = {".", "!", "?"}


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    kind: str  # word | number | punctuation


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str
    lemma: str


def tokenize(text: str) -> list[Token]:
    """Split text into word/number/punctuation tokens with character spans.

    Words keep internal hyphens ("off-season" is one token); every other
    non-alphanumeric character becomes a single punctuation token.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group()
        if _NUM_RE.fullmatch(surface):
            kind = NUMBER
        elif surface[0].isalnum():
            kind = WORD
        else:
            kind = PUNCT_KIND
        tokens.append(Token(surface, m.start(), m.end(), kind))
    return tokens


def split_sentences(tokens: list[Token]) -> list[tuple[int, int]]:
    """Return [start, end) token-index spans, breaking after . ! ? tokens."""
    spans = []
    start = 0
    for i, tok in enumerate(tokens):
        if tok.kind == PUNCT_KIND and tok.surface in _SENT_FINAL:
            spans.append((start, i + 1))
            start = i + 1
    if start < len(tokens):
        spans.append((start, len(tokens)))
    return spans


class StopList:
    """Case-insensitive stop-word membership."""

    def __init__(self, words=()):
        self.words = frozenset(w.lower() for w in words)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self):
        return len(self.words)

    @classmethod
    def from_file(cls, path) -> "StopList":
        words = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                words.append(line)
        return cls(words)


def load_lexicon(path) -> dict[str, str]:
    """Read a word TAB tag file into a lookup dict (lowercased keys)."""
    lexicon = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].rstrip()
        if not line:
            continue
        word, _, tag = line.partition("\t")
        tag = tag.strip().upper()
        if tag not in TAGS:
            raise ValueError(f"unknown tag {tag!r} for word {word!r} in {path}")
        lexicon[word.strip().lower()] = tag
    return lexicon


# suffix heuristics applied when a word is not in the lexicon; longest first
_SUFFIX_RULES = [
    ("ization", "NOUN"),
    ("ological", "ADJ"),
    ("ability", "NOUN"),
    ("ation", "NOUN"),
    ("ption", "NOUN"),
    ("culture", "NOUN"),
    ("ment", "NOUN"),
    ("ness", "NOUN"),
    ("ship", "NOUN"),
    ("hood", "NOUN"),
    ("ance", "NOUN"),
    ("ence", "NOUN"),
    ("logy", "NOUN"),
    ("tion", "NOUN"),
    ("sion", "NOUN"),
    ("ism", "NOUN"),
    ("ist", "NOUN"),
    ("ity", "NOUN"),
    ("acy", "NOUN"),
    ("ure", "NOUN"),
    ("able", "ADJ"),
    ("ible", "ADJ"),
    ("less", "ADJ"),
    ("ful", "ADJ"),
    ("ous", "ADJ"),
    ("ive", "ADJ"),
    ("ish", "ADJ"),
    ("ic", "ADJ"),
    ("al", "ADJ"),
    ("ize", "VERB"),
    ("ise", "VERB"),
    ("ify", "VERB"),
    ("ized", "VERB"),
    ("ised", "VERB"),
    ("ly", "OTHER"),
]


def tag_word(surface: str, lexicon: dict[str, str]) -> str:
    """Coarse tag for one word: lexicon lookup, then suffix rules, then NOUN."""
    lower = surface.lower()
    if lower in lexicon:
        return lexicon[lower]
    for suffix, tag in _SUFFIX_RULES:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 2:
            return tag
    return "NOUN"


_IRREGULAR_PLURALS = {
    "men": "man",
    "women": "woman",
    "children": "child",
    "people": "person",
    "feet": "foot",
    "teeth": "tooth",
    "mice": "mouse",
    "geese": "goose",
    "oxen": "ox",
    "leaves": "leaf",
    "lives": "life",
    "calves": "calf",
    "halves": "half",
}

_ES_SUFFIXES = ("ches", "shes", "sses")


def lemma_of(surface: str, tag: str) -> str:
    """Lowercase; reduce plural nouns by rule. Non-nouns are lowercased only."""
    lower = surface.lower()
    if tag != "NOUN":
        return lower
    if lower in _IRREGULAR_PLURALS:
        return _IRREGULAR_PLURALS[lower]
    if lower.endswith("ies") and len(lower) > 4:
        return lower[:-3] + "y"
    if lower.endswith(_ES_SUFFIXES) and len(lower) > 5:
        return lower[:-2]
    if lower.endswith(("xes", "zes")) and len(lower) > 4:
        return lower[:-2]
    if lower.endswith("oes") and len(lower) > 4:
        return lower[:-2]
    if lower.endswith("s") and not lower.endswith(("ss", "us", "is")) and len(lower) > 3:
        return lower[:-1]
    return lower


def pos_tag(tokens: list[Token], lexicon: dict[str, str]) -> list[TaggedToken]:
    """Assign one coarse tag and a lemma to every token. Total: nothing dropped."""
    tagged = []
    for tok in tokens:
        if tok.kind == PUNCT_KIND:
            tag = "PUNCT"
            lemma = tok.surface
        elif tok.kind == NUMBER:
            tag = "NUM"
            lemma = tok.surface
        else:
            tag = tag_word(tok.surface, lexicon)
            lemma = lemma_of(tok.surface, tag)
        tagged.append(TaggedToken(tok, tag, lemma))
    return tagged


@dataclass(frozen=True)
class PhraseFilter:
    """A POS-sequence constraint such as "(ADJ|NOUN)* NOUN" with length bounds."""

    pattern: str = "(ADJ|NOUN)* NOUN"
    min_words: int = 1
    max_words: int = 6

    def __post_init__(self):
        if self.min_words < 1 or self.max_words < self.min_words:
            raise ValueError("need 1 <= min_words <= max_words")
        _compile_tag_pattern(self.pattern)  # fail fast on bad patterns

    def matches(self, tags: list[str]) -> bool:
        if not self.min_words <= len(tags) <= self.max_words:
            return False
        seq = "".join(_TAG_CHAR[t] for t in tags)
        return _compile_tag_pattern(self.pattern).fullmatch(seq) is not None


@lru_cache(maxsize=None)
def _compile_tag_pattern(pattern: str):
    src = pattern
    for tag, char in sorted(_TAG_CHAR.items(), key=lambda kv: -len(kv[0])):
        src = src.replace(tag, char)
    src = src.replace(" ", "")
    return re.compile(src)


@dataclass(frozen=True)
class Phrase:
    """A filter-matching tagged-token subsequence of one sentence."""

    words: tuple[str, ...]   # lowercased surfaces
    lemmas: tuple[str, ...]
    start: int               # token index within the document
    end: int

    @property
    def text(self) -> str:
        return " ".join(self.words)


def match_phrases(tagged: list[TaggedToken], phrase_filter: PhraseFilter,
                  offset: int = 0) -> list[Phrase]:
    """All subsequences of one sentence that satisfy the filter.

    Nested sub-phrases are emitted too (needed for nested-term accounting);
    nothing can cross a PUNCT token because PUNCT never matches the pattern.
    """
    n = len(tagged)
    out = []
    for i in range(n):
        upper = min(n, i + phrase_filter.max_words)
        for j in range(i + phrase_filter.min_words, upper + 1):
            window = tagged[i:j]
            if phrase_filter.matches([t.tag for t in window]):
                out.append(Phrase(
                    words=tuple(t.token.surface.lower() for t in window),
                    lemmas=tuple(t.lemma for t in window),
                    start=offset + i,
                    end=offset + j,
                ))
    return out


def analyze(text: str, lexicon: dict[str, str]) -> list[list[TaggedToken]]:
    """Tokenize, sentence-split and tag a document; returns tagged sentences."""
    tokens = tokenize(text)
    tagged = pos_tag(tokens, lexicon)
    return [tagged[a:b] for a, b in split_sentences(tokens)]
