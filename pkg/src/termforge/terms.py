"""Shared term containers used by every extractor."""

from dataclasses import dataclass


@dataclass(frozen=True)
class ScoredTerm:
    """A ranked extraction result: normalized term text plus method score.

    first_pos is the token index of the earliest occurrence and is used
    only for deterministic tie-breaking; it is not part of equality-relevant
    output semantics.
    """

    term: str
    score: float
    count: int = 1
    first_pos: int = 0


def rank(terms):
    """Sort descending by score, breaking ties by earliest occurrence then text."""
    return sorted(terms, key=lambda t: (-t.score, t.first_pos, t.term))
