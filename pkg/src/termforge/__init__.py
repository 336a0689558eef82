"""Terminology extraction toolkit: four extractors (rake, cvalue, tfidf,
rent) behind a common interface, plus a cumulative precision/recall
evaluation harness."""

from .corpus import Corpus, Document, cumulative_samples, ingest
from .terms import ScoredTerm

__version__ = "0.1.0"

__all__ = ["Corpus", "Document", "ScoredTerm", "cumulative_samples",
           "ingest", "__version__"]
