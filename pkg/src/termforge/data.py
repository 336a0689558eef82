"""Access to bundled data files (stop list, tag lexicon, seed patterns,
mini corpus, gold list). TERMFORGE_DATA overrides the bundled directory."""

import os
from pathlib import Path

from .linguistics import StopList, load_lexicon

_BUNDLED = Path(__file__).parent / "data"


def data_dir() -> Path:
    override = os.environ.get("TERMFORGE_DATA")
    return Path(override) if override else _BUNDLED


def stoplist_path() -> Path:
    return data_dir() / "stopwords.txt"


def lexicon_path() -> Path:
    return data_dir() / "lexicon.txt"


def patterns_path() -> Path:
    return data_dir() / "patterns.txt"


def minicorpus_dir() -> Path:
    return data_dir() / "minicorpus"


def gold_path() -> Path:
    return data_dir() / "gold.txt"


def default_stoplist() -> StopList:
    return StopList.from_file(stoplist_path())


def default_lexicon() -> dict:
    return load_lexicon(lexicon_path())
