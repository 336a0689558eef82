import itertools
import random

import pytest

from termforge.linguistics import StopList, tokenize
from termforge.rake import (
    RakeExtractor,
    phrase_scores,
    recover_adjoining,
    select_top,
    split_candidates,
    word_scores,
)
from termforge.terms import ScoredTerm

FIXTURE_TEXT = "deep learning improves crop yield. crop yield depends on soil."
FIXTURE_STOPS = StopList(["improves", "depends", "on"])


def run_fixture():
    tokens = tokenize(FIXTURE_TEXT)
    return tokens, split_candidates(tokens, FIXTURE_STOPS)


class TestSplitCandidates:
    def test_fixture_candidates(self):
        _, candidates = run_fixture()
        assert [c.words for c in candidates] == [
            ("deep", "learning"), ("crop", "yield"), ("crop", "yield"), ("soil",)]

    def test_all_stop_words(self):
        stops = StopList(["of", "the", "and"])
        assert split_candidates(tokenize("of the and"), stops) == []

    def test_single_word(self):
        assert [c.words for c in split_candidates(tokenize("wheat"), StopList())] \
            == [("wheat",)]

    def test_no_stop_word_in_candidates(self):
        tokens = tokenize("the wheat of the arid zone, and the dry soil")
        stops = StopList(["the", "of", "and"])
        for cand in split_candidates(tokens, stops):
            assert all(w not in stops for w in cand.words)


class TestWordScores:
    def test_fixture_scores(self):
        _, candidates = run_fixture()
        scores = word_scores(candidates)
        assert scores == {"deep": 2.0, "learning": 2.0,
                          "crop": 2.0, "yield": 2.0, "soil": 1.0}

    def test_single_candidate(self):
        scores = word_scores(split_candidates(tokenize("wheat"), StopList()))
        assert scores == {"wheat": 1.0}

    def test_three_word_candidate(self):
        scores = word_scores(split_candidates(tokenize("a b c"), StopList()))
        assert scores == {"a": 3.0, "b": 3.0, "c": 3.0}


class TestPhraseScores:
    def test_fixture(self):
        _, candidates = run_fixture()
        scored = {t.term: t for t in phrase_scores(candidates, word_scores(candidates))}
        assert scored["deep learning"].score == 4.0
        assert scored["crop yield"].score == 4.0
        assert scored["crop yield"].count == 2
        assert scored["soil"].score == 1.0

    def test_empty(self):
        assert phrase_scores([], {}) == []

    def test_three_words_alone(self):
        candidates = split_candidates(tokenize("a b c"), StopList())
        scored = phrase_scores(candidates, word_scores(candidates))
        assert scored[0].score == 9.0


class TestAdjoining:
    STOPS = StopList(["of"])

    def test_three_occurrences_added(self):
        text = "wheat of gold, wheat of gold, wheat of gold"
        tokens = tokenize(text)
        candidates = split_candidates(tokens, self.STOPS)
        scores = word_scores(candidates)
        combined = recover_adjoining(tokens, candidates, self.STOPS, scores)
        assert [t.term for t in combined] == ["wheat of gold"]
        assert combined[0].count == 3
        # interior stop word contributes 0
        assert combined[0].score == scores["wheat"] + scores["gold"]

    def test_two_occurrences_not_added(self):
        text = "wheat of gold, wheat of gold"
        tokens = tokenize(text)
        candidates = split_candidates(tokens, self.STOPS)
        assert recover_adjoining(tokens, candidates, self.STOPS,
                                 word_scores(candidates)) == []

    def test_no_interior_stops_unchanged(self):
        tokens = tokenize("wheat gold wheat gold wheat gold")
        candidates = split_candidates(tokens, self.STOPS)
        assert recover_adjoining(tokens, candidates, self.STOPS,
                                 word_scores(candidates)) == []


class TestSelectTop:
    def test_nine_candidates_ratio_third(self):
        scored = [ScoredTerm(f"t{i}", float(i)) for i in range(9)]
        assert len(select_top(scored, 1 / 3)) == 3

    def test_tie_break_by_first_occurrence(self):
        scored = [ScoredTerm("crop yield", 4.0, first_pos=3),
                  ScoredTerm("deep learning", 4.0, first_pos=0),
                  ScoredTerm("soil", 1.0, first_pos=9)]
        top = select_top(scored, 1 / 3)
        assert [t.term for t in top] == ["deep learning"]

    def test_empty(self):
        assert select_top([], 1 / 3) == []

    @pytest.mark.parametrize("n,expect", [(1, 1), (2, 1), (3, 1), (4, 2), (9, 3), (10, 4)])
    def test_ceiling(self, n, expect):
        scored = [ScoredTerm(f"t{i}", float(i)) for i in range(n)]
        assert len(select_top(scored, 1 / 3)) == expect


# ---------------------------------------------------------------------------
# independent brute-force oracle

def oracle_candidates(tokens, stop_words):
    """Re-derive candidate occurrences with a separate linear scan."""
    out, run = [], []
    for tok in tokens:
        is_delim = tok.kind == "punctuation" or tok.surface.lower() in stop_words
        if is_delim:
            if run:
                out.append(tuple(run))
            run = []
        else:
            run.append(tok.surface.lower())
    if run:
        out.append(tuple(run))
    return out


def oracle_scores(occurrences):
    words = {w for occ in occurrences for w in occ}
    word_score = {}
    for w in words:
        freq = sum(occ.count(w) for occ in occurrences)
        degree = sum(len(occ) * occ.count(w) for occ in occurrences)
        word_score[w] = degree / freq
    phrase = {}
    for occ in set(occurrences):
        phrase[" ".join(occ)] = sum(word_score[w] for w in occ)
    return word_score, phrase


class TestOracle:
    def test_random_documents_match(self):
        rng = random.Random(1234)
        vocab = [f"w{i}" for i in range(15)]
        stop_words = {"s1", "s2", "s3", "s4", "s5"}
        pool = vocab + sorted(stop_words) + [".", ","]
        stops = StopList(stop_words)
        for _ in range(50):
            text = " ".join(rng.choice(pool) for _ in range(rng.randint(1, 200)))
            tokens = tokenize(text)
            candidates = split_candidates(tokens, stops)
            got_words = word_scores(candidates)
            got_phrases = {t.term: t.score
                           for t in phrase_scores(candidates, got_words)}
            exp_words, exp_phrases = oracle_scores(
                oracle_candidates(tokens, stop_words))
            assert got_words.keys() == exp_words.keys()
            for w in exp_words:
                assert abs(got_words[w] - exp_words[w]) < 1e-12
            assert got_phrases.keys() == exp_phrases.keys()
            for p in exp_phrases:
                assert abs(got_phrases[p] - exp_phrases[p]) < 1e-12

    def test_isolated_word_scores_one(self):
        stops = StopList(["and"])
        tokens = tokenize("wheat and rice and wheat")
        candidates = split_candidates(tokens, stops)
        for w, s in word_scores(candidates).items():
            assert s == 1.0


class TestExtractor:
    def test_end_to_end_fixture(self):
        extractor = RakeExtractor(FIXTURE_STOPS)
        terms = extractor.extract_text(FIXTURE_TEXT)
        assert [t.term for t in terms] == ["deep learning"]

    def test_no_delimiter_stop_words_in_output(self):
        stops = StopList(["the", "of", "and", "in"])
        extractor = RakeExtractor(stops, ratio=1.0)
        terms = extractor.extract_text(
            "the growth of wheat in the dry region and the wet region")
        for t in terms:
            for w in t.term.split():
                assert w not in stops
