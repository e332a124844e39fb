import math
import random
from collections import Counter

import pytest

from conftest import RAW, make_index
from seraeval.errors import AnalyzerMismatchError, EmptyQueryError, InvalidArgumentError, NotFoundError
from seraeval.retrieval import Query, lm_dirichlet_score, retrieve
from seraeval.textproc import AnalyzerOptions, tokenize


def brute_force(texts, query_terms, mu, options=RAW):
    """Score every document from raw token counts and sort by (-score, id)."""
    docs = {f"d{i + 1}": Counter(t.stem for t in tokenize(x, options)) for i, x in enumerate(texts)}
    coll = sum(docs.values(), Counter())
    total = sum(coll.values())
    q = sorted(Counter(query_terms).items())
    out = []
    for doc_id, counts in docs.items():
        if not any(counts[t] for t, _ in q):
            continue
        length = sum(counts.values())
        score = 0.0
        for t, c in q:
            if coll[t] == 0:
                continue
            score += c * math.log((counts[t] + mu * coll[t] / total) / (length + mu))
        out.append((doc_id, score))
    out.sort(key=lambda e: (-e[1], e[0]))
    return out


@pytest.fixture
def fixture_index():
    return make_index(["a a b", "a b c"], RAW)


class TestScore:
    def test_dirichlet_fixture(self, fixture_index):
        s = lm_dirichlet_score(Query.from_terms(["a"]), "d1", fixture_index, mu=1)
        assert s == pytest.approx(math.log(0.625), abs=1e-9)

    def test_absent_term_contributes_nothing(self, fixture_index):
        with_absent = Query.from_terms(["a", "zebra"])
        assert lm_dirichlet_score(with_absent, "d1", fixture_index, 1) == lm_dirichlet_score(
            Query.from_terms(["a"]), "d1", fixture_index, 1
        )

    def test_large_mu_washes_out(self, fixture_index):
        q = Query.from_terms(["a", "b"])
        s1 = lm_dirichlet_score(q, "d1", fixture_index, 1e9)
        s2 = lm_dirichlet_score(q, "d2", fixture_index, 1e9)
        assert abs(s1 - s2) < 1e-6

    def test_unknown_doc(self, fixture_index):
        with pytest.raises(NotFoundError):
            lm_dirichlet_score(Query.from_terms(["a"]), "d9", fixture_index)

    def test_bad_mu(self, fixture_index):
        with pytest.raises(InvalidArgumentError):
            lm_dirichlet_score(Query.from_terms(["a"]), "d1", fixture_index, 0)


class TestRetrieve:
    def test_fixture_order(self, fixture_index):
        assert retrieve(Query.from_terms(["a", "a"]), fixture_index, 2, 1).doc_ids == ["d1", "d2"]

    def test_cutoff_one(self, fixture_index):
        assert retrieve(Query.from_terms(["a", "a"]), fixture_index, 1, 1).doc_ids == ["d1"]

    def test_tie_break_by_id(self):
        idx = make_index({"z": "gene cell", "m": "gene cell", "b": "gene cell"})
        assert retrieve(Query.from_terms(["gene"]), idx, 3).doc_ids == ["b", "m", "z"]

    def test_excludes_non_matching_docs(self, fixture_index):
        assert retrieve(Query.from_terms(["c"]), fixture_index, 5).doc_ids == ["d2"]

    def test_empty_query(self, fixture_index):
        with pytest.raises(EmptyQueryError):
            retrieve(Query.from_terms([]), fixture_index, 5)

    def test_bad_cutoff(self, fixture_index):
        with pytest.raises(InvalidArgumentError):
            retrieve(Query.from_terms(["a"]), fixture_index, 0)

    def test_fingerprint_checked(self, fixture_index):
        q = Query.from_terms(["a"], fingerprint=AnalyzerOptions().fingerprint())
        with pytest.raises(AnalyzerMismatchError):
            retrieve(q, fixture_index, 5)

    def test_ranked_list_invariants(self, mini_index):
        rl = retrieve(Query.from_terms(["cell", "tumor", "gene"]), mini_index, 10)
        assert len(rl) <= 10
        keys = [(-s, d) for d, s in rl.entries]
        assert keys == sorted(keys) and len(set(rl.doc_ids)) == len(rl)


def _random_corpus(rng, n_docs=100):
    vocab = ["w%d" % i for i in range(25)]
    return [" ".join(rng.choices(vocab, k=rng.randint(1, 15))) for _ in range(n_docs)], vocab


class TestOracle:
    def test_matches_brute_force(self):
        rng = random.Random(2024)
        for trial in range(5):
            texts, vocab = _random_corpus(rng)
            idx = make_index(texts, RAW)
            for _ in range(10):
                terms = rng.choices(vocab + ["absent"], k=rng.randint(1, 5))
                mu = rng.choice([1.0, 10.0, 2000.0])
                expected = brute_force(texts, terms, mu)
                got = retrieve(Query.from_terms(terms), idx, 100, mu)
                assert list(got.entries) == expected

    def test_prefix_property(self):
        rng = random.Random(5)
        texts, vocab = _random_corpus(rng, 60)
        idx = make_index(texts, RAW)
        for _ in range(20):
            q = Query.from_terms(rng.choices(vocab, k=3))
            full = retrieve(q, idx, 60).doc_ids
            for n in (1, 3, 5, 10, 30):
                assert retrieve(q, idx, n).doc_ids == full[:n]

    def test_duplicated_terms_same_ranking(self):
        rng = random.Random(11)
        texts, vocab = _random_corpus(rng, 60)
        idx = make_index(texts, RAW)
        for _ in range(20):
            terms = rng.choices(vocab, k=4)
            once = retrieve(Query.from_terms(terms), idx, 60)
            twice = retrieve(Query.from_terms(terms * 2), idx, 60)
            assert once.doc_ids == twice.doc_ids
            assert [2 * s for _, s in once.entries] == [s for _, s in twice.entries]
