from superlie.core import is_nilpotent
from superlie.corpus import MAX_EVEN, MAX_ODD, corpus, random_nilpotent
import random


def test_corpus_reproducible():
    a = corpus(42, 8)
    b = corpus(42, 8)
    assert len(a) == len(b) == 8
    for x, y in zip(a, b):
        assert x.structure_equals(y)


def test_corpus_seeds_differ():
    a = corpus(1, 6)
    b = corpus(2, 6)
    assert any(not x.structure_equals(y) for x, y in zip(a, b))


def test_corpus_all_nilpotent_within_caps():
    for L in corpus(7, 25):
        nil, cls = is_nilpotent(L)
        assert nil and cls >= 1
        assert L.n_even <= MAX_EVEN and L.n_odd <= MAX_ODD


def test_corpus_hits_nonabelian_and_mixed_parity():
    algebras = corpus(0, 30)
    assert any(L.constants for L in algebras)
    assert any(L.n_odd > 0 for L in algebras)


def test_random_nilpotent_respects_custom_caps():
    rng = random.Random(3)
    for _ in range(10):
        L = random_nilpotent(rng, max_even=3, max_odd=2)
        assert L.n_even <= 3 and L.n_odd <= 2
