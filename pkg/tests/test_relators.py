import time

import pytest
from hypothesis import given, strategies as st

from axial import catalog as cat
from axial.algebra import Algebra
from axial.field import param
from axial.relators import (
    MagmaWord,
    RelatorInstance,
    check_all,
    enumerate_words,
    eval_relator,
    eval_word,
    word_counts,
)
from axial.suites import relator_total


def brute_words(n_gens, max_len):
    """Commutative words as nested frozensets of children, built bottom-up."""
    by_len = {1: {("g", i) for i in range(n_gens)}}
    for n in range(2, max_len + 1):
        out = set()
        for i in range(1, n):
            for u in by_len[i]:
                for v in by_len[n - i]:
                    out.add(("p", frozenset([u, v]) if u != v else frozenset([u]), u == v))
        by_len[n] = out
    return by_len


@pytest.mark.parametrize("gens,max_len", [(1, 5), (2, 4), (2, 5), (3, 4)])
def test_enumeration_matches_brute_force(gens, max_len):
    words = enumerate_words(gens, max_len)
    assert len(set(words)) == len(words)
    brute = brute_words(gens, max_len)
    for n in range(1, max_len + 1):
        assert sum(1 for w in words if w.length == n) == len(brute[n])
    assert word_counts(gens, max_len) == [len(brute[n]) for n in range(1, max_len + 1)]


def test_two_generator_counts():
    assert word_counts(2, 4) == [2, 3, 6, 18]
    assert len(enumerate_words(2, 4)) == 29


trees = st.recursive(st.integers(0, 2), lambda k: st.tuples(k, k), max_leaves=6)


@given(trees, trees)
def test_commutative_canonical_form(u, v):
    assert MagmaWord.of((u, v)) == MagmaWord.of((v, u))
    assert hash(MagmaWord.of((u, v))) == hash(MagmaWord.of((v, u)))
    assert str(MagmaWord.of((u, v))) == str(MagmaWord.of((v, u)))


def test_word_printing():
    assert str(MagmaWord.of((0, (0, 1)))) == "a0(a0a1)"
    assert str(MagmaWord.of(((1, 0), (0, 1)))) == "(a0a1)(a0a1)"


def test_eval_word_in_2B():
    e = cat.alg_2B()
    v = eval_word(e.algebra, MagmaWord.of((0, 1)), e.axes)
    a = param("a")
    assert v == e.algebra.vec([a, a])


@pytest.mark.parametrize("make,budget", [
    (cat.alg_2B, 10),
    (lambda: cat.alg_3dim_A("a", "1/2", "x"), 60),
    (lambda: cat.alg_3dim_D("beta-half"), 60),
])
def test_relators_vanish(make, budget):
    e = make()
    t = time.perf_counter()
    rep = check_all(e.algebra, list(e.axes), e.law, 4)
    assert rep.failed == 0, rep.failures[:3]
    assert rep.total == relator_total(2, len(e.law.labels), 4)
    assert time.perf_counter() - t < budget


def test_shorter_words_give_fewer_instances():
    e = cat.alg_2B()
    r2 = check_all(e.algebra, list(e.axes), e.law, 2)
    r4 = check_all(e.algebra, list(e.axes), e.law, 4)
    assert r2.passed and r2.total < r4.total
    assert r2.counts["fusion"] == 2 * 4 * 5 * 5


def test_broken_algebra_fails_relators():
    a = param("a")
    bad = Algebra(["a0", "a1"], {(0, 0): [1, 0], (1, 1): [0, 1], (0, 1): [a, a + 1]})
    rep = check_all(bad, [bad.e(0), bad.e(1)], cat.two_eval(), 3)
    assert rep.failed > 0


def test_single_relator():
    e = cat.alg_2B()
    w = MagmaWord.of((0, 1))
    one, al = e.law.labels
    r = RelatorInstance("fusion", 0, (w, w), (al, al))
    assert eval_relator(e.algebra, r, e.law, e.axes).is_zero()
    p = RelatorInstance("primitivity", 1, (w,))
    assert r.describe() == "fusion(a0; a, a; a0a1, a0a1)"
    assert p.describe() == "primitivity(a1; a0a1)"
    assert eval_relator(e.algebra, p, e.law, e.axes).is_zero()
