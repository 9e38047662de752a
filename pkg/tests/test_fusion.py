import itertools
import json
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import invariant_factors

from axial import catalog as cat
from axial.errors import DuplicateEigenvalue, UnsupportedDivisor
from axial.field import ONE, Scalar, param
from axial.fusion import (
    FusionLaw,
    characters,
    grading_group,
    is_sublaw,
    law_checks,
    law_isomorphism,
    smith_normal_form,
)

LABELS = [ONE, Scalar.const(2), Scalar.const(3), Scalar.const(5)]


@st.composite
def laws(draw, min_size=2, max_size=4):
    n = draw(st.integers(min_size, max_size))
    labs = LABELS[:n]
    table = {}
    for i in range(n):
        for j in range(i, n):
            table[(labs[i], labs[j])] = draw(st.sets(st.sampled_from(labs), max_size=n))
    return FusionLaw(labs, table)


def hom_count(law: FusionLaw, n: int) -> int:
    """Label maps into Z/n compatible with every product, by enumeration."""
    count = 0
    for vals in itertools.product(range(n), repeat=len(law.labels)):
        g = dict(zip(law.labels, vals))
        if all((g[x] + g[y] - g[z]) % n == 0
               for x in law.labels for y in law.labels for z in law.table[(x, y)]):
            count += 1
    return count


@given(laws(), st.integers(2, 6))
def test_grading_group_counts_homomorphisms(law, n):
    g = grading_group(law)
    predicted = n ** g.free_rank
    for d in g.divisors:
        predicted *= gcd(d, n)
    assert hom_count(law, n) == predicted


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_smith_normal_form_against_sympy(rows):
    diag, V = smith_normal_form(rows, 4)
    assert abs(sympy.Matrix(V).det()) == 1
    nonzero = [d for d in diag if d]
    want = [abs(int(d)) for d in invariant_factors(sympy.Matrix(rows)) if d]
    assert nonzero == want
    for u, w in zip(nonzero, nonzero[1:]):
        assert w % u == 0


def test_expected_gradings():
    assert grading_group(cat.law_a()).describe() == "C2; g_1 -> 0, g_a -> 0, g_b -> 1 (mod 2)"
    assert grading_group(cat.law_c()).describe() == "C2; g_1 -> 0, g_a -> 1, g_b -> 1 (mod 2)"
    assert grading_group(cat.law_d()).describe() == "C3; g_1 -> 0, g_a -> 1, g_b -> 2 (mod 3)"
    assert grading_group(cat.two_eval()).is_trivial()


def test_grading_is_byte_stable():
    outs = {json.dumps(grading_group(cat.law_d()).to_dict(), sort_keys=True) for _ in range(5)}
    assert len(outs) == 1


def test_free_part_for_empty_square():
    h = Scalar.const(2)
    law = FusionLaw([ONE, h], {(ONE, ONE): [ONE], (ONE, h): [h]})
    g = grading_group(law)
    assert g.name() == "Z" and g.order is None
    with pytest.raises(UnsupportedDivisor):
        characters(g)


def test_characters():
    g2 = grading_group(cat.law_a())
    chars = characters(g2)
    assert sorted(str(c) for c in chars) == ["(-1)", "(1)"]
    g3 = grading_group(cat.law_d())
    assert len(characters(g3)) == 1
    ext = characters(g3, extended=True)
    assert len(ext) == 3
    w = Scalar.omega()
    vals = {c(g3.element(param("b"))) for c in ext}
    assert vals == {ONE.to_extended(), w, w * w}


def test_duplicate_labels_rejected():
    with pytest.raises(DuplicateEigenvalue):
        FusionLaw([ONE, ONE], {})


def test_contradictory_symmetric_entries():
    two = Scalar.const(2)
    with pytest.raises(ValueError):
        FusionLaw([ONE, two], {(ONE, two): [two], (two, ONE): [ONE]})


def test_missing_pairs_are_empty():
    two = Scalar.const(2)
    law = FusionLaw([ONE, two], {(ONE, ONE): [ONE]})
    assert law.product(two, two) == frozenset()
    assert law.product(ONE, two) == frozenset()


@given(laws())
def test_json_round_trip(law):
    back = FusionLaw.from_json(law.to_json())
    assert back == law
    assert back.to_json() == law.to_json()


def test_law_checks_and_sublaw():
    rep = law_checks(cat.law_a())
    assert rep["symmetric"] and rep["contains_one_as_unit"]
    ok, _ = is_sublaw(cat.law_c(), cat.law_a())
    assert not ok
    ok, wit = is_sublaw(cat.two_eval(), cat.law_a())
    assert ok and wit is None


def test_isomorphism_swaps_roles():
    iso = law_isomorphism(cat.law_a(), cat.law_b())
    assert iso == {ONE: ONE, param("a"): param("b"), param("b"): param("a")}
    assert law_isomorphism(cat.law_a(), cat.law_d()) is None


def test_format_table():
    text = cat.law_a().format_table()
    assert text.splitlines()[3] == "a | a | 1, a | b"
    assert "-" in cat.law_d().format_table().splitlines()[1]
