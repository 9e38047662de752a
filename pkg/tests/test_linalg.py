from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from axial.errors import AmbientMismatch, DimMismatch
from axial.field import ONE, ZERO, param, parse_scalar
from axial.linalg import Matrix, Subspace, Vect, dims_independent, kernel, rref, solve

from conftest import SYM, to_sympy

# small entries: integers and low-degree polynomials in a
entries = st.one_of(st.integers(-3, 3).map(str),
                    st.sampled_from(["a", "a - 1", "2*a + 1", "a^2", "1 - a", "a + 2"]))


def matrices(max_r=4, max_c=4):
    return st.integers(1, max_r).flatmap(
        lambda r: st.integers(1, max_c).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def ours(rows):
    return Matrix([[parse_scalar(e) for e in r] for r in rows])


def theirs(rows):
    return sympy.Matrix([[sympy.sympify(e.replace("^", "**"), locals=SYM) for e in r] for r in rows])


def as_sympy(m: Matrix):
    return sympy.Matrix([[to_sympy(c) for c in r] for r in m.entries])


@given(matrices())
def test_rref_matches_sympy(rows):
    red, cert, rank = rref(ours(rows))
    want, _ = theirs(rows).rref(simplify=sympy.cancel)
    assert rank == theirs(rows).rank(simplify=True)
    got = as_sympy(red)
    assert (got - want.applyfunc(sympy.cancel)).applyfunc(sympy.cancel) == sympy.zeros(*want.shape)


@given(matrices())
def test_kernel_is_annihilated_and_has_right_dimension(rows):
    m = ours(rows)
    k = kernel(m)
    for v in k.basis:
        assert m.apply(v).is_zero()
    assert k.dim == m.cols - theirs(rows).rank(simplify=True)


@given(matrices(), st.fractions(min_value=-4, max_value=4, max_denominator=5))
def test_certificate_guards_specialization(rows, val):
    m = ours(rows)
    _, cert, rank = rref(m)
    assume(all(p.evaluate({"a": val}) != 0 for p in cert))
    special = m.subs({"a": val})
    assert rref(special)[2] == rank


@given(matrices(3, 3))
def test_inverse_round_trip(rows):
    m = ours(rows)
    assume(m.rows == m.cols and rref(m)[2] == m.rows)
    inv, _ = m.inverse()
    assert m @ inv == Matrix.identity(m.rows)


def _vec(draw_list):
    return Vect([parse_scalar(e) for e in draw_list])


vecs3 = st.lists(st.lists(entries, min_size=3, max_size=3), min_size=0, max_size=3)


@given(vecs3, vecs3)
def test_dimension_formula(u, w):
    A = Subspace.span([_vec(x) for x in u], 3)
    B = Subspace.span([_vec(x) for x in w], 3)
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    for v in (A & B).basis:
        assert A.contains(v) and B.contains(v)
    assert (A + B).contains_subspace(A) and (A + B).contains_subspace(B)


def test_kernel_of_shifted_adjoint_example():
    a = param("a")
    m = Matrix([[1, a], [0, a]]).shift(a)
    red, cert, rank = rref(m)
    assert rank == 1
    assert [str(p) for p in cert] == ["a - 1"]
    k = kernel(m)
    assert k.dim == 1
    assert k.basis[0] == Vect([ONE, (a - 1) / a])


def test_echelon_equality_ignores_spanning_set():
    a = param("a")
    S = Subspace.span([Vect([ONE, a, ZERO]), Vect([ZERO, ONE, ONE])], 3)
    T = Subspace.span([Vect([ONE, a + 1, ONE]), Vect([ONE, a, ZERO]) * 2], 3)
    assert S == T and hash(S) == hash(T)


def test_solve_and_inconsistency():
    m = Matrix([[1, 1], [2, 2]])
    assert solve(m, Vect([ONE, ONE * 3])) is None
    x = solve(m, Vect([ONE, ONE * 2]))
    assert m.apply(x) == Vect([ONE, ONE * 2])


def test_dimension_errors():
    with pytest.raises(DimMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(AmbientMismatch):
        Subspace.span([Vect([ONE, ONE])], 3)
    S = Subspace.span([Vect([ONE, ZERO, ZERO])], 3)
    assert dims_independent([S, Subspace.span([Vect([ZERO, ONE, ZERO])], 3)])
    assert not dims_independent([S, S])


def test_rational_entries_exact():
    m = Matrix([[Fraction(1, 3), Fraction(2, 7)], [Fraction(5, 2), Fraction(-1, 9)]])
    inv, cert = m.inverse()
    assert not cert
    assert as_sympy(inv) == as_sympy(m).inv()
