"""Catalog of 2-generated primitive axial algebras and their fusion laws.

Parameters are named ``a`` (alpha), ``b`` (beta) and ``x`` (the projection
``phi_{a0}(a1)``); every 3-dimensional entry has ``y = x``.  Besides the
constructors this module carries the named identity checks, the ideal tables
and the generic-Jordan case list, each phrased so that it can be re-verified
symbolically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .algebra import (
    Algebra,
    AlgebraMap,
    check_axis,
    check_map,
    eigendecompose,
    ideal_closure,
    marked_iso,
    phi,
    quotient,
    subalgebra_closure,
)
from .errors import BadParameter, ConstraintUnsatisfied, WrongDimension
from .field import ONE, ZERO, MultiPoly, Scalar, as_scalar, param, parse_scalar
from .fusion import FusionLaw
from .linalg import Matrix, Subspace, Vect

__all__ = [
    "CatalogEntry",
    "alg_1A",
    "alg_2B",
    "alg_3dim_A",
    "alg_3dim_D",
    "x_generic",
    "laws",
    "law_a",
    "law_b",
    "law_c",
    "law_d",
    "law_row4",
    "jordan_type",
    "jordan_generic",
    "two_eval",
    "eigvecs",
    "identity_suite",
    "verify_ideal_table",
    "verify_entry",
    "generic_jordan_cases",
    "run_generic_jordan",
    "adjudicate_square",
    "tabulated_products",
    "compare_tabulated",
    "swap_map",
    "check_ideal_row",
    "evaluate_identity",
    "IDENTITY_CHECKS",
    "IDEALS_3A",
    "IDEALS_3A_ADJUDICATION",
    "DISCREPANCIES",
    "square_coefficients_2B",
]

HALF = Fraction(1, 2)


def _s(v) -> Scalar:
    if isinstance(v, Scalar):
        return v
    if isinstance(v, str):
        return parse_scalar(v)
    return as_scalar(v)


# --- fusion laws ------------------------------------------------------------

def two_eval(alpha="a") -> FusionLaw:
    """``{1, alpha}`` with ``alpha*alpha = {1, alpha}``."""
    al = _s(alpha)
    return FusionLaw([ONE, al], {(ONE, ONE): [ONE], (ONE, al): [al], (al, al): [ONE, al]},
                     name="two_eval")


def _three(al, be, aa, ab, bb, name) -> FusionLaw:
    al, be = _s(al), _s(be)
    sym = {"1": ONE, "a": al, "b": be}
    pick = lambda zs: [sym[z] for z in zs]
    return FusionLaw([ONE, al, be], {
        (ONE, ONE): [ONE], (ONE, al): [al], (ONE, be): [be],
        (al, al): pick(aa), (al, be): pick(ab), (be, be): pick(bb)}, name=name)


def law_a(alpha="a", beta="b") -> FusionLaw:
    return _three(alpha, beta, "1a", "b", "1a", "law_a")


def law_b(alpha="a", beta="b") -> FusionLaw:
    """Law (a) with the roles of the two non-unit eigenvalues exchanged."""
    return _three(alpha, beta, "1b", "a", "1b", "law_b")


def law_c(alpha="a", beta="b") -> FusionLaw:
    return _three(alpha, beta, "1", "1", "1", "law_c")


def law_d(alpha="a", beta="b") -> FusionLaw:
    return _three(alpha, beta, "b", "1", "a", "law_d")


def law_row4(alpha="a") -> FusionLaw:
    """The law listed with the last graded algebra: eigenvalues ``1, alpha, 1/2``."""
    al, h = _s(alpha), _s(HALF)
    return FusionLaw([ONE, al, h], {
        (ONE, ONE): [ONE], (ONE, al): [al], (ONE, h): [h],
        (al, al): [h], (al, h): [ONE], (h, h): [al]}, name="row4")


def jordan_type(eta="n") -> FusionLaw:
    return _three(0, eta, "a", "b", "1a", "jordan_type")


def jordan_generic(alpha="a", beta="b") -> FusionLaw:
    return _three(alpha, beta, "a", "b", "1a", "jordan_generic")


def laws(alpha="a", beta="b") -> dict:
    return {
        "law_a": law_a(alpha, beta),
        "law_b": law_b(alpha, beta),
        "law_c": law_c(alpha, beta),
        "law_d": law_d(alpha, beta),
        "jordan_type": jordan_type(),
        "jordan_generic": jordan_generic(alpha, beta),
        "two_eval": two_eval(alpha),
    }


# --- entries ----------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    kind: str  # "1A" | "2B" | "3A" | "D"
    params: dict
    algebra: Algebra
    axes: tuple
    law: FusionLaw
    expected_minimal: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _conditions(*scalars: Scalar) -> tuple:
    out = []
    for s in scalars:
        if not s.is_constant():
            out.append(s.num.primitive())
        if not s.den.is_constant():
            out.append(s.den.primitive())
    return tuple(dict.fromkeys(out))


def alg_1A() -> CatalogEntry:
    alg = Algebra(["a0"], {(0, 0): [1]}, name="1A")
    a0 = alg.e(0)
    law = FusionLaw([ONE], {(ONE, ONE): [ONE]}, name="trivial")
    return CatalogEntry("1A", "1A", {}, alg, (a0, a0), law,
                        expected_minimal={"labels": ["1"]})


def alg_2B(alpha="a") -> CatalogEntry:
    al = _s(alpha)
    if (al - 1).is_zero():
        raise BadParameter("2B(alpha) needs alpha != 1")
    alg = Algebra(["a0", "a1"], {(0, 0): [1, 0], (1, 1): [0, 1], (0, 1): [al, al]},
                  name=f"2B({al})", conditions=_conditions(al - 1))
    return CatalogEntry(f"2B({al})", "2B", {"alpha": al}, alg, (alg.e(0), alg.e(1)),
                        two_eval(al))


def x_generic(alpha="a", beta="b") -> Scalar:
    """The value of ``x`` forced when ``beta != 1/2``."""
    al, be = _s(alpha), _s(beta)
    return (al + be) / (2 * (1 - al))


def _check_distinct(al, be):
    if (al - 1).is_zero():
        raise BadParameter("alpha = 1 is excluded")
    if (be - 1).is_zero():
        raise BadParameter("beta = 1 is excluded")
    if (al - be).is_zero():
        raise BadParameter("alpha = beta is excluded")


def _three_dim(al, be, x, square, name, kind, law, params, extras=None, conditions=()):
    m = [(al - 1) * (be - 1) * x, -al * be, al + be]
    m1 = [-al * be, (al - 1) * (be - 1) * x, al + be]
    alg = Algebra(["a0", "a1", "a0a1"], {
        (0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (0, 1): [0, 0, 1],
        (0, 2): m, (1, 2): m1, (2, 2): square}, name=name, conditions=conditions)
    return CatalogEntry(name, kind, params, alg, (alg.e(0), alg.e(1)), law,
                        extras=extras or {})


def alg_3dim_A(alpha="a", beta="b", x=None) -> CatalogEntry:
    """Three-dimensional algebra for law (a).

    ``x`` defaults to ``(alpha+beta)/(2(1-alpha))``; when ``beta != 1/2`` any
    other value is rejected.
    """
    al, be = _s(alpha), _s(beta)
    _check_distinct(al, be)
    xs = x_generic(al, be) if x is None else _s(x)
    half = (be - HALF).is_zero()
    if not half and not (xs - x_generic(al, be)).is_zero():
        raise BadParameter("x must equal (alpha+beta)/(2(1-alpha)) unless beta = 1/2")
    c1 = be * (al - 1) * (al + be - 1) * xs - al * be * (al + be)
    c2 = (1 - al) * (al - be + 1) * xs + al * al + 3 * al * be + 2 * be * be - be
    conds = _conditions(al - 1, be - 1, al - be)
    return _three_dim(al, be, xs, [c1, c1, c2], f"3A({al}, {be}, {xs})", "3A", law_a(al, be),
                      {"alpha": al, "beta": be, "x": xs,
                       "branch": "beta_half" if half else "x_generic"},
                      conditions=conds)


def _d_square(free: Scalar, form: str) -> list:
    if form == "graded":
        c = Fraction(1, 4) - free
        return [c, c, 2 * free + HALF]
    if form == "tabulated":
        c = (4 - free) / 4
        return [c, c, -2 * c]
    raise ValueError(f"unknown square form {form!r}")


def alg_3dim_D(variant: str = "beta-half", free_param="a", square: str = "graded") -> CatalogEntry:
    """Three-dimensional algebra for law (d) with ``x = y = 1``.

    ``variant`` says which eigenvalue equals 1/2; the other one is
    ``free_param``.  ``square`` selects the formula for ``(a0a1)^2``.  Both
    candidate squares are kept in ``extras`` for comparison.
    """
    free = _s(free_param)
    if (free - 1).is_zero() or (free - HALF).is_zero():
        raise BadParameter("free parameter must avoid 1 and 1/2")
    if variant == "beta-half":
        al, be = free, _s(HALF)
    elif variant == "alpha-half":
        al, be = _s(HALF), free
    else:
        raise BadParameter(f"unknown variant {variant!r}")
    candidates = {f: _d_square(free, f) for f in ("graded", "tabulated")}
    one = _s(1)
    entry = _three_dim(al, be, one, candidates[square],
                       f"3D[{variant}, {square}]({free})", "D", law_d(al, be),
                       {"alpha": al, "beta": be, "x": one, "variant": variant,
                        "square": square},
                       extras={"squares": candidates},
                       conditions=_conditions(free - 1, 2 * free - 1))
    return entry


def eigvecs(entry: CatalogEntry):
    """``(v_alpha, v_beta)`` in the basis ``a0, a1, a0a1``."""
    if entry.dim != 3:
        raise WrongDimension(f"{entry.name} is {entry.dim}-dimensional")
    al, be, x = entry.params["alpha"], entry.params["beta"], entry.params["x"]
    alg = entry.algebra
    return alg.vec([(be - 1) * x, -be, 1]), alg.vec([(al - 1) * x, -al, 1])


# --- identity suite ------------------------------------------------------------

class Expr:
    """Tiny expression language over named vectors (``a0``, ``a1``, ``m``, ``va``, ``vb``)."""

    def __init__(self, op, *args):
        self.op, self.args = op, args

    def __add__(self, o):
        return Expr("+", self, o)

    def __sub__(self, o):
        return Expr("-", self, o)

    def __mul__(self, o):
        if isinstance(o, Expr):
            return Expr("*", self, o)
        return Expr("scale", o, self)

    def __rmul__(self, c):
        return Expr("scale", c, self)

    def __neg__(self):
        return Expr("scale", -1, self)

    def eval(self, alg: Algebra, env: Mapping[str, Vect], params: Mapping) -> Vect:
        op, args = self.op, self.args
        if op == "sym":
            return env[args[0]]
        if op == "zero":
            return alg.zero()
        if op == "+":
            return args[0].eval(alg, env, params) + args[1].eval(alg, env, params)
        if op == "-":
            return args[0].eval(alg, env, params) - args[1].eval(alg, env, params)
        if op == "*":
            return alg.product(args[0].eval(alg, env, params), args[1].eval(alg, env, params))
        if op == "scale":
            c = args[0](params) if callable(args[0]) else _s(args[0])
            return args[1].eval(alg, env, params) * c
        raise ValueError(op)

    def __str__(self):
        op, args = self.op, self.args
        if op == "sym":
            return args[0]
        if op == "zero":
            return "0"
        if op == "*":
            return f"({args[0]})({args[1]})"
        if op == "scale":
            c = getattr(args[0], "text", args[0])
            return f"[{c}]*({args[1]})"
        return f"{args[0]} {op} {args[1]}"


def _sym(name):
    return Expr("sym", name)


class _Coef:
    """Coefficient depending on the entry parameters (``a``, ``b``, ``x``)."""

    def __init__(self, text: str, fn: Callable):
        self.text, self.fn = text, fn

    def __call__(self, p):
        return self.fn(p["alpha"], p["beta"], p["x"])


A0, A1, M, VA, VB = (_sym(n) for n in ("a0", "a1", "m", "va", "vb"))
ZERO_E = Expr("zero")


@dataclass
class IdentityCheck:
    name: str
    lhs: Expr
    rhs: Expr
    branch: str  # "beta_half" | "x_generic" | "3A" | "3dim" | "D_beta_half"
    quoted: bool = True
    corrects: str | None = None  # name of the quoted check this one replaces

    def applies(self, entry: CatalogEntry) -> bool:
        p = entry.params
        if self.branch == "3dim":
            return entry.dim == 3
        if self.branch == "3A":
            return entry.kind == "3A"
        if self.branch == "beta_half":
            return entry.kind == "3A" and p.get("branch") == "beta_half"
        if self.branch == "x_generic":
            return entry.kind == "3A" and (p["x"] - x_generic(p["alpha"], p["beta"])).is_zero()
        if self.branch == "D_beta_half":
            return entry.kind == "D" and p.get("variant") == "beta-half"
        raise ValueError(self.branch)


def _c(text, fn):
    return _Coef(text, fn)


def _identity_checks() -> list:
    one_half = HALF
    checks = [
        IdentityCheck(
            "1", VB * VB,
            _c("1/4(2a-1)((a-1)x+a)", lambda a, b, x: (2 * a - 1) * ((a - 1) * x + a) / 4)
            * (A0 + A1 - 2 * M), "beta_half"),
        IdentityCheck(
            "2", VB * VB,
            _c("(a-b)", lambda a, b, x: a - b) * (
                _c("4ab-a-b", lambda a, b, x: 4 * a * b - a - b) * A0
                + _c("2(a+b-1)", lambda a, b, x: 2 * (a + b - 1))
                * (_c("b", lambda a, b, x: b) * A1 - M)), "x_generic"),
        IdentityCheck(
            "2-corrected", VB * VB,
            _c("1/4(a-b)", lambda a, b, x: (a - b) / 4) * (
                _c("4ab-a-b", lambda a, b, x: 4 * a * b - a - b) * A0
                + _c("2(a+b-1)", lambda a, b, x: 2 * (a + b - 1))
                * (_c("b", lambda a, b, x: b) * A1 - M)), "x_generic",
            quoted=False, corrects="2"),
        IdentityCheck(
            "3", A0 * (VB * VB) - _c("a", lambda a, b, x: a) * (VB * VB),
            _c("(a-b)^2 b(2-3a-b)", lambda a, b, x: (a - b) ** 2 * b * (2 - 3 * a - b)) * A0,
            "x_generic"),
        IdentityCheck(
            "3-corrected", A0 * (VB * VB) - _c("a", lambda a, b, x: a) * (VB * VB),
            _c("1/4(a-b)^2 b(2-3a-b)",
               lambda a, b, x: (a - b) ** 2 * b * (2 - 3 * a - b) / 4) * A0,
            "x_generic", quoted=False, corrects="3"),
        IdentityCheck(
            "4", VA * VB,
            _c("(a+b-1)((1-b)x-b)", lambda a, b, x: (a + b - 1) * ((1 - b) * x - b)) * VB, "3A"),
        IdentityCheck(
            "4-corrected", VA * VB,
            _c("(a+b-1)((b-1)x+b)", lambda a, b, x: (a + b - 1) * ((b - 1) * x + b)) * VB, "3A",
            quoted=False, corrects="4"),
        IdentityCheck(
            "5", A0 * (VA * VA) - _c("a", lambda a, b, x: a) * (VA * VA),
            _c("a(a-b)(a-1)((1-b)x-b)(x-1)",
               lambda a, b, x: a * (a - b) * (a - 1) * ((1 - b) * x - b) * (x - 1)) * A0, "3A"),
        IdentityCheck(
            "6a", VA * VA - VB * VB,
            _c("(a-b)", lambda a, b, x: a - b) * (
                _c("(a+b-2ab)x^2-2ab", lambda a, b, x: (a + b - 2 * a * b) * x * x - 2 * a * b) * A0
                + _c("2abx+2(a-1)(b-1)x-a-b",
                     lambda a, b, x: 2 * a * b * x + 2 * (a - 1) * (b - 1) * x - a - b) * A1
                - _c("2(x-a-b)", lambda a, b, x: 2 * (x - a - b)) * M), "3dim"),
        IdentityCheck(
            "6b", VA * VA - VA * VB,
            _c("(a-b)", lambda a, b, x: a - b) * (
                _c("a(1-b)x^2-ab", lambda a, b, x: a * (1 - b) * x * x - a * b) * A0
                + _c("abx+(a-1)(b-1)x-b",
                     lambda a, b, x: a * b * x + (a - 1) * (b - 1) * x - b) * A1
                + _c("(b-a-1)x+a+b", lambda a, b, x: (b - a - 1) * x + a + b) * M), "3dim"),
        IdentityCheck("7a", VA * VA, ZERO_E, "D_beta_half"),
        IdentityCheck("7b", VA * VB, ZERO_E, "D_beta_half"),
        IdentityCheck(
            "7c", VB * VB, _c("-(a-1/2)^2", lambda a, b, x: -(a - one_half) ** 2) * VA,
            "D_beta_half"),
        IdentityCheck(
            "7c-corrected", VB * VB, _c("-2(a-1/2)^2", lambda a, b, x: -2 * (a - one_half) ** 2) * VA,
            "D_beta_half", quoted=False, corrects="7c"),
    ]
    return checks


IDENTITY_CHECKS = _identity_checks()


@dataclass
class IdentityResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    quoted: bool
    corrects: str | None
    branch: str
    residual: str = ""
    lhs: str = ""
    rhs: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status, "quoted": self.quoted,
             "branch": self.branch}
        if self.corrects:
            d["corrects"] = self.corrects
        if self.residual:
            d["residual"] = self.residual
        return d


def evaluate_identity(check: IdentityCheck, entry: CatalogEntry) -> IdentityResult:
    if not check.applies(entry):
        raise ConstraintUnsatisfied(f"check {check.name} needs branch {check.branch}")
    alg = entry.algebra
    va, vb = eigvecs(entry)
    env = {"a0": alg.e(0), "a1": alg.e(1), "m": alg.e(2), "va": va, "vb": vb}
    lhs = check.lhs.eval(alg, env, entry.params)
    rhs = check.rhs.eval(alg, env, entry.params)
    diff = lhs - rhs
    return IdentityResult(check.name, "pass" if diff.is_zero() else "fail", check.quoted,
                          check.corrects, check.branch,
                          "" if diff.is_zero() else alg.format_vector(diff),
                          alg.format_vector(lhs), alg.format_vector(rhs))


def identity_suite(entry: CatalogEntry, checks: Sequence[IdentityCheck] | None = None) -> list:
    """Evaluate every identity check against ``entry``; inapplicable ones are skipped."""
    out = []
    for chk in (IDENTITY_CHECKS if checks is None else checks):
        try:
            out.append(evaluate_identity(chk, entry))
        except ConstraintUnsatisfied:
            out.append(IdentityResult(chk.name, "skipped", chk.quoted, chk.corrects, chk.branch))
    return out


# --- entry invariants ------------------------------------------------------------

def swap_map(entry: CatalogEntry) -> AlgebraMap:
    """Exchange ``a0`` and ``a1`` (fixing ``a0a1`` in dimension 3)."""
    n = entry.dim
    rows = [[ZERO] * n for _ in range(n)]
    perm = {0: 1, 1: 0}
    for j in range(n):
        rows[perm.get(j, j)][j] = ONE
    return AlgebraMap(Matrix(rows))


def verify_entry(entry: CatalogEntry) -> dict:
    """Axis checks on both marked axes, generation and the swap automorphism."""
    alg = entry.algebra
    axes = []
    for i, a in enumerate(entry.axes[:2] if entry.dim > 1 else entry.axes[:1]):
        r = check_axis(alg, a, entry.law)
        axes.append({"axis": f"a{i}", **r.to_dict(alg)})
    gen = subalgebra_closure(alg, entry.axes).dim == alg.dim
    sigma = True
    if entry.dim > 1:
        sigma = check_map(alg, swap_map(entry))[0]
    ok = all(a["passed"] for a in axes) and gen and sigma
    return {"entry": entry.name, "passed": ok, "axes": axes, "generated": gen,
            "swap_automorphism": sigma}


# --- ideal tables ---------------------------------------------------------------

@dataclass
class IdealRow:
    label: str
    gens: tuple  # names among a0, a1, va, vb
    conditions: dict  # parameter -> value (str, or callable of the free alpha)
    quotient: str  # "2B(a)" | "2B(b)" | "1A"
    as_printed: bool = True
    note: str = ""


IDEALS_3A = [
    IdealRow("<va> | b=-1, x=-1/2", ("va",), {"b": "-1", "x": "-1/2"}, "2B(b)"),
    IdealRow("<va> | b=1/2, x=1", ("va",), {"b": "1/2", "x": "1"}, "2B(b)"),
    IdealRow("<vb> | b=1/2, x=a/(a-1)", ("vb",), {"b": "1/2", "x": "a/(a-1)"}, "2B(a)"),
    IdealRow("<a0, va> | b=0", ("a0", "va"), {"b": "0"}, "1A"),
    IdealRow("<a0, vb> | a=0, b=1/2, x=0", ("a0", "vb"), {"a": "0", "b": "1/2", "x": "0"}, "1A"),
    IdealRow("<va, vb> | b=1/2, x=1", ("va", "vb"), {"b": "1/2", "x": "1"}, "1A"),
    IdealRow("<va, vb> | b=2-3a, x=1", ("va", "vb"), {"b": "2-3*a", "x": "1"}, "1A"),
    IdealRow("<va, vb> | b=0, x=a/(1-a)", ("va", "vb"), {"b": "0", "x": "a/(1-a)"}, "1A"),
]

# alternative readings used to adjudicate rows that do not verify as printed
IDEALS_3A_ADJUDICATION = [
    IdealRow("<vb> | b=1/2, x=a/(1-a)", ("vb",), {"b": "1/2", "x": "a/(1-a)"}, "2B(a)",
             as_printed=False, note="sign of x flipped"),
    IdealRow("<a0, va> | b=0, x=0", ("a0", "va"), {"b": "0", "x": "0"}, "1A",
             as_printed=False, note="x=0 is not admissible for b=0 unless a=0"),
    IdealRow("<va, vb> | b=0, x=(a+b)/(2(1-a))", ("va", "vb"), {"b": "0"}, "1A",
             as_printed=False, note="the admissible x for b=0"),
]


def _d_rows(variant: str, literal: bool) -> list:
    """Ideals of the law-(d) algebras; ``literal`` swaps the 1-dim generator."""
    if variant == "beta-half":
        one_dim = "vb" if literal else "va"
    else:
        one_dim = "va" if literal else "vb"
    return [
        IdealRow(f"<{one_dim}>", (one_dim,), {}, "2B(1/2)", as_printed=literal,
                 note="" if not literal else "generator named for the half eigenvalue"),
        IdealRow("<va, vb>", ("va", "vb"), {}, "1A"),
    ]


def _row_params(row: IdealRow, alpha: Scalar) -> dict:
    sub = {"a": alpha}
    out = {}
    for k in ("a", "b"):
        if k in row.conditions:
            out[k] = parse_scalar(row.conditions[k]).subs(sub)
        else:
            out[k] = alpha if k == "a" else param("b")
    sub = {"a": out["a"], "b": out["b"]}
    if "x" in row.conditions:
        out["x"] = parse_scalar(row.conditions["x"]).subs(sub)
    else:
        out["x"] = None
    return out


def _expected_algebra(row: IdealRow, params: Mapping) -> CatalogEntry:
    q = row.quotient
    if q == "1A":
        return alg_1A()
    if q == "2B(a)":
        return alg_2B(params["alpha"])
    if q == "2B(b)":
        return alg_2B(params["beta"])
    if q.startswith("2B("):
        return alg_2B(parse_scalar(q[3:-1]))
    raise ValueError(q)


def check_ideal_row(entry: CatalogEntry, row: IdealRow) -> dict:
    """Ideal test and quotient identification for one row at one entry."""
    alg = entry.algebra
    va, vb = eigvecs(entry)
    env = {"a0": alg.e(0), "a1": alg.e(1), "va": va, "vb": vb}
    gens = [env[g] for g in row.gens]
    span = Subspace.span(gens, alg.dim)
    closure = ideal_closure(alg, gens)
    is_ideal = closure == span and 0 < span.dim < alg.dim
    res = {"span_dim": span.dim, "closure_dim": closure.dim, "is_ideal": is_ideal,
           "quotient_ok": False}
    if not is_ideal:
        return res
    q, proj = quotient(alg, span)
    target = _expected_algebra(row, entry.params)
    # an axis lying in the ideal has image 0; mark only the surviving images
    imgs = [proj(a) for a in entry.axes]
    live = [i for i, v in enumerate(imgs) if not v.is_zero()]
    if len(live) < len(imgs):
        res["vanishing_axes"] = [f"a{i}" for i in range(len(imgs)) if i not in live]
    iso = marked_iso(q, [imgs[i] for i in live], target.algebra,
                     [target.axes[k] for k in range(len(live))])
    res["quotient_dim"] = q.dim
    res["quotient_ok"] = iso is not None
    res["expected"] = target.name
    return res


def _free_rationals(rng: random.Random, k: int, avoid: Callable[[Fraction], bool]) -> list:
    out = []
    tries = 0
    while len(out) < k and tries < 500:
        tries += 1
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if v in out or avoid(v):
            continue
        out.append(v)
    return out


def _row_entry(row: IdealRow, alpha) -> CatalogEntry:
    p = _row_params(row, _s(alpha))
    return alg_3dim_A(p["a"], p["b"], p["x"])


def verify_ideal_row_3A(row: IdealRow, rng: random.Random, samples: int = 3) -> dict:
    out = {"row": row.label, "as_printed": row.as_printed, "expected_quotient": row.quotient}
    if row.note:
        out["note"] = row.note
    free = "a" not in row.conditions
    try:
        entry = _row_entry(row, param("a"))
    except BadParameter as e:
        out.update(status="fail", reason=f"parameters inadmissible: {e}")
        return out
    sym = check_ideal_row(entry, row)
    out["symbolic"] = sym
    inst = []
    if free:
        def bad(v):
            try:
                e = _row_entry(row, v)
            except (BadParameter, ZeroDivisionError):
                return True
            return any(p.evaluate({"a": v}) == 0 for p in _certificate_polys(entry))
        for v in _free_rationals(rng, samples, bad):
            r = check_ideal_row(_row_entry(row, v), row)
            inst.append({"a": str(v), **r})
    out["instances"] = inst
    ok = sym["is_ideal"] and sym["quotient_ok"] and all(i["is_ideal"] and i["quotient_ok"]
                                                       for i in inst)
    out["status"] = "pass" if ok else "fail"
    if not ok:
        out["reason"] = ("not closed under multiplication" if not sym["is_ideal"]
                         else "quotient does not match")
    return out


def _certificate_polys(entry: CatalogEntry) -> list:
    polys = list(entry.algebra.conditions)
    for a in entry.axes:
        polys.extend(eigendecompose(entry.algebra, a, entry.law.labels).certificate)
    return [p for p in polys if p.variables() <= {"a"}]


def verify_ideal_table(entry_kind: str = "3A", seed: int = 0, samples: int = 3) -> dict:
    """Check every ideal row; returns ``{"rows": [...], "adjudications": [...], ...}``.

    ``entry_kind`` is ``"3A"`` or ``"D-beta-half"`` / ``"D-alpha-half"``.
    """
    rng = random.Random(seed)
    if entry_kind == "3A":
        rows = [verify_ideal_row_3A(r, rng, samples) for r in IDEALS_3A]
        adj = [verify_ideal_row_3A(r, rng, samples) for r in IDEALS_3A_ADJUDICATION]
        neg = []
        for x in ("x", None):
            b = "1/2" if x else "b"
            e = alg_3dim_A("a", b, x)
            va, _ = eigvecs(e)
            c = ideal_closure(e.algebra, [va])
            neg.append({"entry": e.name, "closure_dim": c.dim, "is_ideal": c.dim == 1})
        return {"kind": entry_kind, "rows": rows, "adjudications": adj, "negative_control": neg}
    variant = entry_kind[2:]
    if variant not in ("beta-half", "alpha-half"):
        raise ValueError(f"unknown table {entry_kind!r}")
    rows, adj = [], []
    for literal, bucket in ((False, rows), (True, adj)):
        for r in _d_rows(variant, literal):
            if literal and r.label == "<va, vb>":
                continue
            entry = alg_3dim_D(variant, "a")
            res = check_ideal_row(entry, r)
            inst = []
            for v in _free_rationals(rng, samples, lambda v: v in (0, 1, HALF)):
                inst.append({"a": str(v), **check_ideal_row(alg_3dim_D(variant, v), r)})
            ok = res["is_ideal"] and res["quotient_ok"] and all(
                i["is_ideal"] and i["quotient_ok"] for i in inst)
            item = {"row": r.label, "as_printed": r.as_printed, "expected_quotient": r.quotient,
                    "symbolic": res, "instances": inst, "status": "pass" if ok else "fail"}
            if r.note:
                item["note"] = r.note
            bucket.append(item)
    return {"kind": entry_kind, "rows": rows, "adjudications": adj}


# --- generic Jordan case list -------------------------------------------------------

def generic_jordan_cases() -> list:
    """``(case, entry, law)`` for every listed case plus off-case controls."""
    a, b = param("a"), param("b")
    cases = [
        ("i.a", alg_3dim_A(0, "1/2", "x")),
        ("i.b", alg_3dim_A(0, "b", b / 2)),
        ("i.c", alg_3dim_A("a", "1/2", 1)),
        ("i.d", alg_3dim_A("a", -1, "-1/2")),
        ("i.e", alg_3dim_A("a", 2 - 3 * a, 1)),
        ("ii alpha=0", alg_2B(0)),
        ("ii alpha=-1/2", alg_2B("-1/2")),
        ("iii beta=-1", alg_2B(-1)),
        ("iii beta=1/2", alg_2B("1/2")),
    ]
    out = []
    for name, e in cases:
        p = e.params
        if e.kind == "2B":
            al = p["alpha"]
            law = jordan_generic(al, b) if name.startswith("ii ") else jordan_generic(a, al)
        else:
            law = jordan_generic(p["alpha"], p["beta"])
        out.append({"case": name, "entry": e, "law": law, "listed": True})
    off = alg_3dim_A("1/4", "1/3")
    out.append({"case": "control 3A(1/4, 1/3, X)", "entry": off,
                "law": jordan_generic("1/4", "1/3"), "listed": False})
    out.append({"case": "control 2B(1/3)", "entry": alg_2B("1/3"),
                "law": jordan_generic("1/3", b), "listed": False})
    return out


def run_generic_jordan() -> list:
    res = []
    for c in generic_jordan_cases():
        e = c["entry"]
        reps = [check_axis(e.algebra, ax, c["law"]) for ax in e.axes]
        viol = [{"axis": f"a{i}", "lambda": str(l), "mu": str(m), "component": str(n),
                 "vector": e.algebra.format_vector(v)}
                for i, r in enumerate(reps) for (l, m, n, v) in r.violations]
        res.append({"case": c["case"], "entry": e.name, "listed": c["listed"],
                    "passed": all(r.passed for r in reps), "violations": viol})
    return res


# --- 2B gradings ------------------------------------------------------------------

def square_coefficients_2B(alpha="a") -> dict:
    """Components of ``v v`` for the ``alpha``-eigenvector ``v`` of ``a0`` in 2B(alpha).

    ``v`` is scaled to have ``a1``-coordinate 1; returns the scalar ``phi`` of the
    1-part and the coefficient of ``v`` in the alpha-part.
    """
    e = alg_2B(alpha)
    alg = e.algebra
    d = eigendecompose(alg, e.axes[0], e.law.labels)
    one, al = e.law.labels
    v = d.spaces[al].basis[0]
    v = v / v[1]
    comps = d.components(alg.product(v, v))
    return {"one": phi(alg, e.axes[0], d, comps[one]), "alpha": comps[al][1]}


# --- open question: the law-(d) square ----------------------------------------------

def adjudicate_square(points=("1/4", "3", "-2")) -> dict:
    """Run law-(d) axis checks on both candidate squares of the beta-half algebra."""
    out = {}
    for form in ("graded", "tabulated"):
        sym = alg_3dim_D("beta-half", "a", form)
        ok_sym = all(check_axis(sym.algebra, ax, sym.law).passed for ax in sym.axes)
        pts = {}
        for p in points:
            e = alg_3dim_D("beta-half", p, form)
            pts[p] = all(check_axis(e.algebra, ax, e.law).passed for ax in e.axes)
        out[form] = {"symbolic": ok_sym, "points": pts,
                     "accepted": ok_sym and all(pts.values())}
    survivors = [f for f, r in out.items() if r["accepted"]]
    out["survivor"] = survivors[0] if len(survivors) == 1 else None
    return out


# --- tabulated products of the graded algebras -----------------------------------------

def tabulated_products(row: int) -> dict:
    """Products as listed for the graded 3-dimensional algebras (rows 2-4)."""
    a, b, x = param("a"), param("b"), param("x")
    h = _s(HALF)
    if row == 2:
        m = [(1 - b) * (a + b) / 2, -a * b, a + b]
        k = (1 - 3 * a - b) * (a + b) / 2
        sq = [k * b, k * b, -k]
        return {"a0*a0a1": m, "a0a1*a0a1": sq, "params": {"a": a, "b": b}}
    if row == 3:
        m = [(1 - a) * x / 2, -a / 2, (2 * a + 1) / 2]
        c = ((2 * a - 1) * (a - 1) * x - (2 * a + 1) * a) / 4
        d = -((2 * a + 1) * (a - 1) * x + (2 * a + 3) * a) / 2
        return {"a0*a0a1": m, "a0a1*a0a1": [c, c, d], "params": {"a": a, "b": h, "x": x}}
    if row == 4:
        m = [(1 - a) / 2, -a / 2, (2 * a + 1) / 2]
        c = (4 - a) / 4
        return {"a0*a0a1": m, "a0a1*a0a1": [c, c, -2 * c], "params": {"a": a, "b": h}}
    raise ValueError(row)


def compare_tabulated(row: int) -> dict:
    t = tabulated_products(row)
    if row == 2:
        e = alg_3dim_A("a", "b")
    elif row == 3:
        e = alg_3dim_A("a", "1/2", "x")
    else:
        e = alg_3dim_D("beta-half", "a", "graded")
    alg = e.algebra
    out = {}
    for key, (i, j) in (("a0*a0a1", (0, 2)), ("a0a1*a0a1", (2, 2))):
        diff = alg.structure(i, j) - Vect([_s(c) for c in t[key]])
        out[key] = {"equal": diff.is_zero(),
                    "difference": "" if diff.is_zero() else alg.format_vector(diff)}
    # does the listed algebra itself satisfy its law?
    listed = Algebra(alg.basis, {
        (0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (0, 1): [0, 0, 1],
        (0, 2): t["a0*a0a1"], (1, 2): [t["a0*a0a1"][1], t["a0*a0a1"][0], t["a0*a0a1"][2]],
        (2, 2): t["a0a1*a0a1"]}, name=f"listed row {row}")
    out["listed_passes_law"] = all(check_axis(listed, ax, e.law).passed
                                   for ax in (listed.e(0), listed.e(1)))
    return out


# --- documented discrepancies --------------------------------------------------------

DISCREPANCIES = {
    "identity-2": "v_b v_b in the x=(a+b)/(2(1-a)) branch carries an extra factor 1/4",
    "identity-3": "a0(v_b v_b) - a v_b v_b in the same branch carries an extra factor 1/4",
    "identity-4": "v_a v_b = (a+b-1)((b-1)x+b) v_b; the listed coefficient has the opposite sign",
    "identity-7c": "v_b v_b = -2(a-1/2)^2 v_a in the beta-half law-(d) algebra",
    "ideal <vb> | b=1/2, x=a/(a-1)": "ideal exactly when x = a/(1-a); quotient 2B(a)",
    "ideal <a0, va> | b=0": "needs x = 0, which the b != 1/2 branch forbids (x = a/(2(1-a)))",
    "ideal <va, vb> | b=0, x=a/(1-a)": "x is not admissible for b=0; at the admissible x the "
                                      "closure is the whole algebra unless 3a+b=2",
    "law-d ideals": "the 1-dim ideal is spanned by the eigenvector for the eigenvalue other "
                    "than 1/2 (quotient 2B(1/2)); the one for 1/2 does not span an ideal",
    "rows 2-3 square": "listed (a0a1)^2 formulas differ from the constructor and violate law (a)",
    "jordan ii": "2B(-1/2) violates the generic Jordan law; 2B(1/2) satisfies it",
    "jordan control": "off-case 3A(1/4, 1/3, X) fails through a 1-component at (a, a)",
    "2B(1/2) grading": "minimal law has a*a empty, so the grading group is Z rather than C2",
}
