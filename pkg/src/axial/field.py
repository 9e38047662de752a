"""Exact scalars: multivariate polynomials over Q and reduced rational functions.

A :class:`Scalar` is an element of ``Q(a, b, x, y, ...)``, optionally extended by a
primitive cube root of unity ``omega`` (``omega**2 + omega + 1 == 0``).  Every value
is kept in a canonical reduced form, so equality is structural equality.

Parameters are identified by name.  The global variable order is ``a, b, x, y``
followed by any other name in alphabetical order; monomials are compared in graded
lexicographic order with respect to it.

>>> a, b = param("a"), param("b")
>>> (a**2 - b**2) / (a - b)
Scalar('a + b')
>>> parse_scalar("1/(a-1) + 1/(1-a)")
Scalar('0')
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .errors import (
    DenominatorVanishes,
    DivisionByZero,
    ModeMismatch,
    OmegaUnevaluable,
    ParseError,
    ZeroDenominator,
)

__all__ = [
    "FIXED_ORDER",
    "MultiPoly",
    "Scalar",
    "normalize",
    "arith",
    "evaluate",
    "param",
    "parse_scalar",
    "parse_poly",
    "as_scalar",
    "poly_gcd",
    "OMEGA_NAME",
]

FIXED_ORDER = ("a", "b", "x", "y")
OMEGA_NAME = "omega"
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple of (name, exponent) pairs sorted by variable order


# ---------------------------------------------------------------------------
# monomials


@lru_cache(maxsize=None)
def _var_rank(name: str):
    if name in FIXED_ORDER:
        return (0, FIXED_ORDER.index(name), "")
    return (1, 0, name)


@lru_cache(maxsize=None)
def _var_desc(name: str):
    # sorts descending exactly when _var_rank sorts ascending
    if name in FIXED_ORDER:
        return (1, -FIXED_ORDER.index(name))
    return (0, tuple(-ord(c) for c in name) + (1,))


@lru_cache(maxsize=None)
def _grlex_key(m: Monomial):
    return (sum(e for _, e in m), tuple((_var_desc(v), e) for v, e in m))


@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: _var_rank(t[0])))


@lru_cache(maxsize=None)
def _mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2, or None if m2 does not divide m1."""
    d = dict(m1)
    for v, e in m2:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r:
            d[v] = r
        else:
            del d[v]
    return tuple(sorted(d.items(), key=lambda t: _var_rank(t[0])))


def _check_name(name: str) -> str:
    if not _NAME_RE.match(name):
        raise ParseError(f"invalid parameter name {name!r}")
    if name == OMEGA_NAME:
        raise ParseError(f"{OMEGA_NAME!r} is reserved for the cube root of unity")
    return name


def _cnorm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _cnorm(Fraction(a) / b)


# ---------------------------------------------------------------------------
# polynomials


class MultiPoly:
    """Sparse polynomial with rational coefficients in named parameters.

    ``terms`` maps monomials (sorted tuples of ``(name, exponent)``) to nonzero
    coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        if terms:
            self.terms = {m: _cnorm(c) for m, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # constructors ----------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _cnorm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw({((_check_name(name), 1),): 1})

    # predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(()) == 1

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), 0)

    def variables(self) -> frozenset:
        return frozenset(v for m in self.terms for v, _ in m)

    @property
    def parameters(self) -> tuple:
        return tuple(sorted(self.variables(), key=_var_rank))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def leading(self):
        """Leading (monomial, coefficient) in graded lexicographic order."""
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def exponent_vector(self, m: Monomial, parameters=None) -> tuple:
        params = parameters or self.parameters
        d = dict(m)
        return tuple(d.get(p, 0) for p in params)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = _cnorm(s) if isinstance(s, Fraction) else s
            else:
                t.pop(m, None)
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return MultiPoly._raw({})
                return MultiPoly._raw({m: _cnorm(c * other) for m, c in self.terms.items()})
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly._raw({})
        if len(other.terms) == 1 and () in other.terms:
            return self * other.terms[()]
        if len(self.terms) == 1 and () in self.terms:
            return other * self.terms[()]
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: _cnorm(c) for m, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = MultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise DivisionByZero("division of a polynomial by zero")
        if len(other.terms) == 1 and () in other.terms:
            c = other.terms[()]
            return MultiPoly._raw({m: _cdiv(v, c) for m, v in self.terms.items()})
        lm, lc = other.leading()
        rem = dict(self.terms)
        q: dict = {}
        while rem:
            m = max(rem, key=_grlex_key)
            qm = _mono_div(m, lm)
            if qm is None:
                raise ArithmeticError("inexact polynomial division")
            qc = _cdiv(rem[m], lc)
            q[qm] = qc
            for m2, c2 in other.terms.items():
                mm = _mono_mul(qm, m2)
                s = rem.get(mm, 0) - qc * c2
                if s:
                    rem[mm] = _cnorm(s) if isinstance(s, Fraction) else s
                else:
                    rem.pop(mm, None)
        return MultiPoly._raw(q)

    # evaluation ------------------------------------------------------------
    def evaluate(self, at: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for name, e in m:
                if name not in at:
                    raise KeyError(f"no value for parameter {name!r}")
                v *= Fraction(at[name]) ** e
            total += v
        return total

    def subs(self, at: Mapping[str, object]) -> "MultiPoly":
        """Partial specialization at rational values."""
        t: dict = {}
        for m, c in self.terms.items():
            v = Fraction(c)
            rest = []
            for name, e in m:
                if name in at:
                    v *= Fraction(at[name]) ** e
                else:
                    rest.append((name, e))
            if v:
                key = tuple(rest)
                t[key] = t.get(key, 0) + v
        return MultiPoly(t)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        t: dict = {}
        for m, c in self.terms.items():
            d: dict = {}
            for name, e in m:
                n2 = mapping.get(name, name)
                d[n2] = d.get(n2, 0) + e
            key = tuple(sorted(d.items(), key=lambda kv: _var_rank(kv[0])))
            t[key] = t.get(key, 0) + c
        return MultiPoly(t)

    # integer normal forms ---------------------------------------------------
    def denominator_lcm(self) -> int:
        return reduce(lcm, (Fraction(c).denominator for c in self.terms.values()), 1)

    def content(self) -> int:
        """gcd of the (integer) coefficients, 0 for the zero polynomial."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c))
            if g == 1:
                break
        return g

    def primitive(self) -> "MultiPoly":
        """Integer primitive part with positive leading coefficient."""
        if not self.terms:
            return self
        p = self * self.denominator_lcm()
        c = p.content()
        if p.leading()[1] < 0:
            c = -c
        return p if c == 1 else MultiPoly._raw({m: v // c for m, v in p.terms.items()})

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.terms.get((), 0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # text -------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            c = -c if neg else c
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        return parse_poly(text)


_ZERO_P = MultiPoly._raw({})
_ONE_P = MultiPoly._raw({(): 1})


# ---------------------------------------------------------------------------
# gcd over Z[params]: recursive content / primitive pseudo-remainder sequences


def _univariate(p: MultiPoly, v: str) -> dict:
    out: dict = {}
    for m, c in p.terms.items():
        d = 0
        rest = []
        for name, e in m:
            if name == v:
                d = e
            else:
                rest.append((name, e))
        out.setdefault(d, {})[tuple(rest)] = c
    return {d: MultiPoly._raw(t) for d, t in out.items()}


def _from_univariate(u: dict, v: str) -> MultiPoly:
    total = _ZERO_P
    for d, coeff in u.items():
        if d == 0:
            total = total + coeff
        else:
            total = total + coeff * MultiPoly._raw({((v, d),): 1})
    return total


def _content_of(u: dict) -> MultiPoly:
    g = _ZERO_P
    for c in u.values():
        g = poly_gcd(g, c)
        if g.is_one():
            break
    return g


def _prem(A: dict, B: dict) -> dict:
    db = max(B)
    lcb = B[db]
    R = dict(A)
    while R and max(R) >= db:
        dr = max(R)
        lcr = R[dr]
        shift = dr - db
        new = {d: c * lcb for d, c in R.items()}
        for d, c in B.items():
            k = d + shift
            s = new.get(k, _ZERO_P) - lcr * c
            if s.is_zero():
                new.pop(k, None)
            else:
                new[k] = s
        R = new
    return R


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Greatest common divisor, normalized: integer primitive, positive leading coefficient.

    Coefficients may be rational; the result is the primitive integer associate.
    """
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    if f.is_constant() or g.is_constant():
        return _ONE_P
    common = f.variables() & g.variables()
    if not common:
        return _ONE_P
    f, g = f.primitive(), g.primitive()
    if f == g:
        return f
    v = min(common, key=_var_rank)
    F, G = _univariate(f, v), _univariate(g, v)
    cf, cg = _content_of(F), _content_of(G)
    c = poly_gcd(cf, cg)
    A = {d: p.divexact(cf) for d, p in F.items()}
    B = {d: p.divexact(cg) for d, p in G.items()}
    if max(A) < max(B):
        A, B = B, A
    while True:
        R = _prem(A, B)
        if not R:
            break
        if max(R) == 0:
            B = {0: _ONE_P}
            break
        cr = _content_of(R)
        A, B = B, {d: p.divexact(cr) for d, p in R.items()}
    cb = _content_of(B)
    B = {d: p.divexact(cb) for d, p in B.items()}
    return (c * _from_univariate(B, v)).primitive()


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """Canonical element ``(num + omega_part*omega) / den`` of Q(params)[omega].

    ``num``, ``omega_part`` and ``den`` have integer coefficients with no common
    polynomial factor and no common integer factor; ``den`` has a positive
    leading coefficient.  ``omega_part`` is ``None`` for plain scalars and a
    (possibly zero) polynomial for scalars of the omega-extended field.
    """

    __slots__ = ("num", "den", "omega_part", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly, omega_part: MultiPoly | None = None):
        # trusted constructor: callers guarantee canonical form
        self.num = num
        self.den = den
        self.omega_part = omega_part
        self._hash = None

    # constructors ----------------------------------------------------------
    @classmethod
    def fraction(cls, num, den=None, omega_part=None) -> "Scalar":
        """Build a canonical scalar from arbitrary (rational-coefficient) parts."""
        num = _to_poly(num)
        den = _ONE_P if den is None else _to_poly(den)
        om = None if omega_part is None else _to_poly(omega_part)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        scale = lcm(num.denominator_lcm(), den.denominator_lcm(),
                    om.denominator_lcm() if om is not None else 1)
        if scale != 1:
            num, den = num * scale, den * scale
            if om is not None:
                om = om * scale
        return _canon(num, den, om)

    @classmethod
    def const(cls, c, extended: bool = False) -> "Scalar":
        c = Fraction(c)
        s = Scalar(MultiPoly.const(c.numerator), MultiPoly.const(c.denominator),
                   _ZERO_P if extended else None)
        return s

    @classmethod
    def omega(cls) -> "Scalar":
        return Scalar(_ZERO_P, _ONE_P, _ONE_P)

    # mode ------------------------------------------------------------------
    @property
    def extended(self) -> bool:
        return self.omega_part is not None

    def to_extended(self) -> "Scalar":
        if self.omega_part is not None:
            return self
        return Scalar(self.num, self.den, _ZERO_P)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if (other.omega_part is None) != (self.omega_part is None):
                raise ModeMismatch("cannot mix plain and omega-extended scalars")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.const(other, self.omega_part is not None)
        if isinstance(other, str):
            s = parse_scalar(other)
            return s.to_extended() if self.omega_part is not None else s
        raise TypeError(f"cannot coerce {type(other).__name__} to Scalar")

    # predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms and not (self.omega_part and self.omega_part.terms)

    def __bool__(self):
        return not self.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one() and not self.omega_part

    def is_constant(self) -> bool:
        """True when no parameter occurs (omega is allowed)."""
        return (self.num.is_constant() and self.den.is_constant()
                and (self.omega_part is None or self.omega_part.is_constant()))

    def is_rational(self) -> bool:
        return self.is_constant() and not self.omega_part

    def constant_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self.num.constant_value(), self.den.constant_value())

    @property
    def parameters(self) -> tuple:
        vs = self.num.variables() | self.den.variables()
        if self.omega_part is not None:
            vs |= self.omega_part.variables()
        return tuple(sorted(vs, key=_var_rank))

    def degree(self) -> int:
        d = max(self.num.degree(), 0) + max(self.den.degree(), 0)
        if self.omega_part is not None:
            d = max(d, max(self.omega_part.degree(), 0) + max(self.den.degree(), 0))
        return d

    def norm_numerator(self) -> MultiPoly:
        """Polynomial whose vanishing at a rational point is equivalent to ``self == 0`` there."""
        if self.omega_part is None or self.omega_part.is_zero():
            return self.num
        n, o = self.num, self.omega_part
        return n * n - n * o + o * o

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        om1, om2 = self.omega_part, o.omega_part
        if self.den == o.den:
            num = self.num + o.num
            om = None if om1 is None else om1 + om2
            return _canon(num, self.den, om)
        num = self.num * o.den + o.num * self.den
        om = None if om1 is None else om1 * o.den + om2 * self.den
        return _canon(num, self.den * o.den, om)

    __radd__ = __add__

    def __neg__(self):
        om = None if self.omega_part is None else -self.omega_part
        return Scalar(-self.num, self.den, om)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return Scalar(_ZERO_P, _ONE_P, None if self.omega_part is None else _ZERO_P)
        if o.is_one():
            return self
        if self.is_one():
            return o
        if self.omega_part is None:
            return _canon(self.num * o.num, self.den * o.den, None)
        n1, o1, n2, o2 = self.num, self.omega_part, o.num, o.omega_part
        # omega^2 = -1 - omega
        oo = o1 * o2
        num = n1 * n2 - oo
        om = n1 * o2 + o1 * n2 - oo
        return _canon(num, self.den * o.den, om)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.omega_part is None:
            return _canon(self.den, self.num, None)
        n, o = self.num, self.omega_part
        norm = n * n - n * o + o * o
        # (n + o w)^-1 = (n + o wbar) / norm with wbar = -1 - w
        return _canon(self.den * (n - o), norm, -(self.den * o))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.omega_part is None:
            return _canon(self.num * o.den, self.den * o.num, None)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.const(1, self.extended)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """Image under omega -> omega^2 (identity on plain scalars)."""
        if self.omega_part is None:
            return self
        return _canon(self.num - self.omega_part, self.den, -self.omega_part)

    # specialization ---------------------------------------------------------
    def evaluate(self, at: Mapping[str, object]) -> Fraction:
        if self.omega_part is not None and not self.omega_part.subs(at).is_zero():
            raise OmegaUnevaluable(f"{self} has no rational value")
        d = self.den.evaluate(at)
        if d == 0:
            raise DenominatorVanishes(f"denominator of {self} vanishes at {dict(at)}")
        return self.num.evaluate(at) / d

    def subs(self, at: Mapping[str, object]) -> "Scalar":
        """Specialize parameters at rationals or substitute Scalar expressions."""
        at, symbolic = _split_assignment(at)
        if symbolic:
            return self._compose(at, symbolic)
        d = self.den.subs(at)
        if d.is_zero():
            raise DenominatorVanishes(f"denominator of {self} vanishes at {dict(at)}")
        om = None if self.omega_part is None else self.omega_part.subs(at)
        return Scalar.fraction(self.num.subs(at), d, om)

    def _compose(self, rational: dict, symbolic: dict) -> "Scalar":
        ext = self.extended or any(v.extended for v in symbolic.values())

        def ev(p: MultiPoly) -> "Scalar":
            p = p.subs(rational)
            total = Scalar.const(0, ext)
            for m, c in p.terms.items():
                t = Scalar.const(c, ext)
                rest = []
                for name, e in m:
                    if name in symbolic:
                        t = t * symbolic[name] ** e
                    else:
                        rest.append((name, e))
                if rest:
                    t = t * Scalar.fraction(MultiPoly._raw({tuple(rest): 1}), _ONE_P).to_extended() \
                        if ext else t * Scalar.fraction(MultiPoly._raw({tuple(rest): 1}), _ONE_P)
                total = total + t
            return total

        den = ev(self.den)
        if den.is_zero():
            raise DenominatorVanishes(f"denominator of {self} vanishes under the substitution")
        num = ev(self.num)
        if self.omega_part is not None:
            num = num + ev(self.omega_part) * Scalar.omega()
        return num / den

    def rename(self, mapping: Mapping[str, str]) -> "Scalar":
        om = None if self.omega_part is None else self.omega_part.rename(mapping)
        return Scalar.fraction(self.num.rename(mapping), self.den.rename(mapping), om)

    # comparison ------------------------------------------------------------
    def _key(self):
        return (self.num, self.den, self.omega_part)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if self.omega_part is None and other.omega_part is None:
                return self.num == other.num and self.den == other.den
            if (self.omega_part is None) != (other.omega_part is None):
                # compare across modes only through a zero omega part
                a, b = self.to_extended(), other.to_extended()
                return a._key() == b._key()
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return (not self.omega_part and self.den.is_constant() and self.num.is_constant()
                    and Fraction(self.num.constant_value(), self.den.constant_value()) == other)
        if isinstance(other, str):
            return self == parse_scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            om = self.omega_part if self.omega_part else None
            self._hash = hash((self.num, self.den, om))
        return self._hash

    def sort_key(self):
        return (self.degree(), str(self))

    # text -------------------------------------------------------------------
    def __str__(self):
        if self.den.is_constant():
            c = self.den.constant_value()
            base = str(self.num * Fraction(1, c)) if c != 1 else str(self.num)
            if not self.omega_part:
                return base
            om = self.omega_part * Fraction(1, c)
            tail = f"({om})*{OMEGA_NAME}"
            return tail if self.num.is_zero() else f"{base} + {tail}"
        if not self.omega_part:
            return f"({self.num})/({self.den})"
        return f"(({self.num}) + ({self.omega_part})*{OMEGA_NAME})/({self.den})"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _split_assignment(at: Mapping[str, object]):
    rational, symbolic = {}, {}
    for k, v in at.items():
        if isinstance(v, Scalar):
            if v.is_rational():
                rational[k] = v.constant_value()
            else:
                symbolic[k] = v
        else:
            rational[k] = Fraction(v)
    return rational, symbolic


def _to_poly(p) -> MultiPoly:
    if isinstance(p, MultiPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return MultiPoly.const(p)
    if isinstance(p, str):
        return parse_poly(p)
    raise TypeError(f"cannot convert {type(p).__name__} to MultiPoly")


def _canon(num: MultiPoly, den: MultiPoly, om: MultiPoly | None) -> Scalar:
    """Reduce integer-coefficient parts to canonical form."""
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero() and (om is None or om.is_zero()):
        return Scalar(_ZERO_P, _ONE_P, None if om is None else _ZERO_P)
    if not den.is_constant():
        g = poly_gcd(den, num)
        if om is not None and not om.is_zero() and not g.is_one():
            g = poly_gcd(g, om)
        if not g.is_constant():
            num, den = num.divexact(g), den.divexact(g)
            if om is not None:
                om = om.divexact(g)
    # integer content and sign
    c = gcd(num.content(), den.content())
    if om is not None and c != 1:
        c = gcd(c, om.content())
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        num = MultiPoly._raw({m: v // c for m, v in num.terms.items()})
        den = MultiPoly._raw({m: v // c for m, v in den.terms.items()})
        if om is not None:
            om = MultiPoly._raw({m: v // c for m, v in om.terms.items()})
    return Scalar(num, den, om)


ZERO = Scalar(_ZERO_P, _ONE_P)
ONE = Scalar(_ONE_P, _ONE_P)


def as_scalar(value, extended: bool = False) -> Scalar:
    """Coerce an int, Fraction, string or Scalar into a Scalar of the requested mode."""
    if isinstance(value, Scalar):
        s = value
    elif isinstance(value, (int, Fraction)):
        s = Scalar.const(value)
    elif isinstance(value, str):
        s = parse_scalar(value)
    elif isinstance(value, MultiPoly):
        s = Scalar.fraction(value)
    else:
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")
    if extended:
        return s.to_extended()
    return s


def param(name: str, extended: bool = False) -> Scalar:
    s = Scalar(MultiPoly.var(name), _ONE_P)
    return s.to_extended() if extended else s


def normalize(raw_numerator, raw_denominator) -> Scalar:
    """Canonical reduced form of ``raw_numerator / raw_denominator``."""
    return Scalar.fraction(raw_numerator, raw_denominator)


def arith(a, b, op: str) -> Scalar:
    a = as_scalar(a) if not isinstance(a, Scalar) else a
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(s, at: Mapping[str, object]) -> Fraction:
    return as_scalar(s).evaluate(at)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} in {text!r}")
            toks.append(("op", op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, extended: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.extended = extended or any(t == ("name", OMEGA_NAME) for t in self.toks)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Scalar:
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ZeroDenominator(f"division by zero in {self.text!r}")
                v = v / w
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Scalar.const(val, self.extended)
        if kind == "name":
            if val == OMEGA_NAME:
                return Scalar.omega()
            return param(val, self.extended)
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {self.text!r}")
            return v
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_scalar(text: str, extended: bool = False) -> Scalar:
    """Parse ``"(a^2 - b^2)/(a - b)"``-style text; ``omega`` selects the extended field."""
    return _Parser(text, extended).parse()


def parse_poly(text: str) -> MultiPoly:
    s = parse_scalar(text)
    if s.omega_part is not None or not s.den.is_constant():
        raise ParseError(f"{text!r} is not a polynomial")
    return s.num * Fraction(1, s.den.constant_value())


def parameters_of(values: Iterable[Scalar]) -> tuple:
    vs: set = set()
    for v in values:
        vs.update(v.parameters)
    return tuple(sorted(vs, key=_var_rank))
