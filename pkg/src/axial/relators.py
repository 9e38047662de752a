"""Relators of the universal primitive axial algebra, evaluated in concrete algebras.

Words in the free commutative magma are binary trees over generator indices.
For every axis ``a``, word ``x``, ``y`` and eigenvalues ``lam``, ``mu`` the
following vectors must vanish in any primitive axial algebra obeying the law:

* idempotent:   ``a a - a``
* primitivity:  ``f_{F-{1}}(ad_a)(x - phi_a(x) a)``
* fusion:       ``f_{lam*mu}(ad_a)( f_{F-{lam}}(ad_a)(x) . f_{F-{mu}}(ad_a)(y) )``

where ``f_L(t) = prod_{l in L} (t - l)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .algebra import Algebra, eigendecompose, f_poly_adjoint, phi
from .errors import AxialError
from .field import ONE
from .fusion import FusionLaw
from .linalg import Vect

__all__ = [
    "MagmaWord",
    "RelatorInstance",
    "RelatorReport",
    "enumerate_words",
    "word_counts",
    "eval_word",
    "eval_relator",
    "check_all",
]


class MagmaWord:
    """Element of the free commutative magma; children are kept in canonical order."""

    __slots__ = ("left", "right", "gen", "length", "_key")

    def __init__(self, gen: int | None = None, left: "MagmaWord | None" = None,
                 right: "MagmaWord | None" = None):
        if gen is not None:
            self.gen, self.left, self.right, self.length = gen, None, None, 1
        else:
            if left.key > right.key:
                left, right = right, left
            self.gen, self.left, self.right = None, left, right
            self.length = left.length + right.length
        self._key = None

    @classmethod
    def generator(cls, i: int) -> "MagmaWord":
        return cls(gen=i)

    @classmethod
    def of(cls, tree) -> "MagmaWord":
        """Build from an int or a nested pair of ints."""
        if isinstance(tree, MagmaWord):
            return tree
        if isinstance(tree, int):
            return cls(gen=tree)
        u, v = tree
        return cls(left=cls.of(u), right=cls.of(v))

    def __mul__(self, other: "MagmaWord") -> "MagmaWord":
        return MagmaWord(left=self, right=other)

    @property
    def key(self) -> tuple:
        # shorter words first; generators by index; products by their children
        if self._key is None:
            if self.gen is not None:
                self._key = (1, self.gen)
            else:
                self._key = (self.length, self.left.key, self.right.key)
        return self._key

    def is_generator(self) -> bool:
        return self.gen is not None

    def __eq__(self, other):
        return isinstance(other, MagmaWord) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        if self.gen is not None:
            return f"a{self.gen}"
        l, r = str(self.left), str(self.right)
        if not self.left.is_generator():
            l = f"({l})"
        if not self.right.is_generator():
            r = f"({r})"
        return l + r

    __repr__ = __str__


def enumerate_words(n_gens: int, max_len: int) -> list:
    """All canonical words of length at most ``max_len``, ordered by length."""
    if n_gens < 1 or max_len < 1:
        raise ValueError("need n_gens >= 1 and max_len >= 1")
    by_len = {1: [MagmaWord(gen=i) for i in range(n_gens)]}
    for n in range(2, max_len + 1):
        out = []
        for i in range(1, n // 2 + 1):
            left, right = by_len[i], by_len[n - i]
            for p, u in enumerate(left):
                # equal lengths: unordered pairs with repetition
                for v in (right[p:] if i == n - i else right):
                    out.append(MagmaWord(left=u, right=v))
        by_len[n] = out
    return [w for n in range(1, max_len + 1) for w in by_len[n]]


def word_counts(n_gens: int, max_len: int) -> list:
    """Number of commutative words of each length ``1..max_len`` by the recurrence."""
    w = [0, n_gens]
    for n in range(2, max_len + 1):
        total = sum(w[i] * w[n - i] for i in range(1, (n + 1) // 2))
        if n % 2 == 0:
            h = w[n // 2]
            total += h * (h + 1) // 2
        w.append(total)
    return w[1:]


def eval_word(alg: Algebra, w: MagmaWord, assignment: Sequence[Vect], _cache=None) -> Vect:
    if w.gen is not None:
        return assignment[w.gen]
    if _cache is not None and w in _cache:
        return _cache[w]
    v = alg.product(eval_word(alg, w.left, assignment, _cache),
                    eval_word(alg, w.right, assignment, _cache))
    if _cache is not None:
        _cache[w] = v
    return v


@dataclass(frozen=True)
class RelatorInstance:
    kind: str  # "idempotent" | "primitivity" | "fusion"
    axis: int
    words: tuple = ()
    pair: tuple = ()

    def describe(self) -> str:
        if self.kind == "idempotent":
            return f"idempotent(a{self.axis})"
        if self.kind == "primitivity":
            return f"primitivity(a{self.axis}; {self.words[0]})"
        l, m = self.pair
        return f"fusion(a{self.axis}; {l}, {m}; {self.words[0]}, {self.words[1]})"


class _AxisContext:
    """Per-axis caches: eigendecomposition, word values and ``f``-images."""

    def __init__(self, alg: Algebra, law: FusionLaw, axis: Vect, word_cache: dict,
                 assignment: Sequence[Vect]):
        self.alg, self.law, self.axis = alg, law, axis
        self.word_cache = word_cache
        self.assignment = assignment
        self.one = ONE.to_extended() if alg.extended else ONE
        self.others = [l for l in law.labels if l != self.one]
        self._f = {}

    @cached_property
    def decomp(self):
        return eigendecompose(self.alg, self.axis, self.law.labels)

    def value(self, w: MagmaWord) -> Vect:
        return eval_word(self.alg, w, self.assignment, self.word_cache)

    def f_except(self, lam, w: MagmaWord) -> Vect:
        key = (lam, w)
        if key not in self._f:
            lams = [l for l in self.law.labels if l != lam]
            self._f[key] = f_poly_adjoint(self.alg, self.axis, lams, self.value(w))
        return self._f[key]


def _eval(ctx: _AxisContext, r: RelatorInstance) -> Vect:
    alg, a = ctx.alg, ctx.axis
    if r.kind == "idempotent":
        return alg.product(a, a) - a
    if r.kind == "primitivity":
        v = ctx.value(r.words[0])
        p = phi(alg, a, ctx.decomp, v)
        return f_poly_adjoint(alg, a, ctx.others, v - a * p)
    if r.kind == "fusion":
        lam, mu = r.pair
        x, y = r.words
        prod = alg.product(ctx.f_except(lam, x), ctx.f_except(mu, y))
        return f_poly_adjoint(alg, a, ctx.law.product(lam, mu), prod)
    raise ValueError(f"unknown relator kind {r.kind!r}")


def eval_relator(alg: Algebra, r: RelatorInstance, law: FusionLaw,
                 axes: Sequence[Vect]) -> Vect:
    """Value of a single relator; generators of the words are the ``axes``."""
    ctx = _AxisContext(alg, law, axes[r.axis], {}, axes)
    return _eval(ctx, r)


@dataclass
class RelatorReport:
    total: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    words: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self, limit: int | None = 50) -> dict:
        fails = self.failures if limit is None else self.failures[:limit]
        return {"total": self.total, "failed": self.failed, "counts": dict(self.counts),
                "words": self.words, "failures": fails}


def check_all(alg: Algebra, axes: Sequence[Vect], law: FusionLaw, max_len: int = 4) -> RelatorReport:
    """Evaluate every relator instance over words of length ``<= max_len``."""
    words = enumerate_words(len(axes), max_len)
    rep = RelatorReport(words=len(words))
    word_cache: dict = {}
    labels = list(law.labels)
    counts = {"idempotent": 0, "primitivity": 0, "fusion": 0}

    def record(r: RelatorInstance, ctx: _AxisContext):
        rep.total += 1
        counts[r.kind] += 1
        try:
            v = _eval(ctx, r)
        except (AxialError, ZeroDivisionError) as e:
            rep.failed += 1
            rep.failures.append({"instance": r.describe(), "error": f"{type(e).__name__}: {e}"})
            return
        if not v.is_zero():
            rep.failed += 1
            rep.failures.append({"instance": r.describe(), "residual": alg.format_vector(v)})

    for i, a in enumerate(axes):
        ctx = _AxisContext(alg, law, a, word_cache, axes)
        record(RelatorInstance("idempotent", i), ctx)
        for w in words:
            record(RelatorInstance("primitivity", i, (w,)), ctx)
        for lam in labels:
            for mu in labels:
                for x in words:
                    for y in words:
                        record(RelatorInstance("fusion", i, (x, y), (lam, mu)), ctx)
    rep.counts = counts
    return rep
