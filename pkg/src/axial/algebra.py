"""Commutative algebras given by structure constants over :class:`Scalar`.

The central object is :class:`Algebra`; the functions below it implement axis
verification (eigenspaces, fusion rules, primitivity), closures, quotients and
the maps between algebras.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimMismatch,
    DuplicateEigenvalue,
    IncompleteDecomposition,
    NotAnIdeal,
    NotPrimitive,
    NotSpecialized,
    ParseError,
)
from .field import ONE, ZERO, MultiPoly, Scalar, as_scalar, parse_scalar
from .fusion import Character, FusionLaw, GradingGroup
from .linalg import Matrix, Subspace, Vect, certificate_of, kernel

__all__ = [
    "Algebra",
    "EigenDecomposition",
    "AxisReport",
    "AlgebraMap",
    "product",
    "adjoint",
    "eigendecompose",
    "check_axis",
    "phi",
    "f_poly_adjoint",
    "minimal_fusion_law",
    "ideal_closure",
    "subalgebra_closure",
    "quotient",
    "marked_iso",
    "check_map",
    "miyamoto",
    "miyamoto_group_order",
    "map_order",
]


class Algebra:
    """Finite-dimensional commutative algebra.

    ``products`` maps index pairs ``(i, j)`` with ``i <= j`` to the vector
    ``e_i e_j``; absent pairs multiply to zero.
    """

    def __init__(self, basis: Sequence[str], products: Mapping, name: str = "",
                 extended: bool = False, conditions: Iterable = ()):
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.name = name
        self.extended = extended
        zero = Vect.zero(self.dim, extended)
        table = {}
        for (i, j), v in products.items():
            i, j = self._index(i), self._index(j)
            if i > j:
                i, j = j, i
            if not isinstance(v, Vect):
                v = self._coerce_vec(v)
            if len(v) != self.dim:
                raise DimMismatch(f"product e{i}e{j} has length {len(v)}, expected {self.dim}")
            if extended:
                v = v.to_extended()
            table[(i, j)] = v
        for i in range(self.dim):
            for j in range(i, self.dim):
                table.setdefault((i, j), zero)
        self._table = table
        # polynomials that must not vanish for this algebra to be admissible
        self.conditions = tuple(conditions)

    # construction helpers ---------------------------------------------------
    def _index(self, i) -> int:
        if isinstance(i, int):
            return i
        return self.basis.index(i)

    def _coerce_vec(self, v) -> Vect:
        if isinstance(v, Mapping):
            coords = [ZERO] * self.dim
            for k, c in v.items():
                coords[self._index(k)] = _sc(c, self.extended)
            return Vect(coords)
        return Vect([_sc(c, self.extended) for c in v])

    def vec(self, coeffs=None, **named) -> Vect:
        """Vector from a ``{basis name: coefficient}`` mapping or a coordinate list."""
        if coeffs is None:
            coeffs = named
        return self._coerce_vec(coeffs)

    def e(self, i) -> Vect:
        return Vect.unit(self.dim, self._index(i), self.extended)

    def zero(self) -> Vect:
        return Vect.zero(self.dim, self.extended)

    def basis_vectors(self) -> list:
        return [self.e(i) for i in range(self.dim)]

    def structure(self, i, j) -> Vect:
        i, j = self._index(i), self._index(j)
        return self._table[(i, j) if i <= j else (j, i)]

    # arithmetic -------------------------------------------------------------
    def product(self, u: Vect, v: Vect) -> Vect:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimMismatch(f"vectors of length {len(u)}, {len(v)} in a {self.dim}-dim algebra")
        acc = [None] * self.dim
        uc, vc = u.coords, v.coords
        nz_u = [i for i in range(self.dim) if not uc[i].is_zero()]
        nz_v = [j for j in range(self.dim) if not vc[j].is_zero()]
        for i in nz_u:
            for j in nz_v:
                s = self._table[(i, j) if i <= j else (j, i)]
                c = uc[i] * vc[j]
                for k, t in enumerate(s.coords):
                    if t.is_zero():
                        continue
                    term = c * t
                    acc[k] = term if acc[k] is None else acc[k] + term
        z = ZERO.to_extended() if self.extended else ZERO
        return Vect._raw(tuple(z if a is None else a for a in acc))

    def adjoint(self, a: Vect) -> Matrix:
        return Matrix.from_columns([self.product(a, e) for e in self.basis_vectors()]) \
            if self.dim else Matrix._raw(())

    # specialization ---------------------------------------------------------
    def map_scalars(self, f, name: str | None = None, extended: bool | None = None) -> "Algebra":
        ext = self.extended if extended is None else extended
        return Algebra(self.basis, {k: v.map(f) for k, v in self._table.items()},
                       name=self.name if name is None else name, extended=ext,
                       conditions=self.conditions)

    def subs(self, at: Mapping, name: str | None = None) -> "Algebra":
        alg = self.map_scalars(lambda c: c.subs(at), name)
        alg.conditions = tuple(p for p in (c.subs(at) for c in self.conditions)
                               if not p.is_constant())
        return alg

    def rename_params(self, mapping: Mapping[str, str]) -> "Algebra":
        return self.map_scalars(lambda c: c.rename(mapping))

    def to_extended(self) -> "Algebra":
        if self.extended:
            return self
        return self.map_scalars(Scalar.to_extended, extended=True)

    def parameters(self) -> tuple:
        names = set()
        for v in self._table.values():
            for c in v:
                names.update(c.parameters)
        return tuple(sorted(names, key=_param_key))

    def is_commutative_consistent(self) -> bool:
        return all(len(v) == self.dim for v in self._table.values())

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.basis == other.basis and self._table == other._table

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self._table.items()))))

    def format_vector(self, v: Vect) -> str:
        parts = []
        for c, name in zip(v.coords, self.basis):
            if c.is_zero():
                continue
            if c.is_one():
                parts.append(name)
            elif c == -ONE:
                parts.append(f"-{name}")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts) if parts else "0"

    def format_products(self) -> str:
        lines = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                v = self._table[(i, j)]
                lines.append(f"{self.basis[i]} * {self.basis[j]} = {self.format_vector(v)}")
        return "\n".join(lines)

    # json -------------------------------------------------------------------
    def to_dict(self) -> dict:
        prods = {}
        for (i, j), v in sorted(self._table.items()):
            entry = {self.basis[k]: str(c) for k, c in enumerate(v.coords) if not c.is_zero()}
            if entry:
                prods[f"{self.basis[i]},{self.basis[j]}"] = entry
        d = {"dim": self.dim, "basis": list(self.basis), "products": prods,
             "params": list(self.parameters())}
        if self.name:
            d["name"] = self.name
        if self.extended:
            d["extended"] = True
        if self.conditions:
            d["conditions"] = [str(p) for p in self.conditions]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: Mapping) -> "Algebra":
        try:
            basis = list(d["basis"])
            if "dim" in d and int(d["dim"]) != len(basis):
                raise ParseError(f"dim {d['dim']} does not match {len(basis)} basis names")
            ext = bool(d.get("extended", False))
            prods = {}
            for key, entry in d.get("products", {}).items():
                parts = key.split(",")
                if len(parts) != 2:
                    raise ParseError(f"product key {key!r} is not 'u,v'")
                for p in parts:
                    if p not in basis:
                        raise ParseError(f"unknown basis element {p!r}")
                coords = [ZERO] * len(basis)
                for name, c in entry.items():
                    if name not in basis:
                        raise ParseError(f"unknown basis element {name!r}")
                    coords[basis.index(name)] = parse_scalar(str(c), ext)
                i, j = basis.index(parts[0]), basis.index(parts[1])
                k = (min(i, j), max(i, j))
                v = Vect(coords)
                if k in prods and prods[k] != v:
                    raise ParseError(f"conflicting entries for {key!r}")
                prods[k] = v
            conds = [MultiPoly.parse(s) for s in d.get("conditions", [])]
        except KeyError as e:
            raise ParseError(f"missing field {e}") from None
        return cls(basis, prods, name=d.get("name", ""), extended=ext, conditions=conds)

    @classmethod
    def from_json(cls, text: str) -> "Algebra":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(str(e)) from None

    def __repr__(self):
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim})"


def _sc(c, extended=False) -> Scalar:
    if isinstance(c, Scalar):
        return c.to_extended() if extended else c
    if isinstance(c, str):
        return parse_scalar(c, extended)
    return as_scalar(c, extended)


def _param_key(name: str):
    order = ("a", "b", "x", "y")
    return (order.index(name), "") if name in order else (len(order), name)


def product(alg: Algebra, u: Vect, v: Vect) -> Vect:
    return alg.product(u, v)


def adjoint(alg: Algebra, a: Vect) -> Matrix:
    return alg.adjoint(a)


# --- eigenspaces ------------------------------------------------------------

class EigenDecomposition:
    """Eigenspaces of ``ad_a`` for a list of candidate eigenvalues."""

    def __init__(self, alg: Algebra, axis: Vect, eigenvalues: tuple, spaces: dict,
                 certificate: frozenset):
        self.alg = alg
        self.axis = axis
        self.eigenvalues = eigenvalues
        self.spaces = spaces
        self.certificate = certificate
        self.complete = sum(s.dim for s in spaces.values()) == alg.dim
        self._inv = None
        self._slices = None

    def dims(self) -> tuple:
        return tuple(self.spaces[l].dim for l in self.eigenvalues)

    def eigenbasis(self) -> list:
        return [v for l in self.eigenvalues for v in self.spaces[l].basis]

    def _prepare(self):
        if self._inv is not None:
            return
        if not self.complete:
            raise IncompleteDecomposition(
                f"eigenspace dimensions {self.dims()} do not sum to {self.alg.dim}")
        P = Matrix.from_columns(self.eigenbasis())
        inv, cert = P.inverse()
        self._inv = inv
        self.certificate = self.certificate | cert
        slices, k = {}, 0
        for l in self.eigenvalues:
            d = self.spaces[l].dim
            slices[l] = (k, k + d)
            k += d
        self._slices = slices

    def coordinates(self, v: Vect) -> Vect:
        """Coordinates of ``v`` in the concatenated eigenbasis."""
        self._prepare()
        return self._inv.apply(v)

    def components(self, v: Vect) -> dict:
        """Projection of ``v`` onto each eigenspace."""
        c = self.coordinates(v)
        out = {}
        for l in self.eigenvalues:
            lo, hi = self._slices[l]
            acc = self.alg.zero()
            for coeff, b in zip(c.coords[lo:hi], self.spaces[l].basis):
                if not coeff.is_zero():
                    acc = acc + b * coeff
            out[l] = acc
        return out

    def nonzero_components(self, v: Vect) -> set:
        c = self.coordinates(v)
        return {l for l in self.eigenvalues
                if any(not x.is_zero() for x in c.coords[slice(*self._slices[l])])}


def eigendecompose(alg: Algebra, a: Vect, eigenvalues: Sequence) -> EigenDecomposition:
    evs = tuple(_sc(l, alg.extended) for l in eigenvalues)
    if len(set(evs)) != len(evs):
        raise DuplicateEigenvalue(f"eigenvalues not distinct: {[str(l) for l in evs]}")
    ad = alg.adjoint(a)
    cert: set = set()
    spaces = {}
    for l in evs:
        k = kernel(ad.shift(l))
        spaces[l] = k
        cert |= k.certificate
    for i, l in enumerate(evs):
        for m in evs[i + 1:]:
            cert |= certificate_of(l - m)
    return EigenDecomposition(alg, a, evs, spaces, frozenset(cert))


@dataclass
class AxisReport:
    idempotent: bool
    complete: bool
    primitive: bool
    violations: list = field(default_factory=list)  # (lambda, mu, nu, component vector)
    dims: tuple = ()
    certificate: frozenset = frozenset()
    fusion_checked: bool = True

    @property
    def passed(self) -> bool:
        return (self.idempotent and self.complete and self.primitive
                and self.fusion_checked and not self.violations)

    def to_dict(self, alg: Algebra | None = None) -> dict:
        fmt = alg.format_vector if alg is not None else (lambda v: v.to_strings())
        return {
            "passed": self.passed,
            "idempotent": self.idempotent,
            "complete": self.complete,
            "primitive": self.primitive,
            "fusion_checked": self.fusion_checked,
            "dims": list(self.dims),
            "violations": [{"lambda": str(l), "mu": str(m), "component": str(n),
                            "vector": fmt(v)} for l, m, n, v in self.violations],
            "certificate": sorted(str(p) for p in self.certificate),
        }


def check_axis(alg: Algebra, a: Vect, law: FusionLaw, primitive: bool = True,
               decomp: EigenDecomposition | None = None) -> AxisReport:
    """Verify that ``a`` is an axis for ``law`` (and primitive when asked)."""
    idem = alg.product(a, a) == a
    if decomp is None:
        decomp = eigendecompose(alg, a, law.labels)
    one = ONE.to_extended() if alg.extended else ONE
    if primitive:
        v1 = decomp.spaces.get(one)
        prim = v1 is not None and v1.dim == 1 and v1.contains(a)
    else:
        prim = True
    report = AxisReport(idem, decomp.complete, prim, [], decomp.dims(), decomp.certificate)
    if not decomp.complete:
        report.fusion_checked = False
        return report
    labels = decomp.eigenvalues
    for i, l in enumerate(labels):
        for m in labels[i:]:
            allowed = law.table[(l, m)]
            for u in decomp.spaces[l].basis:
                for v in decomp.spaces[m].basis:
                    comps = decomp.components(alg.product(u, v))
                    for n in labels:
                        if n not in allowed and not comps[n].is_zero():
                            report.violations.append((l, m, n, comps[n]))
    report.certificate = decomp.certificate
    return report


def phi(alg: Algebra, a: Vect, decomp: EigenDecomposition, v: Vect) -> Scalar:
    """Projection functional: the ``V_1`` component of ``v`` is ``phi(v) * a``."""
    one = ONE.to_extended() if alg.extended else ONE
    v1 = decomp.spaces.get(one)
    if v1 is None or v1.dim != 1 or not v1.contains(a):
        raise NotPrimitive("1-eigenspace is not spanned by the axis")
    comp = decomp.components(v)[one]
    p = next(i for i, c in enumerate(a.coords) if not c.is_zero())
    return comp[p] / a[p]


def f_poly_adjoint(alg: Algebra, a: Vect, lams: Iterable, v: Vect) -> Vect:
    """Apply ``prod (ad_a - lam)`` to ``v``."""
    for l in lams:
        l = _sc(l, alg.extended)
        v = alg.product(a, v) - v * l
    return v


def minimal_fusion_law(alg: Algebra, a: Vect, eigenvalues: Sequence,
                       drop_empty: bool = True) -> FusionLaw:
    """Smallest law the axis ``a`` obeys among the given eigenvalues."""
    decomp = eigendecompose(alg, a, eigenvalues)
    if not decomp.complete:
        raise IncompleteDecomposition(
            f"eigenspace dimensions {decomp.dims()} do not sum to {alg.dim}")
    labels = [l for l in decomp.eigenvalues if decomp.spaces[l].dim or not drop_empty]
    table = {}
    for i, l in enumerate(labels):
        for m in labels[i:]:
            hit = set()
            for u in decomp.spaces[l].basis:
                for v in decomp.spaces[m].basis:
                    hit |= decomp.nonzero_components(alg.product(u, v))
            table[(l, m)] = [n for n in labels if n in hit]
    return FusionLaw(labels, table, symmetric=True, name="minimal")


# --- closures and quotients ----------------------------------------------------

def _span(alg: Algebra, vecs, cert=frozenset()) -> Subspace:
    vecs = [v for v in vecs if not v.is_zero()]
    if not vecs:
        return Subspace(alg.dim, (), cert)
    return Subspace.span(vecs, alg.dim, cert)


def ideal_closure(alg: Algebra, gens: Iterable[Vect]) -> Subspace:
    S = _span(alg, gens)
    basis = alg.basis_vectors()
    while True:
        new = S + _span(alg, [alg.product(s, e) for s in S.basis for e in basis]) \
            if S.basis else S
        if new.dim == S.dim:
            return new
        S = new


def subalgebra_closure(alg: Algebra, gens: Iterable[Vect]) -> Subspace:
    S = _span(alg, gens)
    while True:
        b = S.basis
        new = S + _span(alg, [alg.product(b[i], b[j]) for i in range(len(b))
                              for j in range(i, len(b))]) if b else S
        if new.dim == S.dim:
            return new
        S = new


@dataclass
class AlgebraMap:
    """Linear map given by a matrix; ``param_subst`` renames parameters on scalars."""

    matrix: Matrix
    param_subst: Mapping | None = None

    def __call__(self, v: Vect) -> Vect:
        return self.matrix.apply(v)

    def twist(self, s: Scalar) -> Scalar:
        if not self.param_subst:
            return s
        return s.rename(self.param_subst)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        return AlgebraMap(self.matrix @ other.matrix, self.param_subst)

    def is_identity(self) -> bool:
        m = self.matrix
        return m.rows == m.cols and all(
            m[i, j].is_one() if i == j else m[i, j].is_zero()
            for i in range(m.rows) for j in range(m.cols))


def quotient(alg: Algebra, ideal: Subspace, name: str = ""):
    """``V / I`` on the complement of the ideal's pivot coordinates."""
    if ideal.ambient != alg.dim:
        raise DimMismatch("ideal lives in a different space")
    if ideal_closure(alg, ideal.basis) != ideal:
        raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
    piv = set(ideal.pivots())
    keep = [i for i in range(alg.dim) if i not in piv]
    cols = []
    for j in range(alg.dim):
        r = ideal.reduce(alg.e(j))
        cols.append(Vect._raw(tuple(r.coords[k] for k in keep)))
    P = Matrix.from_columns(cols) if keep else Matrix._raw((), alg.dim)
    proj = lambda v: Vect._raw(tuple(ideal.reduce(v).coords[k] for k in keep))
    prods = {}
    for a_, i in enumerate(keep):
        for b_, j in enumerate(keep[a_:], start=a_):
            prods[(a_, b_)] = proj(alg.structure(i, j))
    q = Algebra([alg.basis[i] for i in keep], prods, name=name or f"{alg.name}/I",
                extended=alg.extended, conditions=alg.conditions)
    pm = AlgebraMap(P)
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            lhs = proj(alg.structure(i, j))
            rhs = q.product(proj(alg.e(i)), proj(alg.e(j))) if keep else lhs
            if lhs != rhs:
                raise NotAnIdeal(f"projection fails on {alg.basis[i]}*{alg.basis[j]}")
    return q, pm


# --- maps ---------------------------------------------------------------------

def check_map(alg: Algebra, m: AlgebraMap, target: Algebra | None = None):
    """Check ``M(e_i e_j) = M(e_i) M(e_j)`` on all basis pairs.

    With ``param_subst`` the structure constants of the source are twisted
    before being pushed through ``M``.  Returns ``(ok, violations)``.
    """
    target = alg if target is None else target
    if m.matrix.cols != alg.dim or m.matrix.rows != target.dim:
        raise DimMismatch("map has the wrong shape")
    images = [m(alg.e(i)) for i in range(alg.dim)]
    violations = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            s = alg.structure(i, j)
            lhs = target.zero()
            for k, c in enumerate(s.coords):
                if not c.is_zero():
                    lhs = lhs + images[k] * m.twist(c)
            rhs = target.product(images[i], images[j])
            if lhs != rhs:
                violations.append((alg.basis[i], alg.basis[j], lhs - rhs))
    return not violations, violations


def _generation_words(alg: Algebra, gens: Sequence[Vect]):
    """Words (as nested tuples of generator indices) whose values form a basis."""
    words, vals = [], []
    S = Subspace.zero(alg.dim)

    def push(w, v):
        nonlocal S
        if v.is_zero() or S.contains(v):
            return False
        S = S + Subspace.span([v], alg.dim)
        words.append(w)
        vals.append(v)
        return True

    for i, g in enumerate(gens):
        push(i, g)
    grew = True
    while grew and S.dim < alg.dim:
        grew = False
        n = len(words)
        for i in range(n):
            for j in range(i, n):
                if push((words[i], words[j]), alg.product(vals[i], vals[j])):
                    grew = True
    return words, vals, S.dim == alg.dim


def _eval_tree(alg: Algebra, w, gens: Sequence[Vect]) -> Vect:
    if isinstance(w, int):
        return gens[w]
    return alg.product(_eval_tree(alg, w[0], gens), _eval_tree(alg, w[1], gens))


def marked_iso(A: Algebra, gens_a: Sequence[Vect], B: Algebra, gens_b: Sequence[Vect],
               allow_swap: bool = False):
    """Isomorphism ``A -> B`` sending marked generators to marked generators."""
    if A.dim != B.dim or len(gens_a) != len(gens_b):
        return None
    words, vals, generated = _generation_words(A, gens_a)
    if not generated:
        return None
    WA = Matrix.from_columns(vals) if vals else Matrix._raw(())
    try:
        WA_inv, _ = WA.inverse() if vals else (WA, None)
    except ZeroDivisionError:
        return None
    orders = [list(range(len(gens_b)))]
    if allow_swap and len(gens_b) == 2:
        orders.append([1, 0])
    for order in orders:
        gb = [gens_b[k] for k in order]
        imgs = [_eval_tree(B, w, gb) for w in words]
        if not imgs:
            return AlgebraMap(Matrix._raw(()))
        M = Matrix.from_columns(imgs) @ WA_inv
        try:
            M.inverse()
        except ZeroDivisionError:
            continue
        if all(M.apply(g) == h for g, h in zip(gens_a, gb)) and check_map(A, AlgebraMap(M), B)[0]:
            return AlgebraMap(M)
    return None


# --- Miyamoto maps --------------------------------------------------------------

def miyamoto(alg: Algebra, a: Vect, decomp: EigenDecomposition, g: GradingGroup,
             chi: Character) -> AlgebraMap:
    """``tau_{a,chi}``: scale ``V_lambda`` by ``chi(gamma_lambda)``."""
    if not decomp.complete:
        raise IncompleteDecomposition(
            f"eigenspace dimensions {decomp.dims()} do not sum to {alg.dim}")
    ext = alg.extended or any(v.extended for v in chi.values)
    basis, scales = [], []
    for l in decomp.eigenvalues:
        s = chi(g.element(l))
        for v in decomp.spaces[l].basis:
            basis.append(v.to_extended() if ext else v)
            scales.append(s.to_extended() if ext else s)
    P = Matrix.from_columns(basis)
    Pinv, _ = P.inverse()
    D = Matrix._raw(tuple(tuple(scales[i] if i == j else (scales[i] - scales[i])
                                for j in range(len(scales))) for i in range(len(scales))))
    return AlgebraMap(P @ D @ Pinv)


def _is_numeric(m: Matrix) -> bool:
    return all(c.is_constant() for r in m.entries for c in r)


def miyamoto_group_order(maps: Sequence[AlgebraMap], bound: int = 10000):
    """Order of the matrix group generated by ``maps``, or ``None`` past ``bound``."""
    if not maps:
        return 1
    gens = [m.matrix for m in maps]
    for m in gens:
        if not _is_numeric(m):
            raise NotSpecialized("group order needs fully specialized matrices")
    n = gens[0].rows
    ext = any(c.extended for m in gens for r in m.entries for c in r)
    gens = [m.map(Scalar.to_extended) if ext else m for m in gens]
    ident = Matrix.identity(n, ext)
    seen = {ident}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = cur @ g
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    return None
                queue.append(nxt)
    return len(seen)


def map_order(m: AlgebraMap, bound: int = 64):
    """Least ``k >= 1`` with ``m^k`` the identity; works with symbolic entries."""
    cur = m.matrix
    for k in range(1, bound + 1):
        if AlgebraMap(cur).is_identity():
            return k
        cur = cur @ m.matrix
    return None
