"""Exact linear algebra over :class:`~axial.field.Scalar`.

Row reduction records a *genericity certificate*: the numerators of the pivots it
divided by.  A symbolic result stays valid at every rational parameter point where
none of the certificate polynomials vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimMismatch
from .field import ONE, ZERO, MultiPoly, Scalar, as_scalar

__all__ = [
    "Vect",
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "subspace_ops",
    "certificate_of",
]


class Vect:
    """Immutable coordinate vector of Scalars."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable):
        self.coords = tuple(c if isinstance(c, Scalar) else as_scalar(c) for c in coords)
        self._hash = None

    @classmethod
    def _raw(cls, coords: tuple) -> "Vect":
        v = cls.__new__(cls)
        v.coords = coords
        v._hash = None
        return v

    @classmethod
    def zero(cls, dim: int, extended: bool = False) -> "Vect":
        z = ZERO.to_extended() if extended else ZERO
        return cls._raw((z,) * dim)

    @classmethod
    def unit(cls, dim: int, i: int, extended: bool = False) -> "Vect":
        z = ZERO.to_extended() if extended else ZERO
        o = ONE.to_extended() if extended else ONE
        return cls._raw(tuple(o if k == i else z for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Vect"):
        if len(other.coords) != len(self.coords):
            raise DimMismatch(f"dimension {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: "Vect") -> "Vect":
        self._check(other)
        return Vect._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vect") -> "Vect":
        self._check(other)
        return Vect._raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vect":
        return Vect._raw(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Vect":
        if isinstance(c, Vect):
            return NotImplemented
        return Vect._raw(tuple(a * c for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Vect":
        return Vect._raw(tuple(a / c for a in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def map(self, f) -> "Vect":
        return Vect._raw(tuple(f(c) for c in self.coords))

    def subs(self, at) -> "Vect":
        return self.map(lambda c: c.subs(at))

    def to_extended(self) -> "Vect":
        return self.map(Scalar.to_extended)

    def __eq__(self, other):
        if not isinstance(other, Vect):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def to_strings(self) -> list:
        return [str(c) for c in self.coords]

    def __repr__(self):
        return "Vect([" + ", ".join(str(c) for c in self.coords) + "])"


class Matrix:
    """Dense row-major matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        self.entries = tuple(
            tuple(c if isinstance(c, Scalar) else as_scalar(c) for c in row) for row in rows
        )
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise DimMismatch("ragged matrix")

    @classmethod
    def _raw(cls, entries: tuple, cols: int | None = None) -> "Matrix":
        m = cls.__new__(cls)
        m.entries = entries
        m.rows = len(entries)
        m.cols = len(entries[0]) if entries else (cols or 0)
        return m

    @classmethod
    def identity(cls, n: int, extended: bool = False) -> "Matrix":
        return cls._raw(tuple(Vect.unit(n, i, extended).coords for i in range(n)))

    @classmethod
    def zeros(cls, r: int, c: int, extended: bool = False) -> "Matrix":
        return cls._raw(tuple(Vect.zero(c, extended).coords for _ in range(r)), c)

    @classmethod
    def from_columns(cls, columns: Sequence[Vect]) -> "Matrix":
        if not columns:
            raise DimMismatch("no columns")
        n = len(columns[0])
        return cls._raw(tuple(tuple(col[i] for col in columns) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Vect]) -> "Matrix":
        return cls._raw(tuple(tuple(r) for r in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vect:
        return Vect._raw(self.entries[i])

    def column(self, j: int) -> Vect:
        return Vect._raw(tuple(r[j] for r in self.entries))

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.entries)) if self.entries else (), self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimMismatch("shape mismatch")
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r1, r2))
                                 for r1, r2 in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        return Matrix._raw(tuple(tuple(a * c for a in r) for r in self.entries))

    def shift(self, lam) -> "Matrix":
        """``self - lam * I`` for square matrices."""
        return Matrix._raw(tuple(
            tuple(a - lam if i == j else a for j, a in enumerate(r))
            for i, r in enumerate(self.entries)))

    def apply(self, v: Vect) -> Vect:
        if len(v) != self.cols:
            raise DimMismatch(f"matrix has {self.cols} columns, vector has {len(v)} entries")
        out = []
        for r in self.entries:
            s = None
            for a, b in zip(r, v.coords):
                if a.is_zero() or b.is_zero():
                    continue
                t = a * b
                s = t if s is None else s + t
            out.append(s if s is not None else (r[0] - r[0] if r else ZERO))
        return Vect._raw(tuple(out))

    def __matmul__(self, other):
        if isinstance(other, Vect):
            return self.apply(other)
        if self.cols != other.rows:
            raise DimMismatch("shape mismatch in product")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(cols)

    def is_zero(self) -> bool:
        return all(c.is_zero() for r in self.entries for c in r)

    def map(self, f) -> "Matrix":
        return Matrix._raw(tuple(tuple(f(c) for c in r) for r in self.entries))

    def subs(self, at) -> "Matrix":
        return self.map(lambda c: c.subs(at))

    def inverse(self):
        """Return ``(inverse, certificate)``; raises ``ZeroDivisionError`` if singular."""
        n = self.rows
        if n != self.cols:
            raise DimMismatch("inverse of a non-square matrix")
        ext = bool(self.entries) and self.entries[0][0].extended
        aug = Matrix._raw(tuple(r + Vect.unit(n, i, ext).coords for i, r in enumerate(self.entries)))
        red, cert, _, pivots = _rref(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(tuple(r[n:] for r in red.entries)), cert

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(c) for c in r) + "]"
                                      for r in self.entries) + "])"


def certificate_of(s: Scalar) -> frozenset:
    """Nonconstant polynomial whose nonvanishing keeps ``s`` nonzero (empty if unconditional)."""
    p = s.norm_numerator()
    if p.is_constant():
        return frozenset()
    return frozenset([p.primitive()])


def _rref(m: Matrix):
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    cert: set = set()
    pivots: list = []
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        best = None
        for r in range(pr, nrows):
            e = rows[r][c]
            if not e.is_zero():
                d = e.degree()
                if best is None or d < best[0]:
                    best = (d, r)
        if best is None:
            continue
        r = best[1]
        rows[pr], rows[r] = rows[r], rows[pr]
        piv = rows[pr][c]
        cert |= certificate_of(piv)
        if not piv.is_one():
            inv = piv.inverse()
            rows[pr] = [e * inv if not e.is_zero() else e for e in rows[pr]]
        prow = rows[pr]
        for r2 in range(nrows):
            if r2 == pr:
                continue
            f = rows[r2][c]
            if f.is_zero():
                continue
            rows[r2] = [e - f * p if not p.is_zero() else e for e, p in zip(rows[r2], prow)]
        pivots.append(c)
        pr += 1
    red = Matrix._raw(tuple(tuple(r) for r in rows), ncols)
    return red, frozenset(cert), len(pivots), pivots


def rref(m: Matrix):
    """Reduced row echelon form: returns ``(matrix, certificate, rank)``.

    Pivot choice: leftmost column, then the lowest-degree nonzero entry (ties by
    row index).  ``certificate`` is the set of normalized pivot numerators.
    """
    red, cert, rank, _ = _rref(m)
    return red, cert, rank


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``ambient``-space held by its canonical reduced echelon basis."""

    ambient: int
    basis: tuple
    certificate: frozenset = field(default=frozenset())

    @classmethod
    def span(cls, vectors: Iterable[Vect], ambient: int | None = None,
             certificate: frozenset = frozenset()) -> "Subspace":
        vectors = list(vectors)
        if ambient is None:
            if not vectors:
                raise DimMismatch("ambient dimension needed for an empty span")
            ambient = len(vectors[0])
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient}")
        if not vectors:
            return cls(ambient, (), certificate)
        red, cert, rank, _ = _rref(Matrix.from_rows(vectors))
        basis = tuple(red.row(i) for i in range(rank))
        return cls(ambient, basis, certificate | cert)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int, extended: bool = False) -> "Subspace":
        return cls(ambient, tuple(Vect.unit(ambient, i, extended) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list:
        out = []
        for v in self.basis:
            for j, c in enumerate(v):
                if not c.is_zero():
                    out.append(j)
                    break
        return out

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient,
                             self.certificate | other.certificate)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace(self.ambient, (), self.certificate | other.certificate)
        # x.A = y.B  <=>  (x, -y) in ker [A^T | -B^T]
        cols = list(self.basis) + [-v for v in other.basis]
        k = kernel(Matrix.from_columns(cols))
        n = len(self.basis)
        vecs = []
        for w in k.basis:
            acc = Vect.zero(self.ambient, w[0].extended)
            for coeff, v in zip(w.coords[:n], self.basis):
                if not coeff.is_zero():
                    acc = acc + v * coeff
            vecs.append(acc)
        return Subspace.span(vecs, self.ambient,
                             self.certificate | other.certificate | k.certificate)

    def contains(self, v: Vect) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient}")
        return self.reduce(v).is_zero()

    def reduce(self, v: Vect) -> Vect:
        """Remainder of ``v`` after clearing the pivot coordinates of this basis."""
        coords = list(v.coords)
        for b, p in zip(self.basis, self.pivots()):
            f = coords[p]
            if not f.is_zero():
                coords = [c - f * bc if not bc.is_zero() else c for c, bc in zip(coords, b.coords)]
        return Vect._raw(tuple(coords))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, basis={list(self.basis)})"


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` with the reduction certificate attached."""
    red, cert, rank, pivots = _rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in pivots]
    ext = bool(m.entries) and bool(m.entries[0]) and m.entries[0][0].extended
    vecs = []
    for f in free:
        coords = [ZERO.to_extended() if ext else ZERO] * n
        coords[f] = ONE.to_extended() if ext else ONE
        for i, p in enumerate(pivots):
            coords[p] = -red.entries[i][f]
        vecs.append(Vect._raw(tuple(coords)))
    return Subspace.span(vecs, n, cert) if vecs else Subspace(n, (), cert)


def subspace_ops(A: Subspace, B, op: str):
    """Dispatch for ``sum``, ``intersect``, ``contains_vector`` and ``equals``."""
    if op == "sum":
        return A + B
    if op == "intersect":
        return A & B
    if op == "contains_vector":
        return A.contains(B)
    if op == "equals":
        A._check(B)
        return A == B
    raise ValueError(f"unknown subspace operation {op!r}")


def dims_independent(spaces: Sequence[Subspace]) -> bool:
    """True when the sum of the subspaces is direct."""
    if not spaces:
        return True
    total = Subspace.span([v for s in spaces for v in s.basis], spaces[0].ambient) \
        if any(s.basis for s in spaces) else Subspace.zero(spaces[0].ambient)
    return total.dim == sum(s.dim for s in spaces)


def solve(m: Matrix, rhs: Vect):
    """One solution of ``m x = rhs`` or ``None`` when inconsistent."""
    n = m.cols
    aug = Matrix._raw(tuple(r + (b,) for r, b in zip(m.entries, rhs.coords)))
    red, cert, rank, pivots = _rref(aug)
    if pivots and pivots[-1] == n:
        return None
    ext = rhs.coords[0].extended if rhs.coords else False
    x = [ZERO.to_extended() if ext else ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = red.entries[i][n]
    return Vect._raw(tuple(x))


def poly_certificate(polys: Iterable[MultiPoly]) -> frozenset:
    return frozenset(p.primitive() for p in polys if not p.is_constant())
