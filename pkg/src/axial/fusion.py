"""Fusion laws, their gradings and characters.

A fusion law is a finite label set with a product table into subsets of labels.
Labels are :class:`~axial.field.Scalar` values so eigenvalues such as ``a`` or
``1/2`` can be symbolic.  Pairs missing from the table multiply to the empty set.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateEigenvalue, ParseError, UnsupportedDivisor
from .field import ONE, Scalar, as_scalar, parse_scalar

__all__ = [
    "FusionLaw",
    "GradingGroup",
    "Character",
    "law_checks",
    "is_sublaw",
    "law_isomorphism",
    "grading_group",
    "characters",
    "smith_normal_form",
]


def _lab(x, extended=False) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x, extended)
    return as_scalar(x, extended)


class FusionLaw:
    """Finite fusion law ``(labels, *)``.

    ``table`` maps ordered label pairs to frozensets of labels.  With
    ``symmetric=True`` (the default) each given entry is mirrored.
    """

    __slots__ = ("labels", "table", "name")

    def __init__(self, labels: Sequence, table: Mapping, symmetric: bool = True, name: str = ""):
        labs = tuple(_lab(x) for x in labels)
        if len(set(labs)) != len(labs):
            dup = [str(x) for x in labs if labs.count(x) > 1]
            raise DuplicateEigenvalue(f"labels not distinct: {sorted(set(dup))}")
        index = set(labs)
        given: dict = {}
        for (x, y), zs in table.items():
            x, y = _lab(x), _lab(y)
            zs = frozenset(_lab(z) for z in zs)
            for lab in (x, y, *zs):
                if lab not in index:
                    raise ValueError(f"{lab} is not a label of this law")
            given[(x, y)] = zs
        tab = dict(given)
        if symmetric:
            for (x, y), zs in given.items():
                if (y, x) in given and given[(y, x)] != zs:
                    raise ValueError(f"contradictory entries for {x}*{y} and {y}*{x}")
                tab[(y, x)] = zs
        for x in labs:
            for y in labs:
                tab.setdefault((x, y), frozenset())
        self.labels = labs
        self.table = tab
        self.name = name

    def product(self, x, y) -> frozenset:
        return self.table[(_lab(x), _lab(y))]

    def __len__(self):
        return len(self.labels)

    def is_symmetric(self) -> bool:
        return all(self.table[(x, y)] == self.table[(y, x)] for x in self.labels for y in self.labels)

    def relabel(self, mapping: Mapping) -> "FusionLaw":
        """Image of the law under a label bijection."""
        m = {_lab(k): _lab(v) for k, v in mapping.items()}
        f = lambda z: m.get(z, z)
        return FusionLaw([f(x) for x in self.labels],
                         {(f(x), f(y)): [f(z) for z in zs] for (x, y), zs in self.table.items()},
                         symmetric=False, name=self.name)

    def subs(self, at: Mapping) -> "FusionLaw":
        """Specialize parameters occurring in the labels."""
        f = lambda z: z.subs(at)
        return FusionLaw([f(x) for x in self.labels],
                         {(f(x), f(y)): [f(z) for z in zs] for (x, y), zs in self.table.items()},
                         symmetric=False, name=self.name)

    def restrict(self, labels: Iterable) -> "FusionLaw":
        keep = [_lab(x) for x in labels]
        ks = set(keep)
        return FusionLaw(keep, {(x, y): [z for z in self.table[(x, y)] if z in ks]
                                for x in keep for y in keep}, symmetric=False, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, FusionLaw):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self.table == other.table

    def __hash__(self):
        return hash(frozenset(self.table.items()))

    # text / json -----------------------------------------------------------
    def _sorted(self, zs) -> list:
        order = {x: i for i, x in enumerate(self.labels)}
        return sorted(zs, key=order.__getitem__)

    def to_dict(self) -> dict:
        table = {}
        for i, x in enumerate(self.labels):
            for y in self.labels[i:]:
                zs = self.table[(x, y)]
                if zs:
                    table[f"{x},{y}"] = [str(z) for z in self._sorted(zs)]
        d = {"labels": [str(x) for x in self.labels], "table": table}
        if any(x.extended for x in self.labels):
            d["extended"] = True
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: Mapping, name: str = "") -> "FusionLaw":
        try:
            ext = bool(d.get("extended", False))
            labels = [parse_scalar(s, ext) for s in d["labels"]]
            table = {}
            for key, zs in d.get("table", {}).items():
                parts = key.split(",")
                if len(parts) != 2:
                    raise ParseError(f"table key {key!r} is not 'x,y'")
                table[(parse_scalar(parts[0], ext), parse_scalar(parts[1], ext))] = \
                    [parse_scalar(z, ext) for z in zs]
        except KeyError as e:
            raise ParseError(f"missing field {e}") from None
        return cls(labels, table, symmetric=True, name=name or d.get("name", ""))

    @classmethod
    def from_json(cls, text: str) -> "FusionLaw":
        return cls.from_dict(json.loads(text))

    def format_table(self) -> str:
        cells = [[""] + [str(x) for x in self.labels]]
        for x in self.labels:
            row = [str(x)]
            for y in self.labels:
                zs = self._sorted(self.table[(x, y)])
                row.append(", ".join(str(z) for z in zs) if zs else "-")
            cells.append(row)
        w = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
        lines = [" | ".join(c.ljust(w[j]) for j, c in enumerate(r)).rstrip() for r in cells]
        lines.insert(1, "-+-".join("-" * k for k in w))
        return "\n".join(lines)

    def __repr__(self):
        body = ", ".join(f"{x}*{y}={{{', '.join(str(z) for z in self._sorted(zs))}}}"
                         for (x, y), zs in self.table.items() if zs)
        return f"FusionLaw({self.name or 'law'}: {body})"


def law_checks(f: FusionLaw) -> dict:
    """Symmetry and unit report.  A unit ``e`` satisfies ``e*x`` and ``x*e`` inside ``{x}``."""
    asym = [(x, y) for x in f.labels for y in f.labels
            if f.table[(x, y)] != f.table[(y, x)]]
    units = [e for e in f.labels
             if all(f.table[(e, x)] <= {x} and f.table[(x, e)] <= {x} for x in f.labels)]
    one = ONE.to_extended() if f.labels and f.labels[0].extended else ONE
    violations = []
    if one in f.labels and one not in units:
        for x in f.labels:
            if not f.table[(one, x)] <= {x}:
                violations.append((one, x, f.table[(one, x)]))
    return {
        "symmetric": not asym,
        "asymmetric_pairs": asym,
        "units": units,
        "contains_one_as_unit": one in units,
        "violations": violations,
    }


def is_sublaw(h: FusionLaw, f: FusionLaw):
    """``(True, None)`` when ``h`` is a sublaw of ``f``, else ``(False, witness)``."""
    fl = set(f.labels)
    for x in h.labels:
        if x not in fl:
            return False, ("label", x)
    for x in h.labels:
        for y in h.labels:
            if not h.table[(x, y)] <= f.table[(x, y)]:
                return False, (x, y)
    return True, None


def law_isomorphism(f: FusionLaw, h: FusionLaw, fix_unit: bool = True):
    """Search all label bijections for a fusion-law isomorphism ``f -> h``."""
    if len(f.labels) != len(h.labels):
        return None
    one = ONE.to_extended() if f.labels and f.labels[0].extended else ONE
    for perm in itertools.permutations(h.labels):
        xi = dict(zip(f.labels, perm))
        if fix_unit and one in xi and xi[one] != one:
            continue
        if all(frozenset(xi[z] for z in f.table[(x, y)]) == h.table[(xi[x], xi[y])]
               for x in f.labels for y in f.labels):
            return xi
    return None


# --- integer Smith normal form ------------------------------------------------

def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int):
    """Return ``(D, V)`` with ``U A V = D`` diagonal for some unimodular ``U``.

    Only the column transform ``V`` is tracked; the diagonal is normalized so
    every entry is nonnegative and each divides the next.
    """
    A = [list(r) for r in rows]
    m, n = len(A), ncols
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(j, k, q):  # col_j -= q*col_k
        for r in A:
            r[j] -= q * r[k]
        for r in V:
            r[j] -= q * r[k]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def neg_col(j):
        for r in A:
            r[j] = -r[j]
        for r in V:
            r[j] = -r[j]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[t], A[i] = A[i], A[t]
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    col_op(j, t, q)
                if A[t][j]:
                    done = False
            if done:
                # divisibility: fold any entry not divisible by the pivot into row t
                bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                       if A[i][j] % A[t][t]]
                if not bad:
                    break
                i, _ = bad[0]
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                continue
            nz = [(abs(A[i][t]), i, "r") for i in range(t, m) if A[i][t]] + \
                 [(abs(A[t][j]), j, "c") for j in range(t, n) if A[t][j]]
            _, k, kind = min(nz)
            if kind == "r":
                A[t], A[k] = A[k], A[t]
            else:
                swap_cols(t, k)
        if A[t][t] < 0:
            neg_col(t)
        t += 1
    diag = [A[i][i] if i < m else 0 for i in range(n)]
    return diag, V


@dataclass(frozen=True)
class GradingGroup:
    """``C_{d1} x ... x C_{dk} x Z^r`` with the images of the labels.

    ``label_map`` sends a label to its coordinate tuple: residues for the cyclic
    factors followed by integers for the free part.
    """

    divisors: tuple
    free_rank: int
    label_map: tuple  # ((label, coords), ...) in law order

    @property
    def order(self):
        if self.free_rank:
            return None
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return not self.divisors and not self.free_rank

    def element(self, label) -> tuple:
        label = _lab(label)
        for lab, c in self.label_map:
            if lab == label:
                return c
        raise KeyError(label)

    def add(self, u: tuple, v: tuple) -> tuple:
        k = len(self.divisors)
        return tuple((a + b) % self.divisors[i] if i < k else a + b
                     for i, (a, b) in enumerate(zip(u, v)))

    def zero(self) -> tuple:
        return (0,) * (len(self.divisors) + self.free_rank)

    def name(self) -> str:
        parts = [f"C{d}" for d in self.divisors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"

    def describe(self) -> str:
        body = ", ".join(f"g_{lab} -> {_fmt_coords(c)}" for lab, c in self.label_map)
        mod = ""
        if len(self.divisors) == 1 and not self.free_rank:
            mod = f" (mod {self.divisors[0]})"
        return f"{self.name()}; {body}{mod}"

    def to_dict(self) -> dict:
        return {
            "group": self.name(),
            "divisors": list(self.divisors),
            "free_rank": self.free_rank,
            "label_map": {str(lab): list(c) for lab, c in self.label_map},
        }


def _fmt_coords(c: tuple) -> str:
    if len(c) == 1:
        return str(c[0])
    return "(" + ", ".join(str(v) for v in c) + ")"


def _relations(f: FusionLaw) -> list:
    idx = {x: i for i, x in enumerate(f.labels)}
    rels = []
    for i, x in enumerate(f.labels):
        for y in f.labels[i:]:
            for z in f._sorted(f.table[(x, y)]):
                r = [0] * len(f.labels)
                r[idx[x]] += 1
                r[idx[y]] += 1
                r[idx[z]] -= 1
                rels.append(r)
    return rels


def grading_group(f: FusionLaw) -> GradingGroup:
    """Abelianized universal grading group of ``f`` via Smith normal form."""
    n = len(f.labels)
    rels = _relations(f)
    diag, V = smith_normal_form(rels, n)
    keep = [k for k in range(n) if diag[k] != 1]
    divisors = tuple(diag[k] for k in keep if diag[k] > 1)
    cyc = [k for k in keep if diag[k] > 1]
    free = [k for k in keep if diag[k] == 0]
    coords = []
    for j in range(n):
        row = V[j]
        coords.append([row[k] % diag[k] for k in cyc] + [row[k] for k in free])
    # canonical generator per factor: first label with a nonzero coordinate gets
    # the smallest representative reachable by a unit of that factor
    for pos, d in enumerate(divisors):
        for c in coords:
            if c[pos]:
                u = _best_unit(c[pos], d)
                for cc in coords:
                    cc[pos] = (cc[pos] * u) % d
                break
    for pos in range(len(divisors), len(divisors) + len(free)):
        for c in coords:
            if c[pos]:
                if c[pos] < 0:
                    for cc in coords:
                        cc[pos] = -cc[pos]
                break
    g = GradingGroup(divisors, len(free), tuple((x, tuple(c)) for x, c in zip(f.labels, coords)))
    _verify_grading(f, g)
    return g


def _best_unit(v: int, d: int) -> int:
    best = None
    for u in range(1, d):
        if _gcd(u, d) == 1:
            r = (v * u) % d
            if best is None or r < best[0]:
                best = (r, u)
    return best[1]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _verify_grading(f: FusionLaw, g: GradingGroup):
    for x in f.labels:
        for y in f.labels:
            for z in f.table[(x, y)]:
                if g.add(g.element(x), g.element(y)) != g.element(z):
                    raise AssertionError(f"grading relation g_{x} g_{y} = g_{z} fails")


# --- characters -------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """Homomorphism from a grading group into the units of the scalar field."""

    values: tuple  # one Scalar per cyclic factor (value on its generator)

    def __call__(self, coords: tuple) -> Scalar:
        out = None
        for v, k in zip(self.values, coords):
            t = v ** k
            out = t if out is None else out * t
        if out is None:
            return ONE
        return out

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def characters(g: GradingGroup, extended: bool = False) -> list:
    """All characters of ``g`` into Q (or Q(omega) when ``extended``)."""
    if g.free_rank:
        raise UnsupportedDivisor("grading group has a free part; characters are not finite")
    per_factor = []
    one = ONE.to_extended() if extended else ONE
    for d in g.divisors:
        if d == 2:
            per_factor.append([one, -one])
        elif d == 3:
            if extended:
                w = Scalar.omega()
                per_factor.append([one, w, w * w])
            else:
                per_factor.append([one])
        else:
            raise UnsupportedDivisor(f"cyclic factor of order {d} needs roots of unity outside Q(omega)")
    return [Character(tuple(vals)) for vals in itertools.product(*per_factor)]
