"""Command-line front end: ``axial <command> ...``.

Algebras and laws are read from JSON files, or named from the built-in
catalog with an ``@`` prefix (``@2B``, ``@3A-half``, ``@law_d``; run
``axial catalog`` for the list).  Algebra files may carry an ``axes`` list
of coordinate dicts and a ``certificate`` list of polynomials that must not
vanish when the file is specialized.

Exit codes: 0 success, 1 a check failed, 2 bad input or refused request.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import catalog as cat
from .algebra import (
    Algebra,
    check_axis,
    eigendecompose,
    ideal_closure,
    minimal_fusion_law,
    quotient,
)
from .errors import AxialError, BadParameter, ParseError
from .field import ONE, MultiPoly, Scalar, parse_scalar
from .fusion import FusionLaw, grading_group
from .linalg import Subspace, Vect
from .relators import check_all
from .suites import ENTRIES, SUITES, load_overrides, run_verify

__all__ = ["RunConfig", "parse_params", "parse_vector", "load_algebra", "load_law", "main"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple = ()
    params: dict = field(default_factory=dict)
    max_len: int = 4
    fmt: str = "text"
    seed: int = 0


def parse_params(text: str | None) -> dict:
    """``"a=1/3, x=2"`` to ``{"a": Fraction(1, 3), "x": Fraction(2)}``."""
    out = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, val = part.partition("=")
        name, val = name.strip(), val.strip()
        if not sep or not name or not val:
            raise ParseError(f"parameter assignment {part!r} is not name=value")
        try:
            out[name] = Fraction(val)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"value {val!r} for {name} is not a rational number") from None
    return out


# --- loading --------------------------------------------------------------------

_ALGEBRA_REFS = {
    **{k: v for k, v in ENTRIES.items()},
    "2B(-1)": lambda: cat.alg_2B(-1),
    "D-tabulated": lambda: cat.alg_3dim_D("beta-half", "a", "tabulated"),
}

_LAW_REFS = {
    "two_eval": cat.two_eval,
    "law_a": cat.law_a,
    "law_b": cat.law_b,
    "law_c": cat.law_c,
    "law_d": cat.law_d,
    "row4": cat.law_row4,
    "jordan_type": cat.jordan_type,
    "jordan_generic": cat.jordan_generic,
}


@dataclass
class LoadedAlgebra:
    algebra: Algebra
    axes: list
    certificate: list
    law: FusionLaw | None = None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _json(path: str) -> dict:
    try:
        d = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from None
    if not isinstance(d, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return d


def entry_to_dict(entry: cat.CatalogEntry) -> dict:
    """Algebra JSON plus marked axes and the eigen-decomposition certificates."""
    alg = entry.algebra
    d = alg.to_dict()
    d["axes"] = [{alg.basis[k]: str(c) for k, c in enumerate(a.coords) if not c.is_zero()}
                 for a in entry.axes[:2]]
    cert = set()
    for a in entry.axes:
        cert |= set(eigendecompose(alg, a, entry.law.labels).certificate)
    if cert:
        d["certificate"] = sorted(str(p) for p in cert)
    d["law"] = entry.law.to_dict()
    return d


def _axes_from(alg: Algebra, items) -> list:
    if items is None:
        return [alg.e(i) for i in range(min(2, alg.dim))]
    out = []
    for item in items:
        if not isinstance(item, dict):
            raise ParseError("each axis must be an object of basis coefficients")
        out.append(alg.vec(**{k: parse_scalar(str(v), alg.extended) for k, v in item.items()}))
    return out


def load_algebra(ref: str) -> LoadedAlgebra:
    if ref.startswith("@"):
        key = ref[1:]
        if key not in _ALGEBRA_REFS:
            raise ParseError(f"unknown catalog algebra {ref!r}; known: {sorted(_ALGEBRA_REFS)}")
        d = entry_to_dict(_ALGEBRA_REFS[key]())
    else:
        d = _json(ref)
    alg = Algebra.from_dict(d)
    cert = [MultiPoly.parse(s) for s in d.get("certificate", [])]
    law = FusionLaw.from_dict(d["law"]) if "law" in d else None
    return LoadedAlgebra(alg, _axes_from(alg, d.get("axes")), cert, law)


def load_law(ref: str) -> FusionLaw:
    if ref.startswith("@"):
        key = ref[1:]
        if key not in _LAW_REFS:
            raise ParseError(f"unknown catalog law {ref!r}; known: {sorted(_LAW_REFS)}")
        return _LAW_REFS[key]()
    return FusionLaw.from_dict(_json(ref))


def parse_vector(alg: Algebra, text: str) -> Vect:
    """Linear combination of basis names, e.g. ``"a0 - a*a1"``; coefficients may use parameters."""
    for b in alg.basis:
        if b in ("a", "b", "x", "y", "omega"):
            raise ParseError(f"basis name {b!r} clashes with a parameter name")
    s = parse_scalar(text)
    names = set(alg.basis)
    if s.den.variables() & names:
        raise ParseError(f"{text!r} divides by a basis element")
    zero_at = {b: 0 for b in alg.basis}
    base = s.num.subs(zero_at)
    coeffs = [s.num.subs({**zero_at, b: 1}) - base for b in alg.basis]
    rest = s.num - sum((c * MultiPoly.var(b) for c, b in zip(coeffs, alg.basis)),
                       MultiPoly.const(0))
    if not rest.is_zero():
        raise ParseError(f"{text!r} is not a linear combination of {list(alg.basis)}")
    v = Vect([Scalar.fraction(c, s.den) for c in coeffs])
    return v.to_extended() if alg.extended else v


def _law_for(loaded: LoadedAlgebra, law_ref: str | None) -> FusionLaw:
    if law_ref:
        return load_law(law_ref)
    if loaded.law is None:
        raise ParseError("no fusion law given; pass --law")
    return loaded.law


def _specialize(loaded: LoadedAlgebra, params: dict, law: FusionLaw | None = None):
    """Substitute ``params``; refuse when a condition or certificate polynomial vanishes."""
    if not params:
        return loaded, law
    for kind, polys in (("precondition", loaded.algebra.conditions),
                        ("certificate", loaded.certificate)):
        for p in polys:
            if p.subs(params).is_zero():
                raise BadParameter(f"{kind} {p} != 0 fails at "
                                   + ", ".join(f"{k}={v}" for k, v in sorted(params.items())))
    alg = loaded.algebra.subs(params)
    axes = [a.subs(params) for a in loaded.axes]
    conds = [p.subs(params) for p in loaded.algebra.conditions]
    alg = Algebra(alg.basis, {k: alg.structure(*k) for k in
                              ((i, j) for i in range(alg.dim) for j in range(i, alg.dim))},
                  name=alg.name, extended=alg.extended,
                  conditions=[p for p in conds if not p.is_constant()])
    cert = [q for q in (p.subs(params) for p in loaded.certificate) if not q.is_constant()]
    law = law.subs(params) if law is not None else None
    own = loaded.law.subs(params) if loaded.law is not None else None
    return LoadedAlgebra(alg, axes, cert, own), law


# --- output ----------------------------------------------------------------------

def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _axis_text(i: int, rep: dict) -> str:
    lines = [f"axis a{i}: {'PASS' if rep['passed'] else 'FAIL'}  dims={rep['dims']}"]
    if rep["certificate"]:
        lines.append("  certificate: " + ", ".join(f"{p} != 0" for p in rep["certificate"]))
    for v in rep["violations"]:
        lines.append(f"  violation {v['lambda']}*{v['mu']} has {v['component']}-part {v['vector']}")
    return "\n".join(lines)


# --- commands ----------------------------------------------------------------------

def _fail_reason(detail) -> str:
    if isinstance(detail, str):
        return detail
    if not isinstance(detail, dict):
        return ""
    if "reason" in detail:
        return detail["reason"]
    if "axes" in detail:
        bad = [a["axis"] for a in detail["axes"] if not a["passed"]]
        parts = [f"axis {a} fails" for a in bad]
        if not detail.get("generated", True):
            parts.append("axes do not generate")
        if not detail.get("swap_automorphism", True):
            parts.append("swap is not an automorphism")
        return "; ".join(parts)
    if "failed" in detail:
        return f"{detail['failed']} of {detail['total']} relator instances fail"
    return ", ".join(f"{k}={v}" for k, v in sorted(detail.items()) if isinstance(v, (bool, int, str)))


def cmd_verify(cfg: RunConfig, args) -> int:
    overrides = load_overrides(_read(args.override) if args.override else None)
    suites = args.suite or None
    report = run_verify(overrides, seed=cfg.seed, max_len=cfg.max_len, jobs=args.jobs,
                        suites=suites)
    lines = []
    for status in ("fail", "documented", "adjudicated", "pass"):
        group = [c for c in report["checks"] if c["status"] == status]
        if not group or (status == "pass" and not args.verbose):
            continue
        lines.append(f"== {status} ({len(group)})")
        for c in group:
            extra = ""
            if status == "fail":
                extra = "  " + _fail_reason(c["detail"])
            elif status == "documented":
                extra = f"  [{c['detail']['key']}] {c['detail']['note']}"
            elif status == "adjudicated" and isinstance(c["detail"], dict):
                if "survivor" in c["detail"]:
                    extra = f"  survivor: {c['detail']['survivor']}"
                elif "status" in c["detail"]:
                    extra = f"  reading {c['detail']['status']}s"
            lines.append(f"{c['name']}{extra}")
    s = report["summary"]
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['documented']} documented, "
                 f"{s['adjudicated']} adjudicated -> {'OK' if s['ok'] else 'FAILED'}")
    _emit(cfg, report, "\n".join(lines))
    return 0 if s["ok"] else 1


def cmd_check_axis(cfg: RunConfig, args) -> int:
    loaded = load_algebra(args.algebra)
    law = _law_for(loaded, args.law)
    loaded, law = _specialize(loaded, cfg.params, law)
    alg = loaded.algebra
    idx = range(len(loaded.axes)) if args.axis is None else [args.axis]
    reps = []
    for i in idx:
        if not 0 <= i < len(loaded.axes):
            raise ParseError(f"axis index {i} out of range (have {len(loaded.axes)})")
        reps.append((i, check_axis(alg, loaded.axes[i], law).to_dict(alg)))
    ok = all(r["passed"] for _, r in reps)
    payload = {"algebra": alg.name, "law": law.to_dict(), "passed": ok,
               "axes": {f"a{i}": r for i, r in reps}}
    _emit(cfg, payload, "\n".join(_axis_text(i, r) for i, r in reps))
    return 0 if ok else 1


def cmd_minimal_law(cfg: RunConfig, args) -> int:
    loaded = load_algebra(args.algebra)
    law = _law_for(loaded, args.law)
    loaded, law = _specialize(loaded, cfg.params, law)
    alg = loaded.algebra
    m = minimal_fusion_law(alg, loaded.axes[args.axis], law.labels)
    g = grading_group(m)
    payload = {"law": m.to_dict(), "grading": g.to_dict(), "description": g.describe()}
    _emit(cfg, payload, m.format_table() + "\ngrading: " + g.describe())
    return 0


def cmd_grading(cfg: RunConfig, args) -> int:
    law = load_law(args.law)
    if cfg.params:
        law = law.subs(cfg.params)
    g = grading_group(law)
    _emit(cfg, {"law": law.to_dict(), "grading": g.to_dict(), "description": g.describe()},
          g.describe())
    return 0


def _closure_record(alg, label, vecs):
    c = ideal_closure(alg, vecs)
    span = Subspace.span([v for v in vecs if not v.is_zero()], alg.dim) if any(
        not v.is_zero() for v in vecs) else Subspace(alg.dim, ())
    return {"generators": label, "span_dim": span.dim, "closure_dim": c.dim,
            "proper_ideal": c == span and 0 < c.dim < alg.dim,
            "certificate": sorted(str(p) for p in c.certificate)}


def cmd_ideals(cfg: RunConfig, args) -> int:
    if args.table:
        t = cat.verify_ideal_table(args.table, seed=cfg.seed)
        rows = t["rows"] + t["adjudications"]
        text = "\n".join(f"{r['status'].upper():4}  {r['row']}"
                         + ("" if r["as_printed"] else "  (alternative reading)")
                         for r in rows)
        _emit(cfg, t, text)
        return int(any(r["status"] == "fail" for r in t["rows"]))
    if not args.algebra:
        raise ParseError("give an algebra or --table")
    loaded = load_algebra(args.algebra)
    law = _law_for(loaded, args.law)
    loaded, law = _specialize(loaded, cfg.params, law)
    alg = loaded.algebra
    recs = []
    d = eigendecompose(alg, loaded.axes[args.axis], law.labels)
    one = ONE.to_extended() if alg.extended else ONE
    for l in d.eigenvalues:
        if l == one:
            continue
        for k, v in enumerate(d.spaces[l].basis):
            recs.append(_closure_record(alg, f"v_{l}[{k}]", [v]))
    for i, b in enumerate(alg.basis):
        recs.append(_closure_record(alg, b, [alg.e(i)]))
    text = "\n".join(f"<{r['generators']}>: span {r['span_dim']}, closure {r['closure_dim']}"
                     + ("  proper ideal" if r["proper_ideal"] else "") for r in recs)
    _emit(cfg, {"algebra": alg.name, "ideals": recs}, text)
    return 0


def cmd_quotient(cfg: RunConfig, args) -> int:
    loaded = load_algebra(args.algebra)
    loaded, _ = _specialize(loaded, cfg.params)
    alg = loaded.algebra
    gens = [parse_vector(alg, g) for g in args.gens]
    ideal = ideal_closure(alg, gens)
    q, proj = quotient(alg, ideal)
    images = [alg.format_vector(a) + " -> " + q.format_vector(proj(a)) for a in loaded.axes]
    payload = {"ideal_dim": ideal.dim, "quotient": q.to_dict(),
               "axis_images": [q.format_vector(proj(a)) for a in loaded.axes]}
    text = (f"ideal dimension {ideal.dim}; quotient dimension {q.dim}\n"
            + q.format_products() + "\n" + "\n".join(images))
    _emit(cfg, payload, text)
    return 0


def cmd_relators(cfg: RunConfig, args) -> int:
    loaded = load_algebra(args.algebra)
    law = _law_for(loaded, args.law)
    loaded, law = _specialize(loaded, cfg.params, law)
    rep = check_all(loaded.algebra, loaded.axes, law, cfg.max_len)
    payload = rep.to_dict(limit=None)
    text = (f"{rep.total} instances over {rep.words} words "
            f"(idempotent {rep.counts['idempotent']}, primitivity {rep.counts['primitivity']}, "
            f"fusion {rep.counts['fusion']}): {rep.failed} failed")
    for f in rep.failures[:20]:
        text += f"\n  {f['instance']}: {f.get('residual', f.get('error'))}"
    _emit(cfg, payload, text)
    return 0 if rep.passed else 1


def cmd_specialize(cfg: RunConfig, args) -> int:
    if not cfg.params:
        raise ParseError("specialize needs --params")
    loaded = load_algebra(args.algebra)
    loaded, _ = _specialize(loaded, cfg.params)
    alg = loaded.algebra
    d = alg.to_dict()
    d["axes"] = [{alg.basis[k]: str(c) for k, c in enumerate(a.coords) if not c.is_zero()}
                 for a in loaded.axes]
    if loaded.certificate:
        d["certificate"] = sorted(str(p) for p in loaded.certificate)
    if loaded.law is not None:
        d["law"] = loaded.law.to_dict()
    text = json.dumps(d, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        sys.stdout.write(f"wrote {args.output}\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def cmd_export(cfg: RunConfig, args) -> int:
    ref = args.name if args.name.startswith("@") else "@" + args.name
    if ref[1:] in _LAW_REFS:
        d = load_law(ref).to_dict()
    elif ref[1:] in _ALGEBRA_REFS:
        d = entry_to_dict(_ALGEBRA_REFS[ref[1:]]())
    else:
        raise ParseError(f"unknown catalog name {args.name!r}")
    text = json.dumps(d, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def cmd_catalog(cfg: RunConfig, args) -> int:
    payload = {"algebras": sorted(_ALGEBRA_REFS), "laws": sorted(_LAW_REFS),
               "suites": list(SUITES), "discrepancies": cat.DISCREPANCIES}
    text = ("algebras: " + ", ".join("@" + k for k in sorted(_ALGEBRA_REFS))
            + "\nlaws: " + ", ".join("@" + k for k in sorted(_LAW_REFS))
            + "\nsuites: " + ", ".join(SUITES))
    _emit(cfg, payload, text)
    return 0


# --- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled specializations")
    common.add_argument("--max-len", type=int, default=4, help="maximum word length for relators")
    common.add_argument("--params", default="", help="rational assignment, e.g. 'a=1/3,x=2'")

    p = argparse.ArgumentParser(prog="axial", description="Exact checks for axial algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run every catalog suite")
    v.add_argument("--override", help="JSON file replacing catalog algebras by entry name")
    v.add_argument("--suite", action="append", choices=list(SUITES),
                   help="restrict to a suite (repeatable)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check-axis", parents=[common], help="axis test for one or all axes")
    c.add_argument("algebra")
    c.add_argument("--axis", type=int)
    c.add_argument("--law")
    c.set_defaults(func=cmd_check_axis)

    m = sub.add_parser("minimal-law", parents=[common], help="minimal fusion law of an axis")
    m.add_argument("algebra")
    m.add_argument("--axis", type=int, default=0)
    m.add_argument("--law", help="law whose eigenvalues are used")
    m.set_defaults(func=cmd_minimal_law)

    g = sub.add_parser("grading", parents=[common], help="grading group of a law")
    g.add_argument("law")
    g.set_defaults(func=cmd_grading)

    i = sub.add_parser("ideals", parents=[common], help="ideals from eigenvectors and basis")
    i.add_argument("algebra", nargs="?")
    i.add_argument("--axis", type=int, default=0)
    i.add_argument("--law")
    i.add_argument("--table", choices=("3A", "D-beta-half", "D-alpha-half"),
                   help="verify a catalog ideal table instead")
    i.set_defaults(func=cmd_ideals)

    q = sub.add_parser("quotient", parents=[common], help="quotient by the ideal generated by vectors")
    q.add_argument("algebra")
    q.add_argument("gens", nargs="+", help="vectors such as 'a0 - a1'")
    q.set_defaults(func=cmd_quotient)

    r = sub.add_parser("relators", parents=[common], help="evaluate all relators")
    r.add_argument("algebra")
    r.add_argument("--law")
    r.set_defaults(func=cmd_relators)

    s = sub.add_parser("specialize", parents=[common], help="substitute rational parameters")
    s.add_argument("algebra")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_specialize)

    e = sub.add_parser("export", parents=[common], help="write a catalog algebra or law as JSON")
    e.add_argument("name")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)

    k = sub.add_parser("catalog", parents=[common], help="list catalog names")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.command, (), parse_params(args.params), args.max_len,
                        args.format, args.seed)
        if cfg.max_len < 1:
            raise ParseError("--max-len must be at least 1")
        return args.func(cfg, args)
    except AxialError as e:
        sys.stderr.write(f"axial: {type(e).__name__}: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
