"""Structure documents: a versioned JSON surface with exact rationals.

Coefficients are strings ("p" or "p/q" with positive q), never floats;
unspecified entries are zero; duplicate index tuples are an error.  Input
accepts non-lowest terms and leading zeros; output is canonical (lowest
terms, "p" shorthand when the denominator is one, entries sorted by index
tuple, fixed key order), so load-then-save is byte-stable on canonical
documents.  Loading performs shape validation only; semantic verification
is a separate, explicit step, which is what lets mutation tests round-trip
deliberately invalid structures.

The full grammar lives in docs/FORMAT.md.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .crossed import LieCrossedModule, PreLieCrossedModule, RBLieCrossedModule
from .errors import (BadRational, DuplicateEntry, ParseError, UnknownKind,
                     VersionMismatch)
from .liealg import (LieAlgebra, PreLieAlgebra, RBRepresentation,
                     RotaBaxterLieAlgebra)
from .tensors import BilinearMap, LinearMap, TrilinearMap
from .twoterm import (LInfinityHom, RBLInfinityHom, RBTriple, TwoTermComplex,
                      TwoTermLInfinity, TwoTermRBLInfinity)

FORMAT_VERSION = 1

_RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


@dataclass(frozen=True)
class SearchResults:
    algebra: LieAlgebra
    coeffs: tuple[Fraction, ...]
    operators: tuple[LinearMap, ...]


def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise BadRational(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise BadRational(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    return str(q)


def _entries_to_values(entries, arity: int, bounds: tuple[int, ...], where: str):
    if not isinstance(entries, list):
        raise ParseError(f"{where}: expected a list of entries")
    seen = {}
    for pos, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise ParseError(f"{where}[{pos}]: expected [{arity} indices, coefficient]")
        idx = tuple(entry[:arity])
        for v, bound in zip(idx, bounds):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
                raise ParseError(f"{where}[{pos}]: index {v!r} out of range 0..{bound - 1}")
        if idx in seen:
            raise DuplicateEntry(f"{where}: duplicate entry at {idx}")
        seen[idx] = parse_rational(entry[arity])
    return seen


def _load_linear(doc, key: str, rows: int, cols: int) -> LinearMap:
    vals = _entries_to_values(doc.get(key, []), 2, (rows, cols), key)
    grid = [[vals.get((r, c), Fraction(0)) for c in range(cols)] for r in range(rows)]
    return LinearMap(rows, cols, tuple(tuple(row) for row in grid))


def _load_bilinear(doc, key: str, dim_a: int, dim_b: int, dim_out: int,
                   skew: bool) -> BilinearMap:
    vals = _entries_to_values(doc.get(key, []), 3, (dim_out, dim_a, dim_b), key)
    grid = tuple(tuple(tuple(vals.get((k, i, j), Fraction(0)) for j in range(dim_b))
                       for i in range(dim_a))
                 for k in range(dim_out))
    return BilinearMap(dim_a, dim_b, dim_out, grid, skew)


def _load_trilinear(doc, key: str, dim: int, dim_out: int, alt: bool) -> TrilinearMap:
    vals = _entries_to_values(doc.get(key, []), 4, (dim_out, dim, dim, dim), key)
    grid = tuple(tuple(tuple(tuple(vals.get((l, i, j, k), Fraction(0)) for k in range(dim))
                             for j in range(dim))
                       for i in range(dim))
                 for l in range(dim_out))
    return TrilinearMap(dim, dim_out, grid, alt)


def _load_action(doc, key: str, count: int, dim: int) -> tuple[LinearMap, ...]:
    vals = _entries_to_values(doc.get(key, []), 3, (count, dim, dim), key)
    mats = []
    for x in range(count):
        grid = [[vals.get((x, r, c), Fraction(0)) for c in range(dim)] for r in range(dim)]
        mats.append(LinearMap(dim, dim, tuple(tuple(row) for row in grid)))
    return tuple(mats)


def _dump_linear(m: LinearMap):
    return [[r, c, format_rational(m.entries[r][c])]
            for r in range(m.rows) for c in range(m.cols)
            if m.entries[r][c] != 0]


def _dump_bilinear(b: BilinearMap):
    return [[k, i, j, format_rational(b.coeffs[k][i][j])]
            for k in range(b.dim_out) for i in range(b.dim_a) for j in range(b.dim_b)
            if b.coeffs[k][i][j] != 0]


def _dump_trilinear(t: TrilinearMap):
    return [[l, i, j, k, format_rational(t.coeffs[l][i][j][k])]
            for l in range(t.dim_out) for i in range(t.dim)
            for j in range(t.dim) for k in range(t.dim)
            if t.coeffs[l][i][j][k] != 0]


def _dump_action(rho: tuple[LinearMap, ...]):
    return [[x, r, c, format_rational(m.entries[r][c])]
            for x, m in enumerate(rho)
            for r in range(m.rows) for c in range(m.cols)
            if m.entries[r][c] != 0]


def _dim(doc, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ParseError(f"{key} must be a nonnegative integer")
    return v


def _labels(doc):
    v = doc.get("basis")
    if v is None:
        return None
    if not isinstance(v, list) or not all(isinstance(s, str) for s in v):
        raise ParseError("basis must be a list of strings")
    return tuple(v)


def _check_header(doc, expected_kind: str | None = None) -> str:
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(f"unsupported format version {version!r}")
    kind = doc.get("kind")
    if kind not in _LOADERS:
        raise UnknownKind(f"unknown document kind {kind!r}")
    if expected_kind is not None and kind != expected_kind:
        raise ParseError(f"expected an embedded {expected_kind!r} document, got {kind!r}")
    return kind


def _load_lie(doc) -> LieAlgebra:
    n = _dim(doc, "dim")
    return LieAlgebra(n, _load_bilinear(doc, "bracket", n, n, n, skew=True), _labels(doc))


def _load_rb_lie(doc) -> RotaBaxterLieAlgebra:
    return RotaBaxterLieAlgebra(_load_lie(doc), _load_linear(doc, "r", doc["dim"], doc["dim"]))


def _load_prelie(doc) -> PreLieAlgebra:
    n = _dim(doc, "dim")
    return PreLieAlgebra(n, _load_bilinear(doc, "mult", n, n, n, skew=False))


def _load_representation(doc) -> RBRepresentation:
    sub = doc.get("algebra")
    _check_header(sub, "rb-lie")
    alg = _load_rb_lie(sub)
    dv = _dim(doc, "dim_v")
    return RBRepresentation(alg, dv, _load_action(doc, "rho", alg.dim, dv),
                            _load_linear(doc, "cal_r", dv, dv))


def _load_2term(doc) -> TwoTermLInfinity:
    d0, d1 = _dim(doc, "dim0"), _dim(doc, "dim1")
    return TwoTermLInfinity(
        TwoTermComplex(d0, d1, _load_linear(doc, "l1", d0, d1)),
        _load_bilinear(doc, "l2_00", d0, d0, d0, skew=True),
        _load_bilinear(doc, "l2_01", d0, d1, d1, skew=False),
        _load_trilinear(doc, "l3", d0, d1, alt=True))


def _load_rb_2term(doc) -> TwoTermRBLInfinity:
    linf = _load_2term(doc)
    d0, d1 = linf.dim0, linf.dim1
    return TwoTermRBLInfinity(linf, RBTriple(
        _load_linear(doc, "r0", d0, d0),
        _load_linear(doc, "r1", d1, d1),
        _load_bilinear(doc, "r2", d0, d0, d1, skew=True)))


def _load_hom(doc) -> LInfinityHom:
    src_doc, tgt_doc = doc.get("source"), doc.get("target")
    _check_header(src_doc, "2term")
    _check_header(tgt_doc, "2term")
    src, tgt = _load_2term(src_doc), _load_2term(tgt_doc)
    return LInfinityHom(
        src, tgt,
        _load_linear(doc, "phi0", tgt.dim0, src.dim0),
        _load_linear(doc, "phi1", tgt.dim1, src.dim1),
        _load_bilinear(doc, "phi2", src.dim0, src.dim0, tgt.dim1, skew=True))


def _load_rb_hom(doc) -> RBLInfinityHom:
    src_doc, tgt_doc = doc.get("source"), doc.get("target")
    _check_header(src_doc, "rb-2term")
    _check_header(tgt_doc, "rb-2term")
    src, tgt = _load_rb_2term(src_doc), _load_rb_2term(tgt_doc)
    hom = LInfinityHom(
        src.linf, tgt.linf,
        _load_linear(doc, "phi0", tgt.linf.dim0, src.linf.dim0),
        _load_linear(doc, "phi1", tgt.linf.dim1, src.linf.dim1),
        _load_bilinear(doc, "phi2", src.linf.dim0, src.linf.dim0, tgt.linf.dim1, skew=True))
    return RBLInfinityHom(src, tgt, hom,
                          _load_linear(doc, "phi3", tgt.linf.dim1, src.linf.dim0))


def _load_crossed_lie(doc) -> LieCrossedModule:
    d0, d1 = _dim(doc, "dim0"), _dim(doc, "dim1")
    g0 = LieAlgebra(d0, _load_bilinear(doc, "bracket0", d0, d0, d0, skew=True))
    g1 = LieAlgebra(d1, _load_bilinear(doc, "bracket1", d1, d1, d1, skew=True))
    return LieCrossedModule(g0, g1, _load_linear(doc, "d", d0, d1),
                            _load_action(doc, "rho", d0, d1))


def _load_crossed_rb(doc) -> RBLieCrossedModule:
    base = _load_crossed_lie(doc)
    d0, d1 = base.g0.dim, base.g1.dim
    return RBLieCrossedModule(base, _load_linear(doc, "t0", d0, d0),
                              _load_linear(doc, "t1", d1, d1))


def _load_crossed_prelie(doc) -> PreLieCrossedModule:
    d0, d1 = _dim(doc, "dim0"), _dim(doc, "dim1")
    return PreLieCrossedModule(
        PreLieAlgebra(d0, _load_bilinear(doc, "mult0", d0, d0, d0, skew=False)),
        PreLieAlgebra(d1, _load_bilinear(doc, "mult1", d1, d1, d1, skew=False)),
        _load_linear(doc, "delta", d0, d1),
        _load_action(doc, "l_act", d0, d1),
        _load_action(doc, "r_act", d0, d1))


def _load_search_results(doc) -> SearchResults:
    sub = doc.get("algebra")
    _check_header(sub, "lie")
    alg = _load_lie(sub)
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list):
        raise ParseError("coeffs must be a list of rational strings")
    ops_doc = doc.get("operators")
    if not isinstance(ops_doc, list):
        raise ParseError("operators must be a list of entry lists")
    ops = []
    for pos, entries in enumerate(ops_doc):
        vals = _entries_to_values(entries, 2, (alg.dim, alg.dim), f"operators[{pos}]")
        grid = [[vals.get((r, c), Fraction(0)) for c in range(alg.dim)]
                for r in range(alg.dim)]
        ops.append(LinearMap(alg.dim, alg.dim, tuple(tuple(row) for row in grid)))
    return SearchResults(alg, tuple(parse_rational(c) for c in coeffs), tuple(ops))


_LOADERS = {
    "lie": _load_lie,
    "rb-lie": _load_rb_lie,
    "pre-lie": _load_prelie,
    "representation": _load_representation,
    "2term": _load_2term,
    "rb-2term": _load_rb_2term,
    "hom": _load_hom,
    "rb-hom": _load_rb_hom,
    "crossed-lie": _load_crossed_lie,
    "crossed-rb": _load_crossed_rb,
    "crossed-prelie": _load_crossed_prelie,
    "search-results": _load_search_results,
}


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid document: {e.msg}", e.lineno, e.colno) from e
    kind = _check_header(doc)
    return _LOADERS[kind](doc)


def load(path):
    return loads(Path(path).read_text(encoding="utf-8"))


def _header(kind: str) -> dict:
    return {"kind": kind, "version": FORMAT_VERSION}


def _dump_lie(alg: LieAlgebra) -> dict:
    doc = _header("lie")
    doc["dim"] = alg.dim
    if alg.labels is not None:
        doc["basis"] = list(alg.labels)
    doc["bracket"] = _dump_bilinear(alg.bracket)
    return doc


def _dump_rb_lie(rba: RotaBaxterLieAlgebra) -> dict:
    doc = _dump_lie(rba.base)
    doc["kind"] = "rb-lie"
    doc["r"] = _dump_linear(rba.r)
    return doc


def _dump_prelie(p: PreLieAlgebra) -> dict:
    doc = _header("pre-lie")
    doc["dim"] = p.dim
    doc["mult"] = _dump_bilinear(p.mult)
    return doc


def _dump_representation(rep: RBRepresentation) -> dict:
    doc = _header("representation")
    doc["algebra"] = _dump_rb_lie(rep.algebra)
    doc["dim_v"] = rep.dim_v
    doc["rho"] = _dump_action(rep.rho)
    doc["cal_r"] = _dump_linear(rep.cal_r)
    return doc


def _dump_2term(L: TwoTermLInfinity) -> dict:
    doc = _header("2term")
    doc["dim0"], doc["dim1"] = L.dim0, L.dim1
    doc["l1"] = _dump_linear(L.complex.l1)
    doc["l2_00"] = _dump_bilinear(L.l2_00)
    doc["l2_01"] = _dump_bilinear(L.l2_01)
    doc["l3"] = _dump_trilinear(L.l3)
    return doc


def _dump_rb_2term(G: TwoTermRBLInfinity) -> dict:
    doc = _dump_2term(G.linf)
    doc["kind"] = "rb-2term"
    doc["r0"] = _dump_linear(G.rb.r0)
    doc["r1"] = _dump_linear(G.rb.r1)
    doc["r2"] = _dump_bilinear(G.rb.r2)
    return doc


def _dump_hom(f: LInfinityHom) -> dict:
    doc = _header("hom")
    doc["source"] = _dump_2term(f.source)
    doc["target"] = _dump_2term(f.target)
    doc["phi0"] = _dump_linear(f.phi0)
    doc["phi1"] = _dump_linear(f.phi1)
    doc["phi2"] = _dump_bilinear(f.phi2)
    return doc


def _dump_rb_hom(f: RBLInfinityHom) -> dict:
    doc = _header("rb-hom")
    doc["source"] = _dump_rb_2term(f.source)
    doc["target"] = _dump_rb_2term(f.target)
    doc["phi0"] = _dump_linear(f.hom.phi0)
    doc["phi1"] = _dump_linear(f.hom.phi1)
    doc["phi2"] = _dump_bilinear(f.hom.phi2)
    doc["phi3"] = _dump_linear(f.phi3)
    return doc


def _dump_crossed_lie(cm: LieCrossedModule) -> dict:
    doc = _header("crossed-lie")
    doc["dim0"], doc["dim1"] = cm.g0.dim, cm.g1.dim
    doc["bracket0"] = _dump_bilinear(cm.g0.bracket)
    doc["bracket1"] = _dump_bilinear(cm.g1.bracket)
    doc["d"] = _dump_linear(cm.d)
    doc["rho"] = _dump_action(cm.rho)
    return doc


def _dump_crossed_rb(cm: RBLieCrossedModule) -> dict:
    doc = _dump_crossed_lie(cm.base)
    doc["kind"] = "crossed-rb"
    doc["t0"] = _dump_linear(cm.t0)
    doc["t1"] = _dump_linear(cm.t1)
    return doc


def _dump_crossed_prelie(pm: PreLieCrossedModule) -> dict:
    doc = _header("crossed-prelie")
    doc["dim0"], doc["dim1"] = pm.p0.dim, pm.p1.dim
    doc["mult0"] = _dump_bilinear(pm.p0.mult)
    doc["mult1"] = _dump_bilinear(pm.p1.mult)
    doc["delta"] = _dump_linear(pm.delta)
    doc["l_act"] = _dump_action(pm.l_act)
    doc["r_act"] = _dump_action(pm.r_act)
    return doc


def _dump_search_results(res: SearchResults) -> dict:
    doc = _header("search-results")
    doc["algebra"] = _dump_lie(res.algebra)
    doc["coeffs"] = [format_rational(c) for c in res.coeffs]
    doc["operators"] = [_dump_linear(op) for op in res.operators]
    return doc


def to_document(obj) -> dict:
    if isinstance(obj, RBLieCrossedModule):
        return _dump_crossed_rb(obj)
    if isinstance(obj, LieCrossedModule):
        return _dump_crossed_lie(obj)
    if isinstance(obj, PreLieCrossedModule):
        return _dump_crossed_prelie(obj)
    if isinstance(obj, RotaBaxterLieAlgebra):
        return _dump_rb_lie(obj)
    if isinstance(obj, LieAlgebra):
        return _dump_lie(obj)
    if isinstance(obj, PreLieAlgebra):
        return _dump_prelie(obj)
    if isinstance(obj, RBRepresentation):
        return _dump_representation(obj)
    if isinstance(obj, TwoTermRBLInfinity):
        return _dump_rb_2term(obj)
    if isinstance(obj, TwoTermLInfinity):
        return _dump_2term(obj)
    if isinstance(obj, RBLInfinityHom):
        return _dump_rb_hom(obj)
    if isinstance(obj, LInfinityHom):
        return _dump_hom(obj)
    if isinstance(obj, SearchResults):
        return _dump_search_results(obj)
    raise UnknownKind(f"cannot serialize a {type(obj).__name__}")


def _render(value, indent: int = 0) -> str:
    """Canonical rendering: objects multiline, scalar-only lists inline."""
    pad = " " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(f"{pad}  {json.dumps(k)}: {_render(v, indent + 2)}"
                          for k, v in value.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(json.dumps(v) for v in value) + "]"
        body = ",\n".join(f"{pad}  {_render(v, indent + 2)}" for v in value)
        return "[\n" + body + "\n" + pad + "]"
    return json.dumps(value)


def dumps(obj) -> str:
    return _render(to_document(obj)) + "\n"


def save(obj, path):
    Path(path).write_text(dumps(obj), encoding="utf-8")


def kind_of(obj) -> str:
    return to_document(obj)["kind"]
