"""Command-line surface: verify, construct, roundtrip, search-rb, mutate,
compose.

Exit codes: 0 all checks pass, 1 violations found, 2 usage or document
errors.  Violation lines are machine-parseable and sorted:

    VIOLATION <condition-id> <index-tuple> <residual>

Verification output is identical for any --workers value; constructed
documents go to -o or stdout.
"""

from __future__ import annotations

import argparse
import sys

from .crossed import (LieCrossedModule, PreLieCrossedModule,
                      RBLieCrossedModule, crossed_semidirect,
                      crossed_to_strict, derived_crossed,
                      prelie_crossed_to_lie_crossed,
                      rb_crossed_to_prelie_crossed, strict_to_crossed,
                      verify_crossed)
from .errors import StructureError
from .liealg import (LieAlgebra, PreLieAlgebra, RBRepresentation,
                     RotaBaxterLieAlgebra, adjoint_representation,
                     dual_representation, prelie_from_rb, semidirect_product,
                     subadjacent_lie, verify_lie, verify_prelie)
from .lie2 import (roundtrip_hom, roundtrip_structure,
                   verify_jacobiator_coherence, verify_rbcoh, verify_rbcohm)
from .report import VerificationReport, prefix_checks, run_checks
from .search import SearchSpec, enumerate_rb_operators, mutate
from .serialize import (SearchResults, dumps, load, parse_rational, save)
from .twoterm import (LInfinityHom, RBLInfinityHom, TwoTermLInfinity,
                      TwoTermRBLInfinity, compose_rb_homs, rb_hom_checks,
                      hom_checks, two_term_checks, rb_triple_checks,
                      verify_2term)
from .liealg import lie_checks, rb_checks, representation_checks


def verify_structure(obj, workers: int = 1) -> VerificationReport:
    """Dispatch to the full verifier stack for the object's kind.
    Operator-carrying two-term structures and homomorphisms include the
    diagram-level coherence checks, so exit 0 certifies both layers."""
    if isinstance(obj, RotaBaxterLieAlgebra):
        return run_checks(lie_checks(obj.base) + rb_checks(obj), workers)
    if isinstance(obj, LieAlgebra):
        return verify_lie(obj, workers)
    if isinstance(obj, PreLieAlgebra):
        return verify_prelie(obj, workers)
    if isinstance(obj, RBRepresentation):
        alg = obj.algebra
        checks = prefix_checks("alg-", lie_checks(alg.base) + rb_checks(alg))
        checks += representation_checks(obj)
        return run_checks(checks, workers)
    if isinstance(obj, TwoTermRBLInfinity):
        return VerificationReport.merge(
            run_checks(two_term_checks(obj.linf) + rb_triple_checks(obj), workers),
            verify_rbcoh(obj, workers),
            verify_jacobiator_coherence(obj, workers))
    if isinstance(obj, TwoTermLInfinity):
        return verify_2term(obj, workers)
    if isinstance(obj, RBLInfinityHom):
        checks = prefix_checks("src-", two_term_checks(obj.source.linf)
                               + rb_triple_checks(obj.source))
        checks += prefix_checks("tgt-", two_term_checks(obj.target.linf)
                                + rb_triple_checks(obj.target))
        checks += hom_checks(obj.hom) + rb_hom_checks(obj)
        return VerificationReport.merge(run_checks(checks, workers),
                                        verify_rbcohm(obj, workers))
    if isinstance(obj, LInfinityHom):
        checks = prefix_checks("src-", two_term_checks(obj.source))
        checks += prefix_checks("tgt-", two_term_checks(obj.target))
        checks += hom_checks(obj)
        return run_checks(checks, workers)
    if isinstance(obj, (LieCrossedModule, RBLieCrossedModule, PreLieCrossedModule)):
        return verify_crossed(obj, workers)
    if isinstance(obj, SearchResults):
        checks = lie_checks(obj.algebra)
        for pos, op in enumerate(obj.operators):
            checks += prefix_checks(f"op{pos}-",
                                    rb_checks(RotaBaxterLieAlgebra(obj.algebra, op)))
        return run_checks(checks, workers)
    raise StructureError(f"no verifier for {type(obj).__name__}")


def _emit(report: VerificationReport) -> int:
    for line in report.lines():
        print(line)
    print(f"checked {report.checked} conditions, "
          f"{len(report.violations)} violations", file=sys.stderr)
    return 0 if report.ok else 1


def _output(obj, path) -> None:
    if path:
        save(obj, path)
    else:
        sys.stdout.write(dumps(obj))


def cmd_verify(args) -> int:
    return _emit(verify_structure(load(args.file), args.workers))


_CONSTRUCTIONS = {
    "prelie": (RotaBaxterLieAlgebra, prelie_from_rb),
    "subadjacent": (PreLieAlgebra, subadjacent_lie),
    "dual": (RBRepresentation, dual_representation),
    "adjoint": (RotaBaxterLieAlgebra, adjoint_representation),
    "semidirect": (RBRepresentation, semidirect_product),
    "crossed-to-strict": (RBLieCrossedModule, crossed_to_strict),
    "strict-to-crossed": (TwoTermRBLInfinity, strict_to_crossed),
    "rb-to-prelie-cm": (RBLieCrossedModule, rb_crossed_to_prelie_crossed),
    "prelie-to-lie-cm": (PreLieCrossedModule, prelie_crossed_to_lie_crossed),
    "derived-cm": (RBLieCrossedModule, None),  # returns (module, hom report)
    "cm-semidirect": (RBLieCrossedModule, crossed_semidirect),
}


def cmd_construct(args) -> int:
    want, fn = _CONSTRUCTIONS[args.name]
    obj = load(args.file)
    if not isinstance(obj, want):
        print(f"error: {args.name} expects a {want.__name__} document", file=sys.stderr)
        return 2
    report = verify_structure(obj)
    if not report.ok:
        return _emit(report)
    if args.name == "derived-cm":
        out, hom_report = derived_crossed(obj)
        if not hom_report.ok:
            return _emit(hom_report)
        _output(out, args.out)
        return 0
    _output(fn(obj), args.out)
    return 0


def cmd_roundtrip(args) -> int:
    obj = load(args.file)
    if isinstance(obj, TwoTermRBLInfinity):
        return _emit(roundtrip_structure(obj, args.workers))
    if isinstance(obj, RBLInfinityHom):
        return _emit(roundtrip_hom(obj, args.workers))
    print("error: roundtrip expects an rb-2term or rb-hom document", file=sys.stderr)
    return 2


def cmd_search_rb(args) -> int:
    alg = load(args.file)
    if not isinstance(alg, LieAlgebra) or isinstance(alg, RotaBaxterLieAlgebra):
        print("error: search-rb expects a lie document", file=sys.stderr)
        return 2
    report = verify_lie(alg)
    if not report.ok:
        return _emit(report)
    coeffs = tuple(parse_rational(c) for c in args.coeffs.split(","))
    spec = SearchSpec(alg, coeffs, budget=args.budget)
    found = enumerate_rb_operators(spec)
    results = SearchResults(alg, tuple(sorted(set(coeffs))),
                            tuple(rba.r for rba in found))
    _output(results, args.out)
    print(f"{len(found)} operators out of {spec.candidate_count()} candidates",
          file=sys.stderr)
    return 0


def cmd_mutate(args) -> int:
    obj = load(args.file)
    parts = args.site.split(",")
    try:
        site = (parts[0],) + tuple(int(p) for p in parts[1:])
    except ValueError:
        print(f"error: site indices must be integers: {args.site!r}", file=sys.stderr)
        return 2
    _output(mutate(obj, site, parse_rational(args.delta)), args.out)
    return 0


def cmd_compose(args) -> int:
    f, g = load(args.f), load(args.g)
    if not isinstance(f, RBLInfinityHom) or not isinstance(g, RBLInfinityHom):
        print("error: compose expects two rb-hom documents", file=sys.stderr)
        return 2
    _output(compose_rb_homs(g, f), args.out)  # f first, then g
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rblie",
        description="Exact verification and constructions for Rota-Baxter "
                    "structures, their two-term homotopy versions, and "
                    "crossed modules.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every defining identity of a document")
    v.add_argument("file")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("construct", help="apply a construction to a document")
    c.add_argument("name", choices=sorted(_CONSTRUCTIONS))
    c.add_argument("file")
    c.add_argument("-o", "--out")
    c.set_defaults(fn=cmd_construct)

    r = sub.add_parser("roundtrip",
                       help="extract a structure back out of its categorified "
                            "view and compare entrywise")
    r.add_argument("file")
    r.add_argument("--workers", type=int, default=1)
    r.set_defaults(fn=cmd_roundtrip)

    s = sub.add_parser("search-rb", help="enumerate operators over a coefficient grid")
    s.add_argument("file")
    s.add_argument("--coeffs", default="-1,0,1",
                   help="comma-separated rationals; use --coeffs=-1,0,1 "
                        "when the list starts with a minus sign")
    s.add_argument("--budget", type=int, default=10_000_000)
    s.add_argument("-o", "--out")
    s.set_defaults(fn=cmd_search_rb)

    m = sub.add_parser("mutate", help="change one tensor entry (plus symmetry partners)")
    m.add_argument("file")
    m.add_argument("--site", required=True,
                   help="tensor name and indices, e.g. bracket,0,0,1")
    m.add_argument("--delta", required=True, help="rational, e.g. 1 or -2/3")
    m.add_argument("-o", "--out")
    m.set_defaults(fn=cmd_mutate)

    k = sub.add_parser("compose", help="compose two operator homomorphisms (first, then second)")
    k.add_argument("f")
    k.add_argument("g")
    k.add_argument("-o", "--out")
    k.set_defaults(fn=cmd_compose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except StructureError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
