"""Two-term homotopy layer: chain complexes g1 -> g0 carrying a graded
bracket l2, a homotopy l3, Rota-Baxter triples (R0, R1, R2), and both kinds
of homomorphisms.

Degree bookkeeping: l2 is stored as two tensors (l2_00 on g0 x g0 -> g0 and
l2_01 on g0 x g1 -> g1); the bracket of two degree-one elements vanishes
because no degree-two component exists.  The skew extension across degrees
is l2(u, x) = -l2(x, u) for x in g0, u in g1.

Condition ids used in reports:
  chain, skew-l2, alt-l3, a, b, c, d          (structures)
  skew-r2, rb1, rb2, rb3                      (operator triples)
  skew-phi2, h1, h2, h3                       (homomorphisms)
  rbh1, rbh2, rbh3                            (operator homomorphisms)
Condition `a` has two displayed equations; the first index of its violation
tuple selects the equation (0: differential compatibility on g0 x g1,
1: unambiguity of the induced degree-one bracket).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import (InternalInvariantBroken, NotChainMap, ShapeMismatch,
                     SourceTargetMismatch)
from .report import Check, VerificationReport, run_checks
from .tensors import (BilinearMap, LinearMap, TrilinearMap, Vec,
                      perm_sign, solve_exact, vadd, vbasis, vneg, vsub,
                      vzero)
from .liealg import skew_checks


@dataclass(frozen=True)
class TwoTermComplex:
    dim0: int
    dim1: int
    l1: LinearMap  # g1 -> g0

    def __post_init__(self):
        if (self.l1.rows, self.l1.cols) != (self.dim0, self.dim1):
            raise ShapeMismatch("differential must be a dim0 x dim1 matrix")


@dataclass(frozen=True)
class TwoTermLInfinity:
    complex: TwoTermComplex
    l2_00: BilinearMap   # g0 x g0 -> g0, skew
    l2_01: BilinearMap   # g0 x g1 -> g1
    l3: TrilinearMap     # alt, three copies of g0 -> g1

    def __post_init__(self):
        d0, d1 = self.complex.dim0, self.complex.dim1
        if (self.l2_00.dim_a, self.l2_00.dim_b, self.l2_00.dim_out) != (d0, d0, d0):
            raise ShapeMismatch("l2_00 must map g0 x g0 -> g0")
        if (self.l2_01.dim_a, self.l2_01.dim_b, self.l2_01.dim_out) != (d0, d1, d1):
            raise ShapeMismatch("l2_01 must map g0 x g1 -> g1")
        if (self.l3.dim, self.l3.dim_out) != (d0, d1):
            raise ShapeMismatch("l3 must map three copies of g0 into g1")

    @property
    def dim0(self) -> int:
        return self.complex.dim0

    @property
    def dim1(self) -> int:
        return self.complex.dim1

    def l1v(self, u: Vec) -> Vec:
        return self.complex.l1.apply(u)

    def l2_obj(self, x: Vec, y: Vec) -> Vec:
        return self.l2_00.apply(x, y)

    def l2_act(self, x: Vec, u: Vec) -> Vec:
        return self.l2_01.apply(x, u)

    def l3v(self, x: Vec, y: Vec, z: Vec) -> Vec:
        return self.l3.apply(x, y, z)


@dataclass(frozen=True)
class RBTriple:
    r0: LinearMap          # g0 -> g0
    r1: LinearMap          # g1 -> g1
    r2: BilinearMap        # g0 x g0 -> g1, skew


@dataclass(frozen=True)
class TwoTermRBLInfinity:
    linf: TwoTermLInfinity
    rb: RBTriple

    def __post_init__(self):
        d0, d1 = self.linf.dim0, self.linf.dim1
        if (self.rb.r0.rows, self.rb.r0.cols) != (d0, d0):
            raise ShapeMismatch("R0 must be square on g0")
        if (self.rb.r1.rows, self.rb.r1.cols) != (d1, d1):
            raise ShapeMismatch("R1 must be square on g1")
        if (self.rb.r2.dim_a, self.rb.r2.dim_b, self.rb.r2.dim_out) != (d0, d0, d1):
            raise ShapeMismatch("R2 must map g0 x g0 -> g1")

    @property
    def is_strict(self) -> bool:
        return self.linf.l3.is_zero() and self.rb.r2.is_zero()


def alt_checks(t: TrilinearMap, condition: str = "alt-l3") -> list[Check]:
    """value(i,j,k) must equal sign * value(sorted(i,j,k)); repeats force 0."""
    checks: list[Check] = []
    n = t.dim

    def residual(i, j, k):
        def go():
            if len({i, j, k}) < 3:
                return t.on_basis(i, j, k)
            order = tuple(sorted((i, j, k)))
            pos = {v: p for p, v in enumerate(order)}
            sign = perm_sign((pos[i], pos[j], pos[k]))
            expect = tuple(sign * c for c in t.on_basis(*order))
            return vsub(t.on_basis(i, j, k), expect)
        return go

    for i, j, k in product(range(n), repeat=3):
        if i < j < k:
            continue
        checks.append((condition, (i, j, k), residual(i, j, k)))
    return checks


def two_term_checks(L: TwoTermLInfinity) -> list[Check]:
    d0, d1 = L.dim0, L.dim1
    e0 = lambda i: vbasis(d0, i)
    e1 = lambda a: vbasis(d1, a)

    def a_first(i, a):
        x, u = e0(i), e1(a)
        return lambda: vsub(L.l1v(L.l2_act(x, u)), L.l2_obj(x, L.l1v(u)))

    def a_second(a, b):
        u, v = e1(a), e1(b)
        return lambda: vadd(L.l2_act(L.l1v(u), v), L.l2_act(L.l1v(v), u))

    def b_res(i, j, k):
        x, y, z = e0(i), e0(j), e0(k)
        return lambda: vsub(
            L.l1v(L.l3v(x, y, z)),
            vadd(L.l2_obj(x, L.l2_obj(y, z)),
                 L.l2_obj(z, L.l2_obj(x, y)),
                 L.l2_obj(y, L.l2_obj(z, x))))

    def c_res(i, j, a):
        x, y, u = e0(i), e0(j), e1(a)
        rhs = vadd(L.l2_act(x, L.l2_act(y, u)),
                   vneg(L.l2_act(L.l2_obj(x, y), u)),
                   vneg(L.l2_act(y, L.l2_act(x, u))))
        return lambda: vsub(L.l3.apply(x, y, L.l1v(u)), rhs)

    def d_res(i, j, k, l):
        return lambda: quadruple_identity_residual(L, i, j, k, l)

    checks = skew_checks(L.l2_00, "skew-l2") + alt_checks(L.l3)
    checks += [("a", (0, i, a), a_first(i, a)) for i in range(d0) for a in range(d1)]
    checks += [("a", (1, a, b), a_second(a, b))
               for a in range(d1) for b in range(a, d1)]
    checks += [("b", (i, j, k), b_res(i, j, k))
               for i, j, k in combinations(range(d0), 3)]
    checks += [("c", (i, j, a), c_res(i, j, a))
               for i, j in combinations(range(d0), 2) for a in range(d1)]
    checks += [("d", idx, d_res(*idx)) for idx in combinations(range(d0), 4)]
    return checks


def verify_2term(L: TwoTermLInfinity, workers: int = 1) -> VerificationReport:
    """Flag consistency plus the four defining conditions of the bracket,
    the homotopy, and their compatibilities."""
    return run_checks(two_term_checks(L), workers)


def quadruple_identity_residual(L: TwoTermLInfinity,
                                i: int, j: int, k: int, l: int) -> Vec:
    """The four-argument homotopy-Jacobi identity at one ordered basis
    quadruple (signs follow the standard unshuffle convention)."""
    xs = [vbasis(L.dim0, t) for t in (i, j, k, l)]
    total = vzero(L.dim1)
    for p in range(4):
        rest = [xs[q] for q in range(4) if q != p]
        term = L.l2_act(xs[p], L.l3v(*rest))
        total = vadd(total, term if p % 2 == 0 else vneg(term))
    for p, q in combinations(range(4), 2):
        rest = [xs[t] for t in range(4) if t not in (p, q)]
        term = L.l3.apply(L.l2_obj(xs[p], xs[q]), *rest)
        total = vadd(total, term if (p + q) % 2 == 0 else vneg(term))
    return total


def rb3_residual(G: TwoTermRBLInfinity, i: int, j: int, k: int) -> Vec:
    """Cyclic homotopy Rota-Baxter condition at one ordered basis triple.

    The three grouped summands cycle jointly over (x1,x2,x3); the trailing
    homotopy term sits outside the cycle.
    """
    L, rb = G.linf, G.rb
    d0 = L.dim0
    r0 = rb.r0.apply
    xs = (vbasis(d0, i), vbasis(d0, j), vbasis(d0, k))

    def grouped(x1, x2, x3):
        t1 = L.l2_act(r0(x1), rb.r2.apply(x2, x3))
        t2 = rb.r2.apply(x3, vsub(L.l2_obj(r0(x1), x2), L.l2_obj(r0(x2), x1)))
        inner = vsub(vneg(L.l2_act(x1, rb.r2.apply(x2, x3))),
                     L.l3v(r0(x2), r0(x3), x1))
        return vadd(t1, t2, rb.r1.apply(inner))

    total = vadd(grouped(*xs),
                 grouped(xs[1], xs[2], xs[0]),
                 grouped(xs[2], xs[0], xs[1]))
    return vadd(total, L.l3v(r0(xs[0]), r0(xs[1]), r0(xs[2])))


def rb2_residual(G: TwoTermRBLInfinity, a: int, i: int) -> Vec:
    """Degree-one operator condition at one basis pair (g1, g0)."""
    L, rb = G.linf, G.rb
    u, x = vbasis(L.dim1, a), vbasis(L.dim0, i)
    r0, r1 = rb.r0.apply, rb.r1.apply
    lhs = vadd(r1(vadd(vneg(L.l2_act(x, r1(u))), vneg(L.l2_act(r0(x), u)))),
               L.l2_act(r0(x), r1(u)))
    return vsub(lhs, rb.r2.apply(L.l1v(u), x))


def rb_triple_checks(G: TwoTermRBLInfinity) -> list[Check]:
    L, rb = G.linf, G.rb
    d0, d1 = L.dim0, L.dim1
    r0, r1 = rb.r0.apply, rb.r1.apply

    def chain(a):
        u = vbasis(d1, a)
        return lambda: vsub(L.l1v(r1(u)), r0(L.l1v(u)))

    def rb1(i, j):
        x, y = vbasis(d0, i), vbasis(d0, j)

        def go():
            lhs = vsub(r0(vadd(L.l2_obj(r0(x), y), L.l2_obj(x, r0(y)))),
                       L.l2_obj(r0(x), r0(y)))
            return vsub(lhs, L.l1v(rb.r2.apply(x, y)))
        return go

    checks: list[Check] = [("chain", (a,), chain(a)) for a in range(d1)]
    checks += skew_checks(rb.r2, "skew-r2")
    checks += [("rb1", (i, j), rb1(i, j)) for i, j in combinations(range(d0), 2)]
    checks += [("rb2", (a, i), (lambda t: (lambda: rb2_residual(G, *t)))((a, i)))
               for a in range(d1) for i in range(d0)]
    checks += [("rb3", idx, (lambda t: (lambda: rb3_residual(G, *t)))(idx))
               for idx in product(range(d0), repeat=3)]
    return checks


def verify_rb_triple(G: TwoTermRBLInfinity, workers: int = 1) -> VerificationReport:
    """Chain-map property and the three operator conditions; assumes the
    underlying two-term structure already passed `verify_2term`."""
    return run_checks(rb_triple_checks(G), workers)


def verify_rb_2term(G: TwoTermRBLInfinity, workers: int = 1) -> VerificationReport:
    return VerificationReport.merge(verify_2term(G.linf, workers),
                                    verify_rb_triple(G, workers))


@dataclass(frozen=True)
class CompletionFailure:
    stage: str  # "condition-1" when the defect misses the image of l1
    pair: tuple[int, int] | None
    report: VerificationReport | None


def complete_rb_triple(L: TwoTermLInfinity, r0: LinearMap,
                       r1: LinearMap) -> RBTriple | CompletionFailure:
    """Solve the first operator condition for R2, then verify the rest.

    The linear system per basis pair may be underdetermined; free
    coordinates (lexicographic pivot order) are pinned to zero so the
    completion is deterministic.
    """
    d0, d1 = L.dim0, L.dim1
    for a in range(d1):
        u = vbasis(d1, a)
        if L.l1v(r1.apply(u)) != r0.apply(L.l1v(u)):
            raise NotChainMap(f"(R0, R1) do not commute with the differential at column {a}")
    values: dict[tuple[int, int], Vec] = {}
    for i, j in combinations(range(d0), 2):
        x, y = vbasis(d0, i), vbasis(d0, j)
        defect = vsub(r0.apply(vadd(L.l2_obj(r0.apply(x), y), L.l2_obj(x, r0.apply(y)))),
                      L.l2_obj(r0.apply(x), r0.apply(y)))
        sol = solve_exact(L.complex.l1, defect)
        if sol is None:
            return CompletionFailure("condition-1", (i, j), None)
        values[(i, j)] = sol
    r2 = BilinearMap.from_map(d0, d0, d1, values, skew=True)
    candidate = TwoTermRBLInfinity(L, RBTriple(r0, r1, r2))
    report = verify_rb_triple(candidate)
    if not report.ok:
        return CompletionFailure("conditions-2-3", None, report)
    return candidate.rb


@dataclass(frozen=True)
class LInfinityHom:
    source: TwoTermLInfinity
    target: TwoTermLInfinity
    phi0: LinearMap   # g0 -> g0'
    phi1: LinearMap   # g1 -> g1'
    phi2: BilinearMap  # g0 x g0 -> g1', skew

    def __post_init__(self):
        s, t = self.source, self.target
        if (self.phi0.rows, self.phi0.cols) != (t.dim0, s.dim0):
            raise ShapeMismatch("phi0 must map source g0 to target g0")
        if (self.phi1.rows, self.phi1.cols) != (t.dim1, s.dim1):
            raise ShapeMismatch("phi1 must map source g1 to target g1")
        if (self.phi2.dim_a, self.phi2.dim_b, self.phi2.dim_out) != (s.dim0, s.dim0, t.dim1):
            raise ShapeMismatch("phi2 must map source g0 pairs to target g1")


@dataclass(frozen=True)
class RBLInfinityHom:
    source: TwoTermRBLInfinity
    target: TwoTermRBLInfinity
    hom: LInfinityHom  # between the underlying two-term structures
    phi3: LinearMap    # g0 -> g1'

    def __post_init__(self):
        if self.hom.source != self.source.linf or self.hom.target != self.target.linf:
            raise ShapeMismatch("homomorphism endpoints disagree with the given structures")
        s, t = self.hom.source, self.hom.target
        if (self.phi3.rows, self.phi3.cols) != (t.dim1, s.dim0):
            raise ShapeMismatch("phi3 must map source g0 to target g1")


def hom_checks(f: LInfinityHom) -> list[Check]:
    src, tgt = f.source, f.target
    d0, d1 = src.dim0, src.dim1
    p0, p1 = f.phi0.apply, f.phi1.apply
    p2 = f.phi2.apply
    e0 = lambda i: vbasis(d0, i)
    e1 = lambda a: vbasis(d1, a)

    def chain(a):
        u = e1(a)
        return lambda: vsub(tgt.l1v(p1(u)), p0(src.l1v(u)))

    def h1(i, j):
        x, y = e0(i), e0(j)

        def go():
            return vsub(tgt.l1v(p2(x, y)),
                        vsub(p0(src.l2_obj(x, y)), tgt.l2_obj(p0(x), p0(y))))
        return go

    def h2(i, a):
        x, u = e0(i), e1(a)

        def go():
            return vsub(p2(x, src.l1v(u)),
                        vsub(p1(src.l2_act(x, u)), tgt.l2_act(p0(x), p1(u))))
        return go

    def h3(i, j, k):
        x, y, z = e0(i), e0(j), e0(k)

        def go():
            lhs = vadd(vneg(tgt.l2_act(p0(z), p2(x, y))),
                       p2(src.l2_obj(x, y), z),
                       p1(src.l3v(x, y, z)))
            rhs = vadd(tgt.l3v(p0(x), p0(y), p0(z)),
                       tgt.l2_act(p0(x), p2(y, z)),
                       vneg(tgt.l2_act(p0(y), p2(x, z))),
                       p2(x, src.l2_obj(y, z)),
                       p2(src.l2_obj(x, z), y))
            return vsub(lhs, rhs)
        return go

    checks = skew_checks(f.phi2, "skew-phi2")
    checks += [("chain", (a,), chain(a)) for a in range(d1)]
    checks += [("h1", (i, j), h1(i, j)) for i, j in combinations(range(d0), 2)]
    checks += [("h2", (i, a), h2(i, a)) for i in range(d0) for a in range(d1)]
    checks += [("h3", idx, h3(*idx)) for idx in product(range(d0), repeat=3)]
    return checks


def verify_hom(f: LInfinityHom, workers: int = 1) -> VerificationReport:
    """Chain-map property and the three homomorphism conditions; assumes
    both endpoints already passed `verify_2term`."""
    return run_checks(hom_checks(f), workers)


def rbh3_residual(f: RBLInfinityHom, i: int, j: int) -> Vec:
    """Operator-compatibility condition of a homomorphism at one ordered
    basis pair.  The bracket of two phi3 values vanishes by degree; the
    two-argument phi3 terms are read as phi3 applied to the bracket."""
    src, tgt = f.source.linf, f.target.linf
    p0, p1 = f.hom.phi0.apply, f.hom.phi1.apply
    p2, p3 = f.hom.phi2.apply, f.phi3.apply
    r0, r1p = f.source.rb.r0.apply, f.target.rb.r1.apply
    x, y = vbasis(src.dim0, i), vbasis(src.dim0, j)
    lhs = vadd(f.target.rb.r2.apply(p0(x), p0(y)),
               r1p(vneg(tgt.l2_act(p0(y), p3(x)))),
               r1p(tgt.l2_act(p0(x), p3(y))),
               r1p(p2(r0(x), y)),
               r1p(p2(x, r0(y))),
               p3(src.l2_obj(r0(x), y)),
               p3(src.l2_obj(x, r0(y))))
    rhs = vadd(p2(r0(x), r0(y)), p1(f.source.rb.r2.apply(x, y)))
    return vsub(lhs, rhs)


def rb_hom_checks(f: RBLInfinityHom) -> list[Check]:
    src, tgt = f.source.linf, f.target.linf
    d0, d1 = src.dim0, src.dim1
    p0, p1, p3 = f.hom.phi0.apply, f.hom.phi1.apply, f.phi3.apply

    def rbh1(i):
        x = vbasis(d0, i)
        return lambda: vsub(tgt.l1v(p3(x)),
                            vadd(vneg(f.target.rb.r0.apply(p0(x))),
                                 p0(f.source.rb.r0.apply(x))))

    def rbh2(a):
        u = vbasis(d1, a)
        return lambda: vsub(p3(src.l1v(u)),
                            vsub(p1(f.source.rb.r1.apply(u)),
                                 f.target.rb.r1.apply(p1(u))))

    checks: list[Check] = [("rbh1", (i,), rbh1(i)) for i in range(d0)]
    checks += [("rbh2", (a,), rbh2(a)) for a in range(d1)]
    checks += [("rbh3", (i, j),
                (lambda t: (lambda: rbh3_residual(f, *t)))((i, j)))
               for i, j in product(range(d0), repeat=2)]
    return checks


def verify_rb_hom(f: RBLInfinityHom, workers: int = 1) -> VerificationReport:
    """Underlying homomorphism conditions plus the three operator
    compatibilities."""
    return run_checks(hom_checks(f.hom) + rb_hom_checks(f), workers)


def identity_rb_hom(G: TwoTermRBLInfinity) -> RBLInfinityHom:
    d0, d1 = G.linf.dim0, G.linf.dim1
    return RBLInfinityHom(
        G, G,
        LInfinityHom(G.linf, G.linf, LinearMap.identity(d0), LinearMap.identity(d1),
                     BilinearMap.zero(d0, d0, d1, skew=True)),
        LinearMap.zero(d1, d0))


def compose_rb_homs(g: RBLInfinityHom, f: RBLInfinityHom) -> RBLInfinityHom:
    """g after f; structural endpoint equality is required.

    Output data: (g o f)_2(x, y) = g1(f2(x, y)) + g2(f0 x, f0 y) and
    (g o f)_3(x) = g1(f3(x)) + g3(f0 x).  When both inputs verify, the
    output is re-verified.
    """
    if f.target != g.source:
        raise SourceTargetMismatch("cannot compose: intermediate structures differ")
    src, tgt = f.source.linf, g.target.linf
    d0 = src.dim0
    phi0 = g.hom.phi0.compose(f.hom.phi0)
    phi1 = g.hom.phi1.compose(f.hom.phi1)
    values = {}
    for i in range(d0):
        for j in range(d0):
            x, y = vbasis(d0, i), vbasis(d0, j)
            values[(i, j)] = vadd(
                g.hom.phi1.apply(f.hom.phi2.apply(x, y)),
                g.hom.phi2.apply(f.hom.phi0.apply(x), f.hom.phi0.apply(y)))
    phi2 = BilinearMap.from_map(d0, d0, tgt.dim1, values, skew=True)
    phi3_cols = [vadd(g.hom.phi1.apply(f.phi3.column(i)),
                      g.phi3.apply(f.hom.phi0.column(i)))
                 for i in range(d0)]
    phi3 = LinearMap.from_columns(phi3_cols, rows=tgt.dim1)
    out = RBLInfinityHom(f.source, g.target,
                         LInfinityHom(src, tgt, phi0, phi1, phi2), phi3)
    if verify_rb_hom(f).ok and verify_rb_hom(g).ok and not verify_rb_hom(out).ok:
        raise InternalInvariantBroken("composite of verified homomorphisms failed verification")
    return out
