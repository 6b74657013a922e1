"""Classical layer: Lie algebras, Rota-Baxter operators, pre-Lie algebras,
representations, duals and semidirect products.

Verifiers return full violation lists (`VerificationReport`); constructions
re-verify their outputs and raise `InternalInvariantBroken` on failure.
All types are immutable values; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InternalInvariantBroken, ShapeMismatch
from .report import Check, VerificationReport, run_checks
from .tensors import (BilinearMap, LinearMap, Vec, vadd, vbasis, vneg, vsub,
                      vzero)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    bracket: BilinearMap  # skew-flagged, dim x dim -> dim
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        b = self.bracket
        if (b.dim_a, b.dim_b, b.dim_out) != (self.dim, self.dim, self.dim):
            raise ShapeMismatch("bracket tensor does not match algebra dimension")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ShapeMismatch("label count does not match dimension")

    @staticmethod
    def abelian(dim: int) -> "LieAlgebra":
        return LieAlgebra(dim, BilinearMap.zero(dim, dim, dim, skew=True))

    @staticmethod
    def from_brackets(dim: int, values: dict[tuple[int, int], Vec],
                      labels: tuple[str, ...] | None = None) -> "LieAlgebra":
        return LieAlgebra(dim, BilinearMap.from_map(dim, dim, dim, values, skew=True), labels)

    def bracket_vec(self, u: Vec, v: Vec) -> Vec:
        return self.bracket.apply(u, v)

    def ad(self, i: int) -> LinearMap:
        """Matrix of ad(e_i) = [e_i, -]."""
        return self.bracket.curry_left(vbasis(self.dim, i))


@dataclass(frozen=True)
class RotaBaxterLieAlgebra:
    base: LieAlgebra
    r: LinearMap

    def __post_init__(self):
        if (self.r.rows, self.r.cols) != (self.base.dim, self.base.dim):
            raise ShapeMismatch("operator matrix does not match algebra dimension")

    @property
    def dim(self) -> int:
        return self.base.dim


@dataclass(frozen=True)
class PreLieAlgebra:
    dim: int
    mult: BilinearMap  # not skew

    def __post_init__(self):
        m = self.mult
        if (m.dim_a, m.dim_b, m.dim_out) != (self.dim, self.dim, self.dim):
            raise ShapeMismatch("multiplication tensor does not match dimension")

    def mult_vec(self, u: Vec, v: Vec) -> Vec:
        return self.mult.apply(u, v)


@dataclass(frozen=True)
class RBRepresentation:
    algebra: RotaBaxterLieAlgebra
    dim_v: int
    rho: tuple[LinearMap, ...]  # one matrix per basis vector of g
    cal_r: LinearMap            # operator on V

    def __post_init__(self):
        if len(self.rho) != self.algebra.dim:
            raise ShapeMismatch("need one action matrix per algebra basis vector")
        for m in self.rho:
            if (m.rows, m.cols) != (self.dim_v, self.dim_v):
                raise ShapeMismatch("action matrix does not match module dimension")
        if (self.cal_r.rows, self.cal_r.cols) != (self.dim_v, self.dim_v):
            raise ShapeMismatch("module operator does not match module dimension")

    def rho_of(self, x: Vec) -> LinearMap:
        """Action matrix of an arbitrary algebra element (linear extension)."""
        out = LinearMap.zero(self.dim_v, self.dim_v)
        for i, c in enumerate(x):
            if c != 0:
                out = out.add(self.rho[i].scale(c))
        return out


def skew_checks(b: BilinearMap, condition: str = "skew") -> list[Check]:
    def residual(i, j):
        return lambda: vadd(b.on_basis(i, j), b.on_basis(j, i))
    return [(condition, (i, j), residual(i, j))
            for i in range(b.dim_a) for j in range(i, b.dim_b)]


def lie_checks(alg: LieAlgebra) -> list[Check]:
    br = alg.bracket_vec
    n = alg.dim

    def jacobi(i, j, k):
        x, y, z = vbasis(n, i), vbasis(n, j), vbasis(n, k)
        return lambda: vadd(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))

    checks = skew_checks(alg.bracket)
    checks += [("jacobi", (i, j, k), jacobi(i, j, k))
               for i, j, k in combinations(range(n), 3)]
    return checks


def verify_lie(alg: LieAlgebra, workers: int = 1) -> VerificationReport:
    """Skew-symmetry on basis pairs, Jacobi on basis triple classes."""
    return run_checks(lie_checks(alg), workers)


def rb_checks(rba: RotaBaxterLieAlgebra) -> list[Check]:
    br, r = rba.base.bracket_vec, rba.r.apply
    n = rba.dim

    def residual(i, j):
        x, y = vbasis(n, i), vbasis(n, j)
        return lambda: vsub(br(r(x), r(y)), r(vadd(br(r(x), y), br(x, r(y)))))

    return [("rota-baxter", (i, j), residual(i, j))
            for i, j in combinations(range(n), 2)]


def verify_rb(rba: RotaBaxterLieAlgebra, workers: int = 1) -> VerificationReport:
    """The weight-zero operator identity on basis pair classes; assumes the
    base already passed `verify_lie`."""
    return run_checks(rb_checks(rba), workers)


def prelie_checks(p: PreLieAlgebra) -> list[Check]:
    m = p.mult_vec
    n = p.dim

    def assoc(x, y, z):
        return vsub(m(m(x, y), z), m(x, m(y, z)))

    def residual(i, j, k):
        x, y, z = vbasis(n, i), vbasis(n, j), vbasis(n, k)
        return lambda: vsub(assoc(x, y, z), assoc(y, x, z))

    return [("pre-lie", (i, j, k), residual(i, j, k))
            for i, j in combinations(range(n), 2) for k in range(n)]


def verify_prelie(p: PreLieAlgebra, workers: int = 1) -> VerificationReport:
    """Associator symmetry in the first two arguments, exactly."""
    return run_checks(prelie_checks(p), workers)


def representation_checks(rep: RBRepresentation) -> list[Check]:
    alg = rep.algebra
    n = alg.dim
    cal = rep.cal_r

    def hom_residual(i, j):
        def go():
            lhs = rep.rho_of(alg.base.bracket.on_basis(i, j))
            rhs = rep.rho[i].compose(rep.rho[j]).sub(rep.rho[j].compose(rep.rho[i]))
            return lhs.sub(rhs).flat()
        return go

    def rb_residual(i):
        def go():
            rx = rep.rho_of(alg.r.column(i))
            lhs = rx.compose(cal)
            rhs = cal.compose(rx).add(cal.compose(rep.rho[i]).compose(cal))
            return lhs.sub(rhs).flat()
        return go

    checks: list[Check] = [("rep-hom", (i, j), hom_residual(i, j))
                           for i, j in combinations(range(n), 2)]
    checks += [("rep-rb", (i,), rb_residual(i)) for i in range(n)]
    return checks


def verify_representation(rep: RBRepresentation, workers: int = 1) -> VerificationReport:
    """Lie-action property plus the module-operator compatibility identity."""
    return run_checks(representation_checks(rep), workers)


def _require_ok(report: VerificationReport, what: str):
    if not report.ok:
        raise InternalInvariantBroken(
            f"{what} failed verification: " + "; ".join(report.lines()[:4]))


def prelie_from_rb(rba: RotaBaxterLieAlgebra) -> PreLieAlgebra:
    """x * y = [R(x), y]; the result is re-verified as pre-Lie."""
    n = rba.dim
    values = {(i, j): rba.base.bracket_vec(rba.r.column(i), vbasis(n, j))
              for i in range(n) for j in range(n)}
    out = PreLieAlgebra(n, BilinearMap.from_map(n, n, n, values))
    _require_ok(verify_prelie(out), "pre-Lie product from operator")
    return out


def subadjacent_lie(p: PreLieAlgebra) -> LieAlgebra:
    """Commutator bracket [x,y] = x*y - y*x of a pre-Lie product."""
    n = p.dim
    values = {(i, j): vsub(p.mult.on_basis(i, j), p.mult.on_basis(j, i))
              for i in range(n) for j in range(n)}
    out = LieAlgebra(n, BilinearMap.from_map(n, n, n, values, skew=True))
    _require_ok(verify_lie(out), "sub-adjacent commutator bracket")
    return out


def derived_bracket(rba: RotaBaxterLieAlgebra) -> LieAlgebra:
    """[x,y] = [R(x),y] + [x,R(y)]; R is certified a homomorphism from the
    derived bracket back to the original one."""
    out = subadjacent_lie(prelie_from_rb(rba))
    n = rba.dim
    for i, j in combinations(range(n), 2):
        lhs = rba.r.apply(out.bracket.on_basis(i, j))
        rhs = rba.base.bracket_vec(rba.r.column(i), rba.r.column(j))
        if lhs != rhs:
            raise InternalInvariantBroken(
                f"operator is not a homomorphism off the derived bracket at ({i},{j})")
    return out


def adjoint_representation(rba: RotaBaxterLieAlgebra) -> RBRepresentation:
    """(g; ad, R) with the algebra acting on itself."""
    rho = tuple(rba.base.ad(i) for i in range(rba.dim))
    out = RBRepresentation(rba, rba.dim, rho, rba.r)
    _require_ok(verify_representation(out), "adjoint representation")
    return out


def dual_representation(rep: RBRepresentation) -> RBRepresentation:
    """(V*; -rho^T, -cal^T); applying it twice returns the original data."""
    out = RBRepresentation(rep.algebra, rep.dim_v,
                           tuple(m.transpose().neg() for m in rep.rho),
                           rep.cal_r.transpose().neg())
    _require_ok(verify_representation(out), "dual representation")
    return out


def coadjoint_representation(rba: RotaBaxterLieAlgebra) -> RBRepresentation:
    return dual_representation(adjoint_representation(rba))


def semidirect_product(rep: RBRepresentation) -> RotaBaxterLieAlgebra:
    """Algebra on g (+) V with [x+u, y+v] = [x,y] + x.v - y.u and the
    block-diagonal operator; the projection onto g is checked to be a
    homomorphism of the operator algebras."""
    alg = rep.algebra
    n, m = alg.dim, rep.dim_v
    dim = n + m
    values: dict[tuple[int, int], Vec] = {}
    for i in range(n):
        for j in range(n):
            values[(i, j)] = vconcat_pad(alg.base.bracket.on_basis(i, j), m, front=False)
    for i in range(n):
        for b in range(m):
            action = rep.rho[i].column(b)
            values[(i, n + b)] = vconcat_pad(action, n, front=True)
            values[(n + b, i)] = vconcat_pad(vneg(action), n, front=True)
    bracket = BilinearMap.from_map(dim, dim, dim, values, skew=True)
    op_cols = [vconcat_pad(alg.r.column(i), m, front=False) for i in range(n)]
    op_cols += [vconcat_pad(rep.cal_r.column(b), n, front=True) for b in range(m)]
    out = RotaBaxterLieAlgebra(LieAlgebra(dim, bracket), LinearMap.from_columns(op_cols, rows=dim))
    _require_ok(verify_lie(out.base), "semidirect bracket")
    _require_ok(verify_rb(out), "semidirect operator")
    for i in range(dim):
        for j in range(dim):
            proj = out.base.bracket.on_basis(i, j)[:n]
            xi = vbasis(dim, i)[:n]
            xj = vbasis(dim, j)[:n]
            if proj != alg.base.bracket_vec(xi, xj):
                raise InternalInvariantBroken("projection onto g is not a bracket homomorphism")
    for i in range(dim):
        if out.r.column(i)[:n] != alg.r.apply(vbasis(dim, i)[:n]):
            raise InternalInvariantBroken("projection onto g does not intertwine the operators")
    return out


def vconcat_pad(v: Vec, pad: int, front: bool) -> Vec:
    z = vzero(pad)
    return z + tuple(v) if front else tuple(v) + z
