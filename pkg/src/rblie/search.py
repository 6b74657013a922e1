"""Brute-force enumeration of Rota-Baxter operators over finite coefficient
grids, and single-site mutation of verified structures.

Enumeration is exhaustive and deterministic: coefficients are sorted
ascending and candidate matrices are visited in lexicographic row-major
order, so re-runs (and any split of the candidate range across workers)
produce the same list.  Candidates are rejected at the first violated
bracket pair.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, permutations, product

from .errors import BadSite, BudgetExceeded
from .liealg import LieAlgebra, PreLieAlgebra, RotaBaxterLieAlgebra
from .tensors import (BilinearMap, LinearMap, TrilinearMap, frac, perm_sign,
                      vadd, vbasis)
from .twoterm import (LInfinityHom, RBLInfinityHom, TwoTermComplex,
                      TwoTermLInfinity, TwoTermRBLInfinity)
from .crossed import LieCrossedModule, PreLieCrossedModule, RBLieCrossedModule


@dataclass(frozen=True)
class SearchSpec:
    target: LieAlgebra
    coeffs: tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1))
    mask: tuple[tuple[bool, ...], ...] | None = None  # True = entry is free
    budget: int = 10_000_000

    def __post_init__(self):
        if not self.coeffs:
            raise BadSite("coefficient set must be non-empty")
        n = self.target.dim
        if self.mask is not None and (
                len(self.mask) != n or any(len(r) != n for r in self.mask)):
            raise BadSite("mask must be an n x n boolean grid")

    def free_sites(self) -> list[tuple[int, int]]:
        n = self.target.dim
        return [(r, c) for r in range(n) for c in range(n)
                if self.mask is None or self.mask[r][c]]

    def candidate_count(self) -> int:
        return len(set(self.coeffs)) ** len(self.free_sites())


def _is_rb(alg: LieAlgebra, r: LinearMap) -> bool:
    n = alg.dim
    for i, j in combinations(range(n), 2):
        x, y = vbasis(n, i), vbasis(n, j)
        lhs = alg.bracket_vec(r.column(i), r.column(j))
        rhs = r.apply(vadd(alg.bracket_vec(r.column(i), y),
                           alg.bracket_vec(x, r.column(j))))
        if lhs != rhs:
            return False
    return True


def enumerate_rb_operators(spec: SearchSpec) -> list[RotaBaxterLieAlgebra]:
    """All operators over the coefficient grid that satisfy the weight-zero
    identity, in lexicographic matrix order."""
    count = spec.candidate_count()
    if count > spec.budget:
        raise BudgetExceeded(
            f"{count} candidates exceed the budget of {spec.budget}", count)
    alg = spec.target
    n = alg.dim
    coeffs = tuple(sorted(set(spec.coeffs)))
    sites = spec.free_sites()
    found = []
    for assignment in product(coeffs, repeat=len(sites)):
        grid = [[frac(0)] * n for _ in range(n)]
        for (r, c), v in zip(sites, assignment):
            grid[r][c] = v
        candidate = LinearMap.from_rows(grid)
        if _is_rb(alg, candidate):
            found.append(RotaBaxterLieAlgebra(alg, candidate))
    return found


def _mutate_linear(m: LinearMap, idx: tuple[int, ...], delta: Fraction) -> LinearMap:
    if len(idx) != 2:
        raise BadSite("linear map sites take two indices")
    r, c = idx
    if not (0 <= r < m.rows and 0 <= c < m.cols):
        raise BadSite(f"index ({r},{c}) outside a {m.rows}x{m.cols} map")
    rows = [list(row) for row in m.entries]
    rows[r][c] += delta
    return LinearMap.from_rows(rows)


def _mutate_bilinear(b: BilinearMap, idx: tuple[int, ...], delta: Fraction) -> BilinearMap:
    if len(idx) != 3:
        raise BadSite("bilinear map sites take three indices")
    k, i, j = idx
    if not (0 <= k < b.dim_out and 0 <= i < b.dim_a and 0 <= j < b.dim_b):
        raise BadSite(f"index ({k},{i},{j}) outside the tensor")
    if b.skew and i == j:
        raise BadSite("diagonal of a skew tensor is pinned to zero")
    grid = [[list(row) for row in plane] for plane in b.coeffs]
    grid[k][i][j] += delta
    if b.skew:
        grid[k][j][i] -= delta  # partner entry keeps the skew flag valid
    return BilinearMap(b.dim_a, b.dim_b, b.dim_out,
                       tuple(tuple(tuple(r) for r in p) for p in grid), b.skew)


def _mutate_trilinear(t: TrilinearMap, idx: tuple[int, ...], delta: Fraction) -> TrilinearMap:
    if len(idx) != 4:
        raise BadSite("trilinear map sites take four indices")
    l, i, j, k = idx
    if not (0 <= l < t.dim_out and all(0 <= v < t.dim for v in (i, j, k))):
        raise BadSite(f"index ({l},{i},{j},{k}) outside the tensor")
    if t.alt and len({i, j, k}) < 3:
        raise BadSite("repeated indices of an alternating tensor are pinned to zero")
    grid = [[[list(r) for r in p] for p in cube] for cube in t.coeffs]
    if t.alt:
        order = (i, j, k)
        for p in permutations(range(3)):
            a, b, c = order[p[0]], order[p[1]], order[p[2]]
            grid[l][a][b][c] += frac(perm_sign(p)) * delta
    else:
        grid[l][i][j][k] += delta
    return TrilinearMap(t.dim, t.dim_out,
                        tuple(tuple(tuple(tuple(r) for r in p) for p in cube)
                              for cube in grid), t.alt)


def _mutate_action(rho: tuple[LinearMap, ...], idx: tuple[int, ...],
                   delta: Fraction) -> tuple[LinearMap, ...]:
    if len(idx) != 3:
        raise BadSite("action sites take three indices (element, row, col)")
    x, r, c = idx
    if not 0 <= x < len(rho):
        raise BadSite(f"no action matrix {x}")
    out = list(rho)
    out[x] = _mutate_linear(rho[x], (r, c), delta)
    return tuple(out)


def mutate(value, site: tuple, delta) -> object:
    """Return a copy with one tensor entry changed by `delta` (plus the
    partner entries demanded by a skew/alternating flag).  `site` is the
    tensor name followed by its indices.  The result is unverified."""
    delta = frac(delta)
    name, idx = site[0], tuple(site[1:])

    if isinstance(value, LieAlgebra):
        if name == "bracket":
            return replace(value, bracket=_mutate_bilinear(value.bracket, idx, delta))
    elif isinstance(value, RotaBaxterLieAlgebra):
        if name == "bracket":
            return replace(value, base=mutate(value.base, site, delta))
        if name == "r":
            return replace(value, r=_mutate_linear(value.r, idx, delta))
    elif isinstance(value, PreLieAlgebra):
        if name == "mult":
            return replace(value, mult=_mutate_bilinear(value.mult, idx, delta))
    elif isinstance(value, TwoTermLInfinity):
        if name == "l1":
            return replace(value, complex=TwoTermComplex(
                value.dim0, value.dim1, _mutate_linear(value.complex.l1, idx, delta)))
        if name == "l2_00":
            return replace(value, l2_00=_mutate_bilinear(value.l2_00, idx, delta))
        if name == "l2_01":
            return replace(value, l2_01=_mutate_bilinear(value.l2_01, idx, delta))
        if name == "l3":
            return replace(value, l3=_mutate_trilinear(value.l3, idx, delta))
    elif isinstance(value, TwoTermRBLInfinity):
        if name in ("l1", "l2_00", "l2_01", "l3"):
            return replace(value, linf=mutate(value.linf, site, delta))
        if name == "r0":
            return replace(value, rb=replace(value.rb, r0=_mutate_linear(value.rb.r0, idx, delta)))
        if name == "r1":
            return replace(value, rb=replace(value.rb, r1=_mutate_linear(value.rb.r1, idx, delta)))
        if name == "r2":
            return replace(value, rb=replace(value.rb, r2=_mutate_bilinear(value.rb.r2, idx, delta)))
    elif isinstance(value, RBLInfinityHom):
        hom = value.hom
        if name == "phi0":
            hom = replace(hom, phi0=_mutate_linear(hom.phi0, idx, delta))
        elif name == "phi1":
            hom = replace(hom, phi1=_mutate_linear(hom.phi1, idx, delta))
        elif name == "phi2":
            hom = replace(hom, phi2=_mutate_bilinear(hom.phi2, idx, delta))
        elif name == "phi3":
            return replace(value, phi3=_mutate_linear(value.phi3, idx, delta))
        else:
            raise BadSite(f"unknown tensor {name!r} for {type(value).__name__}")
        return replace(value, hom=hom)
    elif isinstance(value, LInfinityHom):
        if name == "phi0":
            return replace(value, phi0=_mutate_linear(value.phi0, idx, delta))
        if name == "phi1":
            return replace(value, phi1=_mutate_linear(value.phi1, idx, delta))
        if name == "phi2":
            return replace(value, phi2=_mutate_bilinear(value.phi2, idx, delta))
    elif isinstance(value, LieCrossedModule):
        if name == "bracket0":
            return replace(value, g0=mutate(value.g0, ("bracket",) + idx, delta))
        if name == "bracket1":
            return replace(value, g1=mutate(value.g1, ("bracket",) + idx, delta))
        if name == "d":
            return replace(value, d=_mutate_linear(value.d, idx, delta))
        if name == "rho":
            return replace(value, rho=_mutate_action(value.rho, idx, delta))
    elif isinstance(value, RBLieCrossedModule):
        if name in ("bracket0", "bracket1", "d", "rho"):
            return replace(value, base=mutate(value.base, site, delta))
        if name == "t0":
            return replace(value, t0=_mutate_linear(value.t0, idx, delta))
        if name == "t1":
            return replace(value, t1=_mutate_linear(value.t1, idx, delta))
    elif isinstance(value, PreLieCrossedModule):
        if name == "mult0":
            return replace(value, p0=mutate(value.p0, ("mult",) + idx, delta))
        if name == "mult1":
            return replace(value, p1=mutate(value.p1, ("mult",) + idx, delta))
        if name == "delta":
            return replace(value, delta=_mutate_linear(value.delta, idx, delta))
        if name == "l_act":
            return replace(value, l_act=_mutate_action(value.l_act, idx, delta))
        if name == "r_act":
            return replace(value, r_act=_mutate_action(value.r_act, idx, delta))
    else:
        raise BadSite(f"cannot mutate a {type(value).__name__}")
    raise BadSite(f"unknown tensor {name!r} for {type(value).__name__}")
