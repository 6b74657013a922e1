from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rblie.catalog import LIE_ALGEBRAS, aff1, aff1_rb_shift
from rblie.errors import BadSite, BudgetExceeded
from rblie.liealg import LieAlgebra, RotaBaxterLieAlgebra, verify_rb
from rblie.search import SearchSpec, enumerate_rb_operators, mutate
from rblie.tensors import LinearMap, vec


def test_abelian_grid_accepts_everything():
    spec = SearchSpec(LieAlgebra.abelian(2), (Fraction(0), Fraction(1)))
    found = enumerate_rb_operators(spec)
    assert len(found) == 16


def test_zero_coefficient_grid_gives_zero_operator():
    for alg in (aff1(), LIE_ALGEBRAS["sl2"]):
        found = enumerate_rb_operators(SearchSpec(alg, (Fraction(0),)))
        assert len(found) == 1
        assert found[0].r.is_zero()


def test_aff1_search_contains_shift_operator(golden_operators):
    assert any(rba.r == aff1_rb_shift().r for rba in golden_operators)


def test_aff1_search_matches_closed_form_oracle(golden_operators):
    """For R = [[a,b],[c,d]] on [e0,e1] = e1, the operator identity reduces
    to b(a+d) = 0 and d^2 = -bc; cross-check the enumeration against that
    independent derivation over the whole grid."""
    alg = aff1()
    golden = {rba.r for rba in golden_operators}
    grid = [Fraction(-1), Fraction(0), Fraction(1)]
    seen = 0
    for a, b, c, d in product(grid, repeat=4):
        r = LinearMap.from_rows([[a, b], [c, d]])
        expected = (b * (a + d) == 0) and (d * d == -b * c)
        assert (r in golden) == expected
        assert verify_rb(RotaBaxterLieAlgebra(alg, r)).ok == expected
        seen += 1
    assert seen == 81
    assert len(golden) == 15


def test_enumeration_is_deterministic(golden_operators):
    again = enumerate_rb_operators(SearchSpec(aff1()))
    assert [rba.r for rba in again] == [rba.r for rba in golden_operators]
    flat = [rba.r.flat() for rba in again]
    assert flat == sorted(flat)


def test_budget_guard():
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_rb_operators(SearchSpec(LIE_ALGEBRAS["sl2"], budget=100))
    assert exc.value.candidate_count == 3 ** 9


def test_mask_restricts_sites():
    mask = ((False, True), (False, False))
    spec = SearchSpec(aff1(), mask=mask)
    assert spec.candidate_count() == 3
    found = enumerate_rb_operators(spec)
    # with a = c = d = 0 every value of the free entry satisfies the identity
    assert [rba.r.entries[0][1] for rba in found] == [Fraction(-1), Fraction(0), Fraction(1)]
    assert all(rba.r.entries[1][1] == 0 for rba in found)


def test_mutate_zero_delta_is_identity():
    rba = aff1_rb_shift()
    assert mutate(rba, ("bracket", 1, 0, 1), 0) == rba
    assert mutate(rba, ("r", 0, 0), 0) == rba


def test_mutate_adjusts_skew_partner():
    alg = aff1()
    out = mutate(alg, ("bracket", 0, 0, 1), Fraction(1, 2))
    assert out.bracket.on_basis(0, 1) == vec(Fraction(1, 2), 1)
    assert out.bracket.on_basis(1, 0) == vec(Fraction(-1, 2), -1)


def test_mutate_rejects_skew_diagonal():
    with pytest.raises(BadSite):
        mutate(aff1(), ("bracket", 0, 0, 0), 1)


def test_mutate_rejects_unknown_tensor_and_bad_indices():
    with pytest.raises(BadSite):
        mutate(aff1(), ("nonsense", 0, 0, 0), 1)
    with pytest.raises(BadSite):
        mutate(aff1(), ("bracket", 5, 0, 1), 1)


def test_mutate_alternating_propagates_signs():
    from rblie.catalog import sl2_cocycle_rb
    G = sl2_cocycle_rb(0)
    out = mutate(G, ("l3", 0, 0, 1, 2), 1)
    l3 = out.linf.l3
    assert l3.on_basis(0, 1, 2) == vec(3)    # cocycle value 2 plus the delta
    assert l3.on_basis(1, 0, 2) == vec(-3)   # mirrored with the swap sign
    assert l3.on_basis(0, 0, 2) == vec(0)


@settings(max_examples=30)
@given(st.sampled_from([(k, i, j) for k in range(2) for i in range(2)
                        for j in range(2) if i != j]),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_mutate_then_reverse_restores(site, delta):
    rba = aff1_rb_shift()
    there = mutate(rba, ("bracket",) + site, delta)
    back = mutate(there, ("bracket",) + site, -delta)
    assert back == rba


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=1),
       st.integers(min_value=0, max_value=1),
       st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_mutated_operator_report_is_consistent_with_recheck(r, c, delta):
    """The verifier on a mutant agrees with a from-scratch evaluation of the
    defining identity; accidental validity is certified, not assumed."""
    mutant = mutate(aff1_rb_shift(), ("r", r, c), delta)
    report = verify_rb(mutant)
    alg = mutant.base
    manual_bad = []
    from rblie.tensors import vadd, vbasis
    for i in range(2):
        for j in range(i + 1, 2):
            lhs = alg.bracket_vec(mutant.r.column(i), mutant.r.column(j))
            rhs = mutant.r.apply(vadd(
                alg.bracket_vec(mutant.r.column(i), vbasis(2, j)),
                alg.bracket_vec(vbasis(2, i), mutant.r.column(j))))
            if lhs != rhs:
                manual_bad.append((i, j))
    assert [v.indices for v in report.violations] == manual_bad
