import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import hom_mutants, structure_mutants
from rblie.catalog import TWO_TERM_STRUCTURES, HOMOMORPHISMS
from rblie.errors import NotComposable
from rblie.lie2 import (Morphism2V, RBLie2View, coherence_residual,
                        naturality_residual, roundtrip_hom,
                        roundtrip_structure, verify_naturality,
                        verify_rbcoh, verify_rbcohm)
from rblie.tensors import is_zero, vbasis, vec, vzero
from rblie.twoterm import rb2_residual, rb3_residual, rbh3_residual

VIEW = RBLie2View(TWO_TERM_STRUCTURES["sl2-cocycle-rb2-nonstrict"])

coords = st.integers(min_value=-4, max_value=4)


def rand_vec(rng: random.Random, n: int):
    return vec(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)))


def composable_pair(view: RBLie2View, rng: random.Random):
    g = Morphism2V(rand_vec(rng, view.dim0), rand_vec(rng, view.dim1))
    f = Morphism2V(view.target(g), rand_vec(rng, view.dim1))
    return f, g


def test_identity_is_unit():
    rng = random.Random(7)
    for _ in range(20):
        f = Morphism2V(rand_vec(rng, VIEW.dim0), rand_vec(rng, VIEW.dim1))
        assert VIEW.compose(VIEW.identity(VIEW.target(f)), f) == f
        assert VIEW.compose(f, VIEW.identity(f.source)) == f


def test_compose_adds_arrow_parts():
    rng = random.Random(8)
    f, g = composable_pair(VIEW, rng)
    out = VIEW.compose(f, g)
    assert out.source == g.source
    assert out.arrow == tuple(a + b for a, b in zip(g.arrow, f.arrow))


def test_compose_rejects_boundary_mismatch():
    f = Morphism2V(vbasis(3, 0), vzero(1))
    g = Morphism2V(vbasis(3, 1), vbasis(1, 0))  # target != e0
    with pytest.raises(NotComposable):
        VIEW.compose(f, g)


def test_compose_associative_on_samples():
    for name, G in TWO_TERM_STRUCTURES.items():
        view = RBLie2View(G)
        rng = random.Random(f"assoc:{name}".encode())
        for _ in range(100):
            h = Morphism2V(rand_vec(rng, view.dim0), rand_vec(rng, view.dim1))
            g = Morphism2V(view.target(h), rand_vec(rng, view.dim1))
            f = Morphism2V(view.target(g), rand_vec(rng, view.dim1))
            left = view.compose(f, view.compose(g, h))
            right = view.compose(view.compose(f, g), h)
            assert left == right


def test_bracket_forms_agree_on_samples():
    for name, G in TWO_TERM_STRUCTURES.items():
        view = RBLie2View(G)
        rng = random.Random(len(name))
        for _ in range(100):
            f = Morphism2V(rand_vec(rng, view.dim0), rand_vec(rng, view.dim1))
            g = Morphism2V(rand_vec(rng, view.dim0), rand_vec(rng, view.dim1))
            first, second = view.bracket_forms(f, g)
            assert first == second


def test_bracket_of_identities_is_identity_of_bracket():
    rng = random.Random(3)
    x, z = rand_vec(rng, VIEW.dim0), rand_vec(rng, VIEW.dim0)
    out = VIEW.bracket(VIEW.identity(x), VIEW.identity(z))
    assert out == VIEW.identity(VIEW.bracket_objects(x, z))


def test_bracket_with_identity_matches_action():
    # [f, i(z)] = (l2(x, z), l2(arrow, z)) with the degree-one skew extension
    L = VIEW.base.linf
    rng = random.Random(4)
    f = Morphism2V(rand_vec(rng, 3), rand_vec(rng, 1))
    z = rand_vec(rng, 3)
    out = VIEW.bracket(f, VIEW.identity(z))
    assert out.source == L.l2_obj(f.source, z)
    assert out.arrow == tuple(-c for c in L.l2_act(z, f.arrow))


def test_bracket_functoriality_on_samples():
    """[f o f', g o g'] = [f, g] o [f', g'] whenever both sides compose."""
    for name, G in TWO_TERM_STRUCTURES.items():
        view = RBLie2View(G)
        rng = random.Random(f"functor:{name}".encode())
        for _ in range(100):
            fp, gp = (Morphism2V(rand_vec(rng, view.dim0), rand_vec(rng, view.dim1))
                      for _ in range(2))
            f = Morphism2V(view.target(fp), rand_vec(rng, view.dim1))
            g = Morphism2V(view.target(gp), rand_vec(rng, view.dim1))
            lhs = view.bracket(view.compose(f, fp), view.compose(g, gp))
            rhs = view.compose(view.bracket(f, g), view.bracket(fp, gp))
            assert lhs == rhs


def test_coherence_clean_on_catalog():
    for name, G in TWO_TERM_STRUCTURES.items():
        assert verify_rbcoh(G).ok, name


def test_coherence_residual_equals_chain_condition_everywhere():
    """The diagram difference IS the cyclic operator condition, including on
    mutants (the identity holds for any flag-valid data)."""
    instances = [G for _, G in TWO_TERM_STRUCTURES.items()]
    instances += [m for _, m in structure_mutants()]
    for G in instances:
        view = RBLie2View(G)
        d0 = G.linf.dim0
        for i in range(d0):
            for j in range(d0):
                for k in range(d0):
                    assert coherence_residual(view, i, j, k) == rb3_residual(G, i, j, k)


def test_coherence_flags_r2_mutants_at_same_triples():
    mutant = dict(structure_mutants())["rb3"]
    coh = verify_rbcoh(mutant)
    assert "coh-vs-rb3" not in coh.conditions()
    coh_triples = {v.indices for v in coh.violations if v.condition == "coh"}
    from rblie.twoterm import verify_rb_triple
    rb = verify_rb_triple(mutant)
    rb3_triples = {v.indices for v in rb.violations if v.condition == "rb3"}
    assert coh_triples == rb3_triples and coh_triples


def test_jacobiator_coherence_clean_on_catalog():
    from rblie.lie2 import verify_jacobiator_coherence
    for name, G in TWO_TERM_STRUCTURES.items():
        assert verify_jacobiator_coherence(G).ok, name


def test_jacobiator_coherence_equals_quadruple_identity_everywhere():
    """The coherence diagram difference IS the four-argument chain-level
    identity, including on the mutant that violates only that condition."""
    import itertools
    from rblie.lie2 import jacobiator_coherence_residual
    from rblie.twoterm import quadruple_identity_residual
    instances = list(TWO_TERM_STRUCTURES.values())
    instances.append(dict(structure_mutants())["d"])
    for G in instances:
        view = RBLie2View(G)
        d0 = G.linf.dim0
        for idx in itertools.product(range(d0), repeat=4):
            assert jacobiator_coherence_residual(view, *idx) == \
                quadruple_identity_residual(G.linf, *idx)


def test_jacobiator_coherence_flags_d_mutant():
    from rblie.lie2 import verify_jacobiator_coherence
    mutant = dict(structure_mutants())["d"]
    report = verify_jacobiator_coherence(mutant)
    assert "jcoh" in report.conditions()
    assert "jcoh-vs-d" not in report.conditions()


def test_naturality_equals_degree_one_condition():
    for name, G in TWO_TERM_STRUCTURES.items():
        view = RBLie2View(G)
        for a in range(G.linf.dim1):
            for i in range(G.linf.dim0):
                assert naturality_residual(view, a, i) == rb2_residual(G, a, i), name
        assert verify_naturality(G).ok, name


def test_hom_coherence_clean_on_catalog():
    for name, F in HOMOMORPHISMS.items():
        assert verify_rbcohm(F).ok, name


def test_hom_coherence_agrees_with_chain_condition_on_mutants():
    for condition, mutant in hom_mutants():
        report = verify_rbcohm(mutant)
        assert "cohm-vs-rbh3" not in report.conditions(), condition
        cohm_pairs = {v.indices for v in report.violations if v.condition == "cohm"}
        d0 = mutant.source.linf.dim0
        rbh3_pairs = {(i, j) for i in range(d0) for j in range(d0)
                      if not is_zero(rbh3_residual(mutant, i, j))}
        assert cohm_pairs == rbh3_pairs, condition


def test_roundtrip_identity_on_catalog():
    for name, G in TWO_TERM_STRUCTURES.items():
        assert roundtrip_structure(G).ok, name


def test_roundtrip_hom_identity_on_catalog():
    for name, F in HOMOMORPHISMS.items():
        assert roundtrip_hom(F).ok, name


@given(st.lists(coords, min_size=3, max_size=3),
       st.lists(coords, min_size=1, max_size=1),
       st.lists(coords, min_size=1, max_size=1))
def test_compose_is_total_on_matching_boundaries(src, u, v):
    g = Morphism2V(vec(*src), vec(*u))
    f = Morphism2V(VIEW.target(g), vec(*v))
    out = VIEW.compose(f, g)
    assert out.source == g.source
    assert VIEW.target(out) == VIEW.target(f)
