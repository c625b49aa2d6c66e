from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from comodec.builders import (
    direct_sum_coalgebras,
    direct_sum_comodules,
    grouplike,
    matrix_coalgebra,
    randomized_basis,
    regular_comodule,
    running_example,
    standard_matrix_comodule,
)
from comodec.comodule import closure, coefficient_coalgebra, minimal_closed_subcomodules
from comodec.decomp import (
    classify,
    connected_components,
    decompose_coalgebra,
    decompose_comodule,
    link_classes_coalgebra,
    link_classes_comodule,
    verify_structure,
)
from comodec.exactla import Subspace, sum_all

from .strategies import COALGEBRAS, COMODULES, comodules


def test_connected_components():
    assert connected_components(4, [(0, 2)]) == ((0, 2), (1,), (3,))
    assert connected_components(3, [(1, 2), (0, 1)]) == ((0, 1, 2),)
    assert connected_components(0, []) == ()


# ------------------------------------------------------------ oracle values


def test_link_classes_coalgebra_examples(path):
    assert len(link_classes_coalgebra(grouplike(3)).classes) == 3
    g = link_classes_coalgebra(path)
    assert g.classes == ((0, 1),) and g.edges == ((0, 1),)
    assert len(link_classes_coalgebra(direct_sum_coalgebras(matrix_coalgebra(2), grouplike(1))).classes) == 2


def test_link_classes_comodule_examples(path_regular, comodules):
    g = link_classes_comodule(path_regular)
    assert set(g.vertices) == {path_regular.span_of("x"), path_regular.span_of("y")}
    assert g.classes == ((0, 1),)
    assert len(link_classes_comodule(regular_comodule(grouplike(3))).classes) == 3
    kx = link_classes_comodule(comodules["path_kx"])
    assert kx.classes == ((0,),) and kx.edges == ()


def test_decompose_coalgebra_examples(path):
    assert [s.dim for s in decompose_coalgebra(grouplike(3))] == [1, 1, 1]
    assert decompose_coalgebra(path) == [path.whole()]
    c = direct_sum_coalgebras(path, grouplike(1))
    assert sorted(s.dim for s in decompose_coalgebra(c)) == [1, 3]


def test_decompose_comodule_examples(path_regular, comodules):
    for name, c in COALGEBRAS.items():
        r = decompose_comodule(regular_comodule(c), checks=False)
        assert sorted(r.summands, key=Subspace.sort_key) == sorted(decompose_coalgebra(c), key=Subspace.sort_key)
    kx = comodules["path_kx"]
    r = decompose_comodule(kx, checks=False)
    assert r.summands == (kx.whole(),)
    assert len(r.blocks) == 1 and r.blocks[0].cells[-1].zero  # ky is not faithful
    m = comodules["standard_matrix2_plus_regular_grouplike1"]
    r = decompose_comodule(m, checks=False)
    assert set(r.summands) == {m.span_of("v0.1", "v1.1"), m.span_of("g0.2")}


def test_empty_comodule():
    from comodec.comodule import Comodule

    m = Comodule.build(running_example(), 0, [])
    r = decompose_comodule(m)
    assert r.summands == ()
    assert all(ch.status != "fail" for ch in r.theorem_checks)


def test_classify_examples(path_regular, comodules):
    f = classify(path_regular)
    assert f.full and f.component_faithful and not f.pi_commutative_C
    assert f.w_relational_hereditary and f.indecomposable_M and not f.relative_irreducible_M
    f = classify(standard_matrix_comodule(2))
    assert f.full and f.relative_irreducible_M and f.cosemisimple
    f = classify(regular_comodule(grouplike(3)))
    assert f.pi_commutative_C and f.pi_commutative_M and not f.indecomposable_M
    f = classify(comodules["path_ky_plus_kx"])
    assert not f.w_relational_hereditary and not f.indecomposable_M and f.component_faithful


def test_verify_structure_examples(path_regular, comodules):
    checks = {ch.name: ch for ch in verify_structure(path_regular)}
    assert all(ch.status != "fail" for ch in checks.values())
    assert checks["full_hereditary_indecomposable"].status == "pass"
    assert checks["decomposition_direct_sum_and_towers"].status == "pass"
    checks = {ch.name: ch for ch in verify_structure(regular_comodule(grouplike(3)))}
    assert checks["full_hereditary_splits_into_irreducibles"].status == "pass"
    checks = {ch.name: ch for ch in verify_structure(comodules["path_kx"])}
    for name in ("full_hereditary_indecomposable", "full_hereditary_irreducible",
                 "full_hereditary_splits_into_irreducibles", "full_hereditary_pi_commutative"):
        assert checks[name].status == "n/a"


@pytest.mark.parametrize("name", sorted(COMODULES))
def test_verify_structure_on_corpus(name):
    failed = [ch for ch in verify_structure(COMODULES[name]) if ch.status == "fail"]
    assert failed == []


# ---------------------------------------------------------------- properties


@given(comodules())
def test_decomposition_invariants(m):
    r = decompose_comodule(m, checks=False)
    total = m.zero_space()
    for s in r.summands:
        assert (total & s).is_zero
        total = total + s
        assert closure(m, s) == s
    assert total == m.whole()
    for b in r.blocks:
        cells = sum_all(m.field, m.dim, (cell.tower_limit for cell in b.cells))
        assert b.summand == b.tower_of_component == cells


@given(comodules())
def test_bijection_and_pi_transfer(m):
    r = decompose_comodule(m, checks=False)
    mins = minimal_closed_subcomodules(m)
    faithful = [d for d in r.coalgebra_graph.vertices if any(mc.simple == d for mc in mins)]
    assert len(faithful) == len(mins)
    for mc in mins:
        assert coefficient_coalgebra(m, mc.space) == mc.simple
    if not r.coalgebra_graph.edges:
        assert not r.comodule_graph.edges


@given(st.sampled_from(sorted(COALGEBRAS)), st.integers(0, 10_000))
def test_coalgebra_decomposition_basis_independent(name, seed):
    c = COALGEBRAS[name]
    t = randomized_basis(c, seed, with_matrices=True)
    from comodec.coalgebra import transport_subspace
    from comodec.exactla import inverse

    back = inverse(c.field, t.coalgebra_matrix)
    got = {transport_subspace(s, back) for s in decompose_coalgebra(t.value)}
    assert got == set(decompose_coalgebra(c))


def test_coalgebra_decomposition_permutation_invariant(path):
    c = direct_sum_coalgebras(path, grouplike(2))
    perm = [[1 if j == (i + 2) % c.dim else 0 for j in range(c.dim)] for i in range(c.dim)]
    from comodec.coalgebra import change_basis, transport_subspace
    from comodec.exactla import inverse

    t = change_basis(c, perm)
    back = inverse(c.field, perm)
    assert {transport_subspace(s, back) for s in decompose_coalgebra(t)} == set(decompose_coalgebra(c))


def test_full_hereditary_biconditionals():
    for m in COMODULES.values():
        f = classify(m)
        if f.full and f.w_relational_hereditary:
            assert f.indecomposable_M == f.indecomposable_C
            assert f.relative_irreducible_M == f.irreducible_C
            assert f.pi_commutative_M == f.pi_commutative_C
