from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from comodec.builders import (
    QuiverSpec,
    direct_sum_coalgebras,
    direct_sum_comodules,
    embed_comodule,
    grouplike,
    matrix_coalgebra,
    path_coalgebra,
    random_invertible,
    randomized_basis,
    regular_comodule,
    running_example,
    standard_matrix_comodule,
)
from comodec.coalgebra import change_basis, check_coalgebra, wedge_tower
from comodec.comodule import check_comodule, coefficient_coalgebra, minimal_closed_subcomodules, socle
from comodec.decomp import decompose_coalgebra, link_classes_coalgebra
from comodec.exactla import QQ, Subspace, identity, inverse, mat_mul
from comodec.radical import analyze, coradical, jacobson_radical


def test_grouplike():
    with pytest.raises(ValueError):
        grouplike(0)
    g1 = grouplike(1)
    assert coradical(g1) == g1.whole()
    assert len(analyze(grouplike(3)).simples) == 3
    twisted = change_basis(grouplike(2), [[1, 1], [0, 1]])
    assert check_coalgebra(twisted) == [] and len(analyze(twisted).simples) == 2


def test_matrix_coalgebra():
    with pytest.raises(ValueError):
        matrix_coalgebra(0)
    assert matrix_coalgebra(1) == grouplike(1)
    m2 = matrix_coalgebra(2)
    assert m2.dim == 4 and analyze(m2).simples == (m2.whole(),)
    assert jacobson_radical(m2.dual).is_zero


def test_path_coalgebra():
    c = path_coalgebra(QuiverSpec(2, ((0, 1),), 1))
    assert c == running_example()
    assert path_coalgebra(QuiverSpec(1)) == grouplike(1)
    cyc = path_coalgebra(QuiverSpec(2, ((0, 1), (1, 0)), 1))
    assert cyc.dim == 4 and len(link_classes_coalgebra(cyc).classes) == 1
    with pytest.raises(ValueError):
        QuiverSpec(2, ((0, 2),))


@pytest.mark.parametrize("q", [
    QuiverSpec(3, ((0, 1), (1, 2)), 2),
    QuiverSpec(1, ((0, 0),), 3),
    QuiverSpec(2, ((0, 1), (0, 1), (1, 0)), 2),
])
def test_path_coradical_filtration(q):
    c = path_coalgebra(q)
    assert check_coalgebra(c) == []
    vertices = Subspace.coordinate(c.field, c.dim, range(q.vertices))
    assert coradical(c) == vertices
    lengths = [0] * q.vertices + [len(p) for p in q.paths()]
    tower = wedge_tower(c, vertices)
    for step, space in enumerate(tower.chain):
        expected = Subspace.coordinate(c.field, c.dim, [i for i, l in enumerate(lengths) if l <= step])
        assert space == expected


def test_direct_sums():
    assert direct_sum_coalgebras(grouplike(1), grouplike(1)) == grouplike(2)
    c = direct_sum_coalgebras(matrix_coalgebra(2), grouplike(1))
    assert len(link_classes_coalgebra(c).classes) == 2
    p, g = running_example(), grouplike(2)
    assert direct_sum_comodules(regular_comodule(p), regular_comodule(g)) == regular_comodule(
        direct_sum_coalgebras(p, g))
    with pytest.raises(ValueError):
        direct_sum_comodules(regular_comodule(p), regular_comodule(g), coalgebra=p)


def test_blockwise_decomposition():
    p, m2 = running_example(), matrix_coalgebra(2)
    c = direct_sum_coalgebras(p, m2)
    parts = decompose_coalgebra(c)
    embedded = []
    for s in decompose_coalgebra(p):
        embedded.append(Subspace.span(QQ, 7, [tuple(b) + (0,) * 4 for b in s.basis]))
    for s in decompose_coalgebra(m2):
        embedded.append(Subspace.span(QQ, 7, [(0,) * 3 + tuple(b) for b in s.basis]))
    assert set(parts) == set(embedded)


def test_regular_and_standard_comodules():
    g2 = regular_comodule(grouplike(2))
    assert socle(g2).space == g2.whole()
    std = standard_matrix_comodule(2)
    assert check_comodule(std) == []
    assert coefficient_coalgebra(std, std.whole()) == std.coalgebra.whole()
    [only] = minimal_closed_subcomodules(std)
    assert only.space == std.whole()
    assert regular_comodule(running_example()).is_regular()


def test_embed_comodule():
    std = standard_matrix_comodule(2)
    big = direct_sum_coalgebras(std.coalgebra, grouplike(1))
    e = embed_comodule(std, big, 0)
    assert check_comodule(e) == []
    assert not coefficient_coalgebra(e, e.whole()) == big.whole()


@given(st.integers(1, 8), st.integers(0, 10_000))
def test_random_invertible_is_invertible(n, seed):
    p = random_invertible(n, seed)
    assert mat_mul(QQ, p, inverse(QQ, p)) == identity(QQ, n)


def test_randomized_basis():
    g3 = grouplike(3)
    assert len(analyze(randomized_basis(g3, 5)).simples) == 3
    assert randomized_basis(g3, None) == g3
    m = regular_comodule(running_example())
    t = randomized_basis(m, 17, with_matrices=True)
    assert t.value.is_regular() and t.comodule_matrix == t.coalgebra_matrix
    assert socle(t.value).space.dim == 2
    with pytest.raises(TypeError):
        randomized_basis("nope", 1)
