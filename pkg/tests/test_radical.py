from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from comodec.builders import corpus_coalgebras, grouplike, matrix_coalgebra, randomized_basis, regular_comodule
from comodec.coalgebra import Coalgebra, subcoalgebra_generated
from comodec.config import NonSplitError, UnsupportedFieldError
from comodec.exactla import GF, QQ, Subspace, annihilator
from comodec.radical import analyze, coradical, jacobson_radical, simple_subcoalgebras, split_roots

from .oracles import brute_force_simples, independent_coradical
from .strategies import COALGEBRAS, coalgebras


def trig(field=QQ) -> Coalgebra:
    """Δc = c⊗c − s⊗s, Δs = c⊗s + s⊗c: the dual is k[i]."""
    return Coalgebra.build(field, 2, [(0, 0, 0, 1), (0, 1, 1, -1), (1, 0, 1, 1), (1, 1, 0, 1)],
                           [1, 0], ["c", "s"])


# ------------------------------------------------------------ oracle values


def test_radical_examples(path):
    assert jacobson_radical(matrix_coalgebra(2).dual).is_zero
    assert jacobson_radical(grouplike(4).dual).is_zero
    j = jacobson_radical(path.dual)
    assert j.basis == ((0, 0, 1),)


def test_coradical_examples(path):
    m2 = matrix_coalgebra(2)
    assert coradical(m2) == m2.whole()
    assert coradical(path) == path.span_of("x", "y")
    assert coradical(grouplike(3)) == grouplike(3).whole()


def test_simples_examples(path):
    g3 = grouplike(3)
    assert simple_subcoalgebras(g3) == [g3.span_of(f"g{i}") for i in range(3)]
    m2 = matrix_coalgebra(2)
    assert simple_subcoalgebras(m2) == [m2.whole()]
    assert set(simple_subcoalgebras(path)) == {path.span_of("x"), path.span_of("y")}


def test_small_characteristic_refused(path):
    with pytest.raises(UnsupportedFieldError, match="p > 3"):
        analyze(corpus_coalgebras(GF(3))["path"])
    with pytest.raises(UnsupportedFieldError):
        jacobson_radical(corpus_coalgebras(GF(2))["path"].dual)


def test_non_split_refused_with_factor():
    with pytest.raises(NonSplitError) as info:
        analyze(trig(QQ))
    assert "x**2 + 1" in str(info.value)
    assert info.value.factor == "x**2 + 1"
    with pytest.raises(NonSplitError):
        analyze(trig(GF(3)))


def test_split_over_prime_field_with_root_of_minus_one():
    c = trig(GF(5))
    simples = simple_subcoalgebras(c)
    assert [d.dim for d in simples] == [1, 1]
    assert brute_force_simples(c) == simples


def test_split_roots():
    assert sorted(split_roots(QQ, [QQ(-2), QQ(1), QQ(1)])) == [-2, 1]
    assert sorted(split_roots(GF(7), [6, 0, 1])) == [1, 6]
    with pytest.raises(NonSplitError):
        split_roots(QQ, [QQ(-2), QQ(0), QQ(1)])


# ------------------------------------------------------------- invariants


@pytest.mark.parametrize("name", sorted(COALGEBRAS))
def test_left_and_right_trace_forms_agree(name):
    a = COALGEBRAS[name].dual
    assert jacobson_radical(a, "left") == jacobson_radical(a, "right")


@pytest.mark.parametrize("name", sorted(COALGEBRAS))
def test_radical_against_trace_free_oracle(name):
    c = COALGEBRAS[name]
    r = analyze(c)
    assert annihilator(independent_coradical(c)) == r.radical
    assert c.dual.power(r.radical, c.dim + 1).is_zero


@pytest.mark.parametrize("name", ["grouplike3", "matrix2", "path", "path_cycle", "path_kronecker",
                                  "path_loop_len3", "path_plus_grouplike1"])
def test_simples_against_brute_force(name):
    c = corpus_coalgebras(GF(5))[name]
    assert brute_force_simples(c) == list(analyze(c).simples)


@pytest.mark.parametrize("name", sorted(COALGEBRAS))
def test_simples_are_minimal_on_basis_sweep(name):
    c = COALGEBRAS[name]
    for d in analyze(c).simples:
        for v in d.basis:
            assert subcoalgebra_generated(c, c.span([v])) == d


@given(coalgebras(twist=False), st.integers(0, 10_000))
def test_radical_invariants_under_change_of_basis(c, seed):
    r, t = analyze(c), analyze(randomized_basis(c, seed))
    assert r.radical.dim == t.radical.dim
    assert sorted(d.dim for d in r.simples) == sorted(d.dim for d in t.simples)


@given(coalgebras())
def test_radical_result_invariants(c):
    r = analyze(c)
    assert annihilator(r.coradical) == r.radical
    total = Subspace.zero(c.field, c.dim)
    for d in r.simples:
        assert (total & d).is_zero
        total = total + d
    assert total == r.coradical
    reg = regular_comodule(c)
    for f in r.radical.basis:
        for x in r.coradical.basis:
            assert not any(reg.act(f, x))
    assert c.dual.power(r.radical, c.dim + 1).is_zero
