"""Reference computations that avoid the trace form entirely.

``independent_coradical`` certifies C_0 from two directions: every block it
returns is a simple subcoalgebra (its dual is central simple, by the
rank test on A ⊗ A^op → End A), and the wedge tower of their sum exhausts C,
which forces the sum to contain every simple subcoalgebra.
``brute_force_simples`` enumerates all of F_p^n for tiny instances.
"""

from __future__ import annotations

import itertools

from comodec.coalgebra import Coalgebra, is_subcoalgebra, restrict, subcoalgebra_generated, wedge_tower
from comodec.exactla import Subspace, rank, sum_all, unit
from comodec.radical import analyze


def is_central_simple_dual(c: Coalgebra, d: Subspace) -> bool:
    """D* central simple ⇔ the operators h ↦ f*h*g span End(D*)."""
    sub = restrict(c, d)
    a, n, field = sub.dual, sub.dim, sub.field
    basis = [unit(field, n, i) for i in range(n)]
    ops = []
    for f in basis:
        fh = [a.convolve(f, h) for h in basis]
        for g in basis:
            ops.append([x for col in (a.convolve(v, g) for v in fh) for x in col])
    return rank(field, ops) == n * n


def independent_coradical(c: Coalgebra) -> Subspace:
    simples = analyze(c).simples
    for d in simples:
        assert is_subcoalgebra(c, d), "block is not a subcoalgebra"
        assert is_central_simple_dual(c, d), "block is not simple"
    total = sum_all(c.field, c.dim, simples)
    assert total.dim == sum(d.dim for d in simples), "blocks overlap"
    assert wedge_tower(c, total).limit == c.whole(), "blocks miss part of the coradical"
    return total


def brute_force_simples(c: Coalgebra) -> list[Subspace]:
    """Minimal nonzero subcoalgebras, by generating from every projective point of F_p^n."""
    p, n = c.field.p, c.dim
    assert p and p ** n <= 50_000
    generated = set()
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            v = [0] * lead + [1] + list(tail)
            generated.add(subcoalgebra_generated(c, c.span([v])))
    minimal = [e for e in generated if not any(f != e and f <= e for f in generated)]
    return sorted(minimal, key=Subspace.sort_key)
