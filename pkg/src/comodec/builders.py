"""Example coalgebras and comodules, plus seeded random changes of basis."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .coalgebra import Coalgebra, change_basis
from .comodule import Comodule, change_basis as comodule_change_basis
from .exactla import QQ, Field, Matrix, identity, mat_mul


def grouplike(n: int, field: Field = QQ) -> Coalgebra:
    """k[G] for a set of n group-like elements: Δg = g⊗g, ε(g) = 1."""
    if n < 1:
        raise ValueError("grouplike needs n >= 1")
    return Coalgebra.build(field, n, [(g, g, g, 1) for g in range(n)], [1] * n,
                           labels=[f"g{g}" for g in range(n)])


def matrix_coalgebra(n: int, field: Field = QQ) -> Coalgebra:
    """Comatrix coalgebra: basis e_ij (index i·n+j), Δe_ij = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij."""
    if n < 1:
        raise ValueError("matrix_coalgebra needs n >= 1")
    delta = [(i * n + j, i * n + k, k * n + j, 1)
             for i in range(n) for j in range(n) for k in range(n)]
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"e{i}{j}" for i in range(n) for j in range(n)]
    return Coalgebra.build(field, n * n, delta, counit, labels)


@dataclass(frozen=True)
class QuiverSpec:
    vertices: int
    arrows: tuple[tuple[int, int], ...] = ()
    max_path_length: int = 1
    names: tuple[str, ...] | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("a quiver needs at least one vertex")
        if self.max_path_length < 0:
            raise ValueError("max_path_length must be >= 0")
        for s, t in self.arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ValueError(f"arrow {(s, t)} out of range")

    def paths(self) -> list[tuple[int, ...]]:
        """Paths as arrow-index tuples, by length then lexicographically."""
        out: list[tuple[int, ...]] = []
        layer = [(a,) for a in range(len(self.arrows))]
        for _ in range(self.max_path_length):
            out.extend(layer)
            layer = [p + (a,) for p in layer for a in range(len(self.arrows))
                     if self.arrows[p[-1]][1] == self.arrows[a][0]]
        return out


def path_coalgebra(q: QuiverSpec, field: Field = QQ) -> Coalgebra:
    """Paths of length ≤ ℓ; Δ splits a path at every vertex it passes, vertices are group-like."""
    paths = q.paths()
    nv = len(q.arrows)
    index = {p: q.vertices + t for t, p in enumerate(paths)}
    delta = [(v, v, v, 1) for v in range(q.vertices)]
    for p, k in index.items():
        source, target = q.arrows[p[0]][0], q.arrows[p[-1]][1]
        delta.append((k, source, k, 1))
        delta.append((k, k, target, 1))
        for cut in range(1, len(p)):
            delta.append((k, index[p[:cut]], index[p[cut:]], 1))
    counit = [1] * q.vertices + [0] * len(paths)
    vnames = list(q.names) if q.names else ([chr(ord("x") + v) for v in range(q.vertices)]
                                            if q.vertices <= 3 else [f"v{v}" for v in range(q.vertices)])
    anames = [chr(ord("a") + a) if nv <= 20 else f"a{a}" for a in range(nv)]
    labels = vnames + ["".join(anames[a] for a in p) for p in paths]
    return Coalgebra.build(field, q.vertices + len(paths), delta, counit, labels)


def direct_sum_coalgebras(c1: Coalgebra, c2: Coalgebra) -> Coalgebra:
    if c1.field != c2.field:
        raise ValueError("coalgebras over different fields")
    n1 = c1.dim
    delta = list(c1.delta) + [(k + n1, i + n1, j + n1, c) for k, i, j, c in c2.delta]
    labels = None
    if c1.labels and c2.labels:
        labels = [f"{x}.1" for x in c1.labels] + [f"{x}.2" for x in c2.labels]
    return Coalgebra.build(c1.field, n1 + c2.dim, delta, list(c1.counit) + list(c2.counit), labels)


def direct_sum_comodules(m1: Comodule, m2: Comodule, coalgebra: Coalgebra | None = None) -> Comodule:
    """M1 ⊕ M2 over ``coalgebra`` (default: C1 ⊕ C2, with M2's coefficients shifted).

    When ``coalgebra`` is given, both summands must already be comodules over it.
    """
    if coalgebra is None:
        coalgebra = direct_sum_coalgebras(m1.coalgebra, m2.coalgebra)
        shift = m1.coalgebra.dim
        if coalgebra.dim != m1.coalgebra.dim + m2.coalgebra.dim:
            raise ValueError("layout mismatch")
    else:
        if m1.coalgebra != coalgebra or m2.coalgebra != coalgebra:
            raise ValueError("layout mismatch: summands are not over the given coalgebra")
        shift = 0
    d1 = m1.dim
    rho = list(m1.rho) + [(x + d1, y + d1, k + shift, r) for x, y, k, r in m2.rho]
    labels = None
    if m1.labels and m2.labels:
        labels = [f"{x}.1" for x in m1.labels] + [f"{x}.2" for x in m2.labels]
    return Comodule.build(coalgebra, d1 + m2.dim, rho, labels)


def embed_comodule(m: Comodule, coalgebra: Coalgebra, offset: int) -> Comodule:
    """Reinterpret ``m`` over a coalgebra containing m.coalgebra as the block at ``offset``."""
    rho = [(x, y, k + offset, r) for x, y, k, r in m.rho]
    return Comodule.build(coalgebra, m.dim, rho, m.labels)


def regular_comodule(c: Coalgebra) -> Comodule:
    """C as a right C-comodule with ρ = Δ."""
    return Comodule.build(c, c.dim, [(k, i, j, r) for k, i, j, r in c.delta], c.labels)


def standard_matrix_comodule(n: int, field: Field = QQ) -> Comodule:
    """k^n over matrix_coalgebra(n) with ρ(v_i) = Σ_j v_j⊗e_ji."""
    c = matrix_coalgebra(n, field)
    rho = [(i, j, j * n + i, 1) for i in range(n) for j in range(n)]
    return Comodule.build(c, n, rho, [f"v{i}" for i in range(n)])


# ------------------------------------------------------------ twisting


def random_invertible(n: int, seed: int, field: Field = QQ, spread: int = 2) -> Matrix:
    """Permutation × unit lower triangular × unit upper triangular, small integer entries."""
    rng = random.Random(seed)
    lower = [[1 if i == j else (rng.randint(-spread, spread) if j < i else 0) for j in range(n)]
             for i in range(n)]
    upper = [[1 if i == j else (rng.randint(-spread, spread) if j > i else 0) for j in range(n)]
             for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    pmat = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
    lower = [field.vector(r) for r in lower]
    upper = [field.vector(r) for r in upper]
    pmat = [field.vector(r) for r in pmat]
    return mat_mul(field, pmat, mat_mul(field, lower, upper))


@dataclass(frozen=True)
class Twist:
    """A twisted instance together with the matrices that produced it."""

    value: object
    coalgebra_matrix: Matrix
    comodule_matrix: Matrix | None = None


def randomized_basis(obj, seed: int, with_matrices: bool = False):
    """Apply a seeded random change of basis to a Coalgebra or Comodule.

    A comodule is twisted on both M and C; a regular comodule keeps one
    matrix for both so it stays regular.  ``seed=None`` is the identity.
    """
    if isinstance(obj, Coalgebra):
        p = _matrix_for(obj.dim, seed, obj.field)
        out = change_basis(obj, p)
        return Twist(out, p) if with_matrices else out
    if isinstance(obj, Comodule):
        c = obj.coalgebra
        pc = _matrix_for(c.dim, seed, c.field)
        pm = pc if obj.is_regular() else _matrix_for(obj.dim, None if seed is None else seed + 7919, c.field)
        new_c = change_basis(c, pc)
        out = comodule_change_basis(obj, pm, new_c, pc)
        return Twist(out, pc, pm) if with_matrices else out
    raise TypeError(f"cannot twist {type(obj).__name__}")


def _matrix_for(n: int, seed: int | None, field: Field) -> Matrix:
    if seed is None:
        return identity(field, n)
    return random_invertible(n, seed, field)


# ------------------------------------------------------------- corpus


def running_example(field: Field = QQ) -> Coalgebra:
    """The path coalgebra of x → y: Δa = x⊗a + a⊗y."""
    return path_coalgebra(QuiverSpec(2, ((0, 1),), 1), field)


def corpus_coalgebras(field: Field = QQ) -> dict[str, Coalgebra]:
    """Named builder coalgebras used by the test and acceptance suites (dims ≤ 16)."""
    path = running_example(field)
    return {
        "grouplike1": grouplike(1, field),
        "grouplike3": grouplike(3, field),
        "matrix2": matrix_coalgebra(2, field),
        "matrix3": matrix_coalgebra(3, field),
        "path": path,
        "path_cycle": path_coalgebra(QuiverSpec(2, ((0, 1), (1, 0)), 1), field),
        "path_A3_len2": path_coalgebra(QuiverSpec(3, ((0, 1), (1, 2)), 2), field),
        "path_kronecker": path_coalgebra(QuiverSpec(2, ((0, 1), (0, 1)), 1), field),
        "path_loop_len3": path_coalgebra(QuiverSpec(1, ((0, 0),), 3), field),
        "path_plus_grouplike1": direct_sum_coalgebras(path, grouplike(1, field)),
        "matrix2_plus_grouplike1": direct_sum_coalgebras(matrix_coalgebra(2, field), grouplike(1, field)),
        "matrix2_plus_path": direct_sum_coalgebras(matrix_coalgebra(2, field), path),
        "path_disjoint_A2_A2": path_coalgebra(QuiverSpec(4, ((0, 1), (2, 3)), 1), field),
    }


def corpus_comodules(field: Field = QQ) -> dict[str, Comodule]:
    """Named comodules: every regular comodule above plus non-regular ones."""
    coalgebras = corpus_coalgebras(field)
    out = {f"regular_{name}": regular_comodule(c) for name, c in coalgebras.items()}
    path = coalgebras["path"]
    out["standard_matrix2"] = standard_matrix_comodule(2, field)
    out["standard_matrix3"] = standard_matrix_comodule(3, field)
    out["path_kx"] = Comodule.build(path, 1, [(0, 0, 0, 1)], ["x"])
    # linked simples whose components commute: not W-relational hereditary
    out["path_ky_plus_kx"] = direct_sum_comodules(
        Comodule.build(path, 1, [(0, 0, 1, 1)], ["y"]),
        Comodule.build(path, 1, [(0, 0, 0, 1)], ["x"]),
        coalgebra=path,
    )
    out["path_regular_plus_kx"] = direct_sum_comodules(
        regular_comodule(path), Comodule.build(path, 1, [(0, 0, 0, 1)], ["x"]), coalgebra=path
    )
    m2g = coalgebras["matrix2_plus_grouplike1"]
    out["standard_matrix2_plus_regular_grouplike1"] = direct_sum_comodules(
        standard_matrix_comodule(2, field), regular_comodule(grouplike(1, field))
    )
    out["standard_matrix2_over_sum"] = embed_comodule(standard_matrix_comodule(2, field), m2g, 0)
    return out
