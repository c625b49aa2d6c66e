"""Finite-dimensional coalgebras, their dual convolution algebras and wedges.

A coalgebra on basis e_0..e_{n-1} is given by sparse structure constants
``(k, i, j, c)`` meaning Δ(e_k) = Σ c·e_i⊗e_j, plus the counit vector.
Tensor-square coordinates are row-major: (i, j) ↦ i·n + j.  Functionals
on C are vectors in the dual basis δ_0..δ_{n-1}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

from .config import ConsistencyError, InputError, current_config
from .exactla import (
    Field,
    Matrix,
    Subspace,
    Vector,
    _Echelon,
    annihilator,
    identity,
    inverse,
    kernel,
    mat_mul,
    mat_vec,
    transpose,
    unit,
)

DeltaEntry = tuple  # (k, i, j, c)


@dataclass(frozen=True)
class Coalgebra:
    field: Field
    dim: int
    delta: tuple[DeltaEntry, ...]
    counit: Vector
    labels: tuple[str, ...] | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise InputError("negative dimension")
        if len(self.counit) != n:
            raise InputError(f"counit has length {len(self.counit)}, expected {n}")
        seen = set()
        for entry in self.delta:
            k, i, j, _ = entry
            if not (0 <= k < n and 0 <= i < n and 0 <= j < n):
                raise InputError(f"delta entry {entry[:3]} out of range for dim {n}")
            if (k, i, j) in seen:
                raise InputError(f"duplicate delta entry {(k, i, j)}")
            seen.add((k, i, j))
        if self.labels is not None and len(self.labels) != n:
            raise InputError("label count does not match dimension")

    @classmethod
    def build(cls, field: Field, dim: int, delta: Iterable[Sequence], counit: Sequence,
              labels: Sequence[str] | None = None) -> "Coalgebra":
        """Normalize raw structure constants: coerce, drop zeros, sort."""
        entries = []
        for k, i, j, c in delta:
            c = field(c)
            if c:
                entries.append((int(k), int(i), int(j), c))
        entries.sort(key=lambda e: e[:3])
        return cls(field, dim, tuple(entries), field.vector(counit),
                   tuple(labels) if labels is not None else None)

    @classmethod
    def from_tensors(cls, field: Field, tensors: Sequence[dict], counit: Sequence,
                     labels=None) -> "Coalgebra":
        """Build from Δ(e_k) given as dicts {(i, j): c}."""
        delta = [(k, i, j, c) for k, t in enumerate(tensors) for (i, j), c in t.items()]
        return cls.build(field, len(tensors), delta, counit, labels)

    @cached_property
    def _by_source(self) -> tuple[tuple[tuple[int, int, object], ...], ...]:
        rows: list[list] = [[] for _ in range(self.dim)]
        for k, i, j, c in self.delta:
            rows[k].append((i, j, c))
        return tuple(tuple(r) for r in rows)

    def comultiply(self, v: Sequence) -> dict:
        """Δ(v) as a sparse dict {(i, j): c}."""
        out: dict = defaultdict(lambda: self.field.zero)
        for k, vk in enumerate(v):
            if vk:
                for i, j, c in self._by_source[k]:
                    out[i, j] += vk * c
        p = self.field.p
        return {key: (c % p if p else c) for key, c in out.items() if (c % p if p else c)}

    def comultiply_matrix(self, v: Sequence) -> list[list]:
        """Δ(v) as an n×n matrix T with Δ(v) = Σ T[i][j] e_i⊗e_j."""
        n = self.dim
        t = [[self.field.zero] * n for _ in range(n)]
        for (i, j), c in self.comultiply(v).items():
            t[i][j] = c
        return t

    def basis(self) -> Matrix:
        return identity(self.field, self.dim)

    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def span_of(self, *names: str) -> Subspace:
        """Coordinate subspace spanned by labelled basis elements."""
        if self.labels is None:
            raise ValueError("coalgebra has no basis labels")
        return Subspace.coordinate(self.field, self.dim, [self.labels.index(x) for x in names])

    @cached_property
    def dual(self) -> "DualAlgebra":
        return DualAlgebra(self)


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: int
    lhs: dict
    rhs: dict

    def describe(self, field: Field) -> str:
        def fmt(t):
            return "{" + ", ".join(f"{k}: {field.format(v)}" for k, v in sorted(t.items())) + "}"
        return f"{self.axiom} fails at basis index {self.index}: {fmt(self.lhs)} != {fmt(self.rhs)}"


def _clean(d: dict, field: Field) -> dict:
    p = field.p
    out = {}
    for k, v in d.items():
        if p:
            v %= p
        if v:
            out[k] = v
    return out


def check_coalgebra(c: Coalgebra) -> list[Violation]:
    """Every violated coassociativity / counit instance; empty iff ``c`` is a coalgebra."""
    field, eps = c.field, c.counit
    report = []
    for k in range(c.dim):
        left: dict = defaultdict(lambda: field.zero)
        right: dict = defaultdict(lambda: field.zero)
        for i, j, coef in c._by_source[k]:
            for a, b, d in c._by_source[i]:
                left[a, b, j] += coef * d
            for a, b, d in c._by_source[j]:
                right[i, a, b] += coef * d
        left, right = _clean(left, field), _clean(right, field)
        if left != right:
            report.append(Violation("coassociativity", k, left, right))
        target = {(k,): field.one}
        eps_left: dict = defaultdict(lambda: field.zero)
        eps_right: dict = defaultdict(lambda: field.zero)
        for i, j, coef in c._by_source[k]:
            eps_left[(j,)] += eps[i] * coef
            eps_right[(i,)] += eps[j] * coef
        eps_left, eps_right = _clean(eps_left, field), _clean(eps_right, field)
        if eps_left != target:
            report.append(Violation("left counit", k, eps_left, target))
        if eps_right != target:
            report.append(Violation("right counit", k, eps_right, target))
    return report


# ------------------------------------------------------------ dual algebra


class DualAlgebra:
    """C* under convolution (f*g)(e_k) = Σ c_k^{ij} f(e_i) g(e_j), with unit ε."""

    def __init__(self, coalgebra: Coalgebra):
        self.coalgebra = coalgebra
        self.field = coalgebra.field
        self.dim = coalgebra.dim

    @property
    def unit(self) -> Vector:
        return self.coalgebra.counit

    def convolve(self, f: Sequence, g: Sequence) -> Vector:
        n = self.dim
        if len(f) != n or len(g) != n:
            raise ValueError(f"functionals must have length {n}")
        out = []
        p = self.field.p
        for terms in self.coalgebra._by_source:
            s = self.field.zero
            for i, j, c in terms:
                fi = f[i]
                if fi:
                    gj = g[j]
                    if gj:
                        s += c * fi * gj
            out.append(s % p if p else s)
        return tuple(out)

    @cached_property
    def structure(self) -> dict:
        """δ_a * δ_b as sparse dicts: {(a, b): {k: c}}."""
        out: dict = defaultdict(dict)
        for k, i, j, c in self.coalgebra.delta:
            out[i, j][k] = c
        return dict(out)

    def left_matrix(self, f: Sequence) -> Matrix:
        """Matrix of g ↦ f*g in the dual basis (columns are images of δ_b)."""
        cols = [self.convolve(f, unit(self.field, self.dim, b)) for b in range(self.dim)]
        return transpose(cols) if cols else ()

    def ideal_product(self, a: Subspace, b: Subspace) -> Subspace:
        """span{f*g : f ∈ a, g ∈ b} from pairwise products of canonical basis vectors."""
        ech = _Echelon(self.field, self.dim)
        for f in a.basis:
            for g in b.basis:
                ech.insert(self.convolve(f, g))
                if ech.full:
                    return Subspace._from_echelon(ech)
        return Subspace._from_echelon(ech)

    def power(self, a: Subspace, e: int) -> Subspace:
        out = a
        for _ in range(e - 1):
            out = self.ideal_product(out, a)
            if out.is_zero:
                break
        return out


def dual_convolve(a: DualAlgebra, f: Sequence, g: Sequence) -> Vector:
    return a.convolve(f, g)


# -------------------------------------------------------- subcoalgebras


def slices(c: Coalgebra, v: Sequence) -> list[Vector]:
    """All left and right coefficient slices of Δ(v)."""
    n, zero = c.dim, c.field.zero
    t = c.comultiply(v)
    left: dict = {}
    right: dict = {}
    for (i, j), coef in t.items():
        left.setdefault(j, [zero] * n)[i] = coef
        right.setdefault(i, [zero] * n)[j] = coef
    return [tuple(x) for x in left.values()] + [tuple(x) for x in right.values()]


def is_subcoalgebra(c: Coalgebra, space: Subspace) -> bool:
    """Δ(space) ⊆ space⊗space, i.e. every coefficient slice stays in ``space``."""
    return all(s in space for v in space.basis for s in slices(c, v))


def subcoalgebra_generated(c: Coalgebra, seed: Subspace) -> Subspace:
    """Smallest subcoalgebra containing ``seed``."""
    ech = seed._echelon()
    queue = list(seed.basis)
    while queue:
        v = queue.pop()
        for s in slices(c, v):
            r = ech.reduce(s)
            if any(r) and ech.insert(r):
                queue.append(tuple(r))
    return Subspace._from_echelon(ech)


def restrict(c: Coalgebra, space: Subspace) -> Coalgebra:
    """The subcoalgebra ``space`` as a coalgebra on its canonical basis."""
    piv = space.pivots
    index = {p: t for t, p in enumerate(piv)}
    tensors = []
    for b in space.basis:
        t = {}
        for (i, j), coef in c.comultiply(b).items():
            if i not in index or j not in index:
                # entries off the pivot grid are determined by the pivot ones
                continue
            t[index[i], index[j]] = coef
        tensors.append(t)
    counit = [sum((e * x for e, x in zip(c.counit, b)), c.field.zero) for b in space.basis]
    sub = Coalgebra.from_tensors(c.field, tensors, counit)
    if not is_subcoalgebra(c, space):
        raise ValueError("space is not a subcoalgebra")
    return sub


# ----------------------------------------------------------------- wedge


def _wedge_dual(c: Coalgebra, x: Subspace, y: Subspace) -> Subspace:
    prod = c.dual.ideal_product(annihilator(x), annihilator(y))
    return annihilator(prod)


def _wedge_kernel(c: Coalgebra, x: Subspace, y: Subspace) -> Subspace:
    """Kernel of C --Δ--> C⊗C --> C/X ⊗ C/Y."""
    qx, qy = x.quotient_map(), y.quotient_map()
    rx, ry = len(qx), len(qy)
    field, n = c.field, c.dim
    if rx == 0 or ry == 0:
        return c.whole()
    qx_cols = transpose(qx)
    qy_cols = transpose(qy)
    columns = []
    for k in range(n):
        col = [field.zero] * (rx * ry)
        for i, j, coef in c._by_source[k]:
            a_col, b_col = qx_cols[i], qy_cols[j]
            for a in range(rx):
                ca = a_col[a]
                if ca:
                    base = a * ry
                    cc = coef * ca
                    for b in range(ry):
                        if b_col[b]:
                            col[base + b] += cc * b_col[b]
        if field.p:
            col = [v % field.p for v in col]
        columns.append(col)
    rows = transpose(columns)
    return kernel(field, rows, n)


def wedge(c: Coalgebra, x: Subspace, y: Subspace, verify: bool | None = None) -> Subspace:
    """X∧Y = ker(C → C/X ⊗ C/Y) = (X^⊥ · Y^⊥)^⊥.

    In verify mode both formulas are evaluated and must agree exactly.
    """
    if verify is None:
        verify = current_config().verify_wedge
    result = _wedge_dual(c, x, y)
    if verify:
        other = _wedge_kernel(c, x, y)
        if other != result:
            raise ConsistencyError(
                f"wedge formulas disagree: kernel form {other!r} vs dual form {result!r}"
            )
    return result


@dataclass(frozen=True)
class WedgeTower:
    chain: tuple[Subspace, ...]
    limit: Subspace

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.chain)


def wedge_tower(c: Coalgebra, e: Subspace) -> WedgeTower:
    """e ⊆ e∧e ⊆ e∧e∧e ⊆ ... until the dimension stops growing."""
    chain = [e]
    while True:
        nxt = wedge(c, chain[-1], e)
        if nxt.dim == chain[-1].dim:
            break
        chain.append(nxt)
    return WedgeTower(tuple(chain), chain[-1])


# ------------------------------------------------------------ basis change


def transport_vector(field: Field, p: Matrix, v: Sequence) -> Vector:
    """Coordinates of ``v`` after the change of basis ``p`` (old -> new)."""
    return mat_vec(field, p, v)


def change_basis(c: Coalgebra, p: Sequence[Sequence]) -> Coalgebra:
    """Coalgebra with Δ' = (p⊗p)∘Δ∘p⁻¹ and ε' = ε∘p⁻¹."""
    field, n = c.field, c.dim
    p = tuple(field.vector(row) for row in p)
    if len(p) != n:
        raise ValueError("change of basis has wrong size")
    q = inverse(field, p)
    pt = transpose(p)
    tensors = []
    q_cols = transpose(q)
    for k in range(n):
        t = c.comultiply_matrix(q_cols[k])
        tp = mat_mul(field, mat_mul(field, p, t), pt)
        tensors.append({(i, j): tp[i][j] for i in range(n) for j in range(n) if tp[i][j]})
    counit = [sum((e * x for e, x in zip(c.counit, col)), field.zero) for col in q_cols]
    return Coalgebra.from_tensors(field, tensors, counit)


def transport_subspace(s: Subspace, p: Sequence[Sequence]) -> Subspace:
    return Subspace.span(s.field, s.ambient_dim, (mat_vec(s.field, p, v) for v in s.basis))
