"""Right C-comodules, the C*-action and the closure/component operators.

A comodule on basis m_0..m_{m-1} is given by sparse ``(x, y, k, r)``
meaning ρ(m_x) = Σ r·m_y⊗e_k.  C* acts on the left by f·x = (id⊗f)ρ(x),
so k^m is a left C*-module and every subcomodule is a C*-submodule.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .coalgebra import (
    Coalgebra,
    Violation,
    _clean,
    is_subcoalgebra,
    restrict,
    wedge,
)
from .config import ConsistencyError, InputError, current_config
from .exactla import (
    Matrix,
    Subspace,
    Vector,
    _Echelon,
    annihilator,
    inverse,
    kernel,
    mat_mul,
    sum_all,
    transpose,
    vec_mat,
)
from .radical import analyze, check_characteristic, jacobson_radical

RhoEntry = tuple  # (x, y, k, r)


class NotSubcomoduleError(ValueError):
    pass


class NotSubcoalgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Comodule:
    coalgebra: Coalgebra
    dim: int
    rho: tuple[RhoEntry, ...]
    labels: tuple[str, ...] | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        m, n = self.dim, self.coalgebra.dim
        if m < 0:
            raise InputError("negative dimension")
        seen = set()
        for entry in self.rho:
            x, y, k, _ = entry
            if not (0 <= x < m and 0 <= y < m and 0 <= k < n):
                raise InputError(f"rho entry {entry[:3]} out of range")
            if (x, y, k) in seen:
                raise InputError(f"duplicate rho entry {(x, y, k)}")
            seen.add((x, y, k))
        if self.labels is not None and len(self.labels) != m:
            raise InputError("label count does not match dimension")

    @classmethod
    def build(cls, coalgebra: Coalgebra, dim: int, rho: Iterable[Sequence],
              labels: Sequence[str] | None = None) -> "Comodule":
        field = coalgebra.field
        entries = []
        for x, y, k, r in rho:
            r = field(r)
            if r:
                entries.append((int(x), int(y), int(k), r))
        entries.sort(key=lambda e: e[:3])
        return cls(coalgebra, dim, tuple(entries), tuple(labels) if labels is not None else None)

    @property
    def field(self):
        return self.coalgebra.field

    @cached_property
    def _by_source(self) -> tuple:
        rows: list[list] = [[] for _ in range(self.dim)]
        for x, y, k, r in self.rho:
            rows[x].append((y, k, r))
        return tuple(tuple(r) for r in rows)

    @cached_property
    def _by_functional(self) -> tuple:
        """For each k, the sparse matrix of δ_k acting: entries (y, x, r)."""
        rows: list[list] = [[] for _ in range(self.coalgebra.dim)]
        for x, y, k, r in self.rho:
            rows[k].append((y, x, r))
        return tuple(tuple(r) for r in rows)

    def coact(self, v: Sequence) -> dict:
        """ρ(v) as a sparse dict {(y, k): r}."""
        out: dict = defaultdict(lambda: self.field.zero)
        for x, vx in enumerate(v):
            if vx:
                for y, k, r in self._by_source[x]:
                    out[y, k] += vx * r
        return _clean(out, self.field)

    def action_matrix(self, f: Sequence) -> Matrix:
        """m×m matrix of x ↦ f·x."""
        field, m = self.field, self.dim
        a = [[field.zero] * m for _ in range(m)]
        for k, fk in enumerate(f):
            if fk:
                for y, x, r in self._by_functional[k]:
                    a[y][x] += fk * r
        if field.p:
            a = [[v % field.p for v in row] for row in a]
        return tuple(tuple(row) for row in a)

    def act(self, f: Sequence, v: Sequence) -> Vector:
        field = self.field
        out = [field.zero] * self.dim
        for k, fk in enumerate(f):
            if fk:
                for y, x, r in self._by_functional[k]:
                    if v[x]:
                        out[y] += fk * r * v[x]
        if field.p:
            out = [o % field.p for o in out]
        return tuple(out)

    def basis_actions(self, v: Sequence) -> list[Vector]:
        """δ_k · v for every k."""
        field = self.field
        outs = []
        for k in range(self.coalgebra.dim):
            out = [field.zero] * self.dim
            for y, x, r in self._by_functional[k]:
                if v[x]:
                    out[y] += r * v[x]
            if field.p:
                out = [o % field.p for o in out]
            outs.append(tuple(out))
        return outs

    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def span_of(self, *names: str) -> Subspace:
        if self.labels is None:
            raise ValueError("comodule has no basis labels")
        return Subspace.coordinate(self.field, self.dim, [self.labels.index(x) for x in names])

    def is_regular(self) -> bool:
        """True when this is C itself with ρ = Δ."""
        c = self.coalgebra
        return self.dim == c.dim and self.rho == tuple((k, i, j, r) for k, i, j, r in c.delta)


def check_comodule(m: Comodule) -> list[Violation]:
    """Every violated coaction / counit instance; empty iff ``m`` is a comodule."""
    field, c = m.field, m.coalgebra
    eps = c.counit
    report = []
    for x in range(m.dim):
        left: dict = defaultdict(lambda: field.zero)
        right: dict = defaultdict(lambda: field.zero)
        counit: dict = defaultdict(lambda: field.zero)
        for y, k, r in m._by_source[x]:
            for y2, k2, r2 in m._by_source[y]:
                left[y2, k2, k] += r * r2
            for i, j, d in c._by_source[k]:
                right[y, i, j] += r * d
            counit[(y,)] += r * eps[k]
        left, right, counit = _clean(left, field), _clean(right, field), _clean(counit, field)
        if left != right:
            report.append(Violation("coaction", x, left, right))
        target = {(x,): field.one}
        if counit != target:
            report.append(Violation("counit", x, counit, target))
    return report


def dual_action(m: Comodule, f: Sequence, x: Sequence) -> Vector:
    if len(f) != m.coalgebra.dim or len(x) != m.dim:
        raise ValueError("length mismatch in dual action")
    return m.act(f, x)


# ------------------------------------------------------------ predicates


def is_subcomodule(m: Comodule, n: Subspace) -> bool:
    """ρ(n) ⊆ n⊗C, i.e. n is stable under every δ_k."""
    return all(w in n for v in n.basis for w in m.basis_actions(v))


def _require_subcomodule(m: Comodule, n: Subspace):
    if not is_subcomodule(m, n):
        raise NotSubcomoduleError("subspace is not a subcomodule")


def _require_subcoalgebra(c: Coalgebra, e: Subspace):
    if not is_subcoalgebra(c, e):
        raise NotSubcoalgebraError("subspace is not a subcoalgebra")


# ----------------------------------------------------- annihilator operators


def coefficient_coalgebra(m: Comodule, n: Subspace) -> Subspace:
    """C(N): span of the C-coefficients of ρ restricted to N."""
    _require_subcomodule(m, n)
    c = m.coalgebra
    field = m.field
    ech = _Echelon(field, c.dim)
    for v in n.basis:
        slices: dict = {}
        for (y, k), r in m.coact(v).items():
            slices.setdefault(y, [field.zero] * c.dim)[k] = r
        for s in slices.values():
            ech.insert(s)
    return Subspace._from_echelon(ech)


def ann_dual(m: Comodule, n: Subspace) -> Subspace:
    """N^⊥C* = {f ∈ C* : f·N = 0}."""
    n_c = m.coalgebra.dim
    rows = []
    for v in n.basis:
        acts = m.basis_actions(v)
        for y in range(m.dim):
            rows.append([acts[k][y] for k in range(n_c)])
    return kernel(m.field, rows, n_c)


def ann_module(m: Comodule, p: Subspace) -> Subspace:
    """P^⊥M = {x ∈ M : P·x = 0}."""
    rows = []
    for f in p.basis:
        rows.extend(m.action_matrix(f))
    return kernel(m.field, rows, m.dim)


def closure(m: Comodule, n: Subspace) -> Subspace:
    """⟨N⟩ = N^⊥C*⊥M."""
    return ann_module(m, ann_dual(m, n))


def cyclic_submodule(m: Comodule, x: Sequence) -> Subspace:
    """C*x = span{δ_k·x}."""
    return m.span(m.basis_actions(x))


EXHAUSTIVE_LIMIT = 4096


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class WeakClosedResult:
    verdict: Verdict
    witness: Vector | None
    samples: int
    seed: int

    def __bool__(self):
        return self.verdict is Verdict.TRUE


def is_weak_closed(m: Comodule, n: Subspace, samples: int | None = None,
                   seed: int | None = None) -> WeakClosedResult:
    """Three-valued weak-closedness probe: ⟨C*x⟩ ⊆ N for sampled x ∈ N.

    Closed subcomodules are certified exactly, and over F_p every x ∈ N is
    tried when p^dim N ≤ EXHAUSTIVE_LIMIT.  Otherwise basis vectors and
    ``samples`` seeded random combinations are tried; a failing x is a
    witness for FALSE, and passing every probe only yields UNKNOWN.
    """
    cfg = current_config()
    samples = cfg.weak_samples if samples is None else samples
    seed = cfg.seed if seed is None else seed
    _require_subcomodule(m, n)
    if closure(m, n) == n:
        return WeakClosedResult(Verdict.TRUE, None, 0, seed)
    p = m.field.p
    exhaustive = bool(p) and p ** n.dim <= EXHAUSTIVE_LIMIT
    if exhaustive:
        # finite field, small N: the quantifier over x ∈ N is a finite loop
        probes = [n.combine(list(c)) for c in itertools.product(range(p), repeat=n.dim)]
    else:
        rng = random.Random(seed)
        probes = list(n.basis)
        for _ in range(samples):
            coeffs = [rng.randint(-3, 3) for _ in range(n.dim)]
            probes.append(n.combine([m.field(c) for c in coeffs]))
    for x in probes:
        if not any(x):
            continue
        if not closure(m, cyclic_submodule(m, x)) <= n:
            return WeakClosedResult(Verdict.FALSE, tuple(x), len(probes), seed)
    verdict = Verdict.TRUE if exhaustive else Verdict.UNKNOWN
    return WeakClosedResult(verdict, None, len(probes), seed)


# ------------------------------------------------------------- components


def component(m: Comodule, e: Subspace) -> Subspace:
    """M_E, the largest subcomodule N with ρ(N) ⊆ N⊗E (greatest fixpoint from N = M)."""
    _require_subcoalgebra(m.coalgebra, e)
    return _component(m, e)


def _component(m: Comodule, e: Subspace) -> Subspace:
    field = m.field
    # x with ρ(x) ∈ M⊗E
    base_rows = []
    for g in annihilator(e).basis:
        base_rows.extend(m.action_matrix(g))
    acts = [m.action_matrix(_unit(field, m.coalgebra.dim, k)) for k in range(m.coalgebra.dim)]
    n = m.whole()
    while True:
        rows = list(base_rows)
        for phi in annihilator(n).basis:
            for a in acts:
                rows.append(vec_mat(field, phi, a))
        nxt = kernel(field, rows, m.dim)
        if nxt == n:
            return n
        n = nxt


def _unit(field, n, k):
    v = [field.zero] * n
    v[k] = field.one
    return tuple(v)


# ------------------------------------------------------------------ wedge


def _comodule_wedge_dual(m: Comodule, n: Subspace, l: Subspace) -> Subspace:
    prod = m.coalgebra.dual.ideal_product(ann_dual(m, n), ann_dual(m, l))
    return ann_module(m, prod)


def _comodule_wedge_preimage(m: Comodule, n: Subspace, l: Subspace) -> Subspace:
    """ρ⁻¹(M ⊗ (C(N) ∧ C(L))), via the quotient map C → C/(C(N)∧C(L))."""
    c = m.coalgebra
    w = wedge(c, coefficient_coalgebra(m, n), coefficient_coalgebra(m, l))
    q = w.quotient_map()
    if not q:
        return m.whole()
    field = m.field
    rows = defaultdict(lambda: [field.zero] * m.dim)
    for x, y, k, r in m.rho:
        for a, qa in enumerate(q):
            if qa[k]:
                rows[y, a][x] += r * qa[k]
    return kernel(field, list(rows.values()), m.dim)


def comodule_wedge(m: Comodule, n: Subspace, l: Subspace, verify: bool | None = None) -> Subspace:
    """N∧L = (N^⊥C* · L^⊥C*)^⊥M; in verify mode also ρ⁻¹(M⊗(C(N)∧C(L)))."""
    if verify is None:
        verify = current_config().verify_wedge
    result = _comodule_wedge_dual(m, n, l)
    if verify:
        other = _comodule_wedge_preimage(m, n, l)
        if other != result:
            raise ConsistencyError(
                f"comodule wedge formulas disagree: {other!r} vs {result!r}"
            )
    return result


@dataclass(frozen=True)
class ComoduleTower:
    chain: tuple[Subspace, ...]
    limit: Subspace

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.chain)


def comodule_wedge_tower(m: Comodule, n: Subspace) -> ComoduleTower:
    chain = [n]
    while True:
        nxt = comodule_wedge(m, chain[-1], n)
        if nxt.dim == chain[-1].dim:
            break
        chain.append(nxt)
    return ComoduleTower(tuple(chain), chain[-1])


# --------------------------------------------------------------- socle


@dataclass(frozen=True)
class SocleResult:
    space: Subspace
    via_component: Subspace  # M_{C_0}
    via_radical: Subspace  # (r_j(C(M)*))^⊥M
    agree: bool


def coefficient_radical(m: Comodule) -> Subspace:
    """r_j(C(M)*) pulled back to C*: its lift plus C(M)^⊥."""
    c = m.coalgebra
    cm = coefficient_coalgebra(m, m.whole())
    sub = restrict(c, cm)
    check_characteristic(c.field, sub.dim)
    rad = jacobson_radical(sub.dual)
    lifts = []
    for f in rad.basis:
        v = [c.field.zero] * c.dim
        for t, piv in enumerate(cm.pivots):
            v[piv] = f[t]
        lifts.append(v)
    return c.span(lifts) + annihilator(cm)


def socle(m: Comodule) -> SocleResult:
    """M_0 computed as M_{C_0} and as (r_j(C(M)*))^⊥M; disagreement is fatal."""
    via_component = _component(m, analyze(m.coalgebra).coradical)
    via_radical = ann_module(m, coefficient_radical(m))
    if via_component != via_radical:
        raise ConsistencyError(
            f"socle formulas disagree: M_C0 = {via_component!r}, radical form = {via_radical!r}"
        )
    return SocleResult(via_component, via_component, via_radical, True)


@dataclass(frozen=True)
class MinimalClosed:
    simple: Subspace  # D
    space: Subspace  # M_D


@lru_cache(maxsize=256)
def minimal_closed_subcomodules(m: Comodule) -> tuple[MinimalClosed, ...]:
    """Pairs (D, M_D) for every simple D with M_D ≠ 0, in the order of the simples."""
    out = []
    for d in analyze(m.coalgebra).simples:
        md = _component(m, d)
        if md.is_zero:
            continue
        if coefficient_coalgebra(m, md) != d:
            raise ConsistencyError("C(M_D) differs from the simple D")
        out.append(MinimalClosed(d, md))
    return tuple(out)


# ------------------------------------------------------ structural helpers


def change_basis(m: Comodule, pm: Sequence[Sequence], coalgebra: Coalgebra,
                 pc: Sequence[Sequence]) -> Comodule:
    """Comodule with ρ' = (pm⊗pc)∘ρ∘pm⁻¹ over ``coalgebra`` (already transported by pc)."""
    field, dim = m.field, m.dim
    pm = tuple(field.vector(r) for r in pm)
    pc = tuple(field.vector(r) for r in pc)
    q_cols = transpose(inverse(field, pm)) if dim else ()
    pct = transpose(pc)
    rho = []
    for x in range(dim):
        t = [[field.zero] * m.coalgebra.dim for _ in range(dim)]
        for (y, k), r in m.coact(q_cols[x]).items():
            t[y][k] = r
        tp = mat_mul(field, mat_mul(field, pm, t), pct)
        rho.extend((x, y, k, tp[y][k]) for y in range(dim) for k in range(coalgebra.dim) if tp[y][k])
    return Comodule.build(coalgebra, dim, rho)


def subcomodule_as_comodule(m: Comodule, n: Subspace) -> Comodule:
    """The subcomodule N on its canonical basis."""
    _require_subcomodule(m, n)
    index = {p: t for t, p in enumerate(n.pivots)}
    rho = []
    for s, b in enumerate(n.basis):
        for (y, k), r in m.coact(b).items():
            if y in index:
                rho.append((s, index[y], k, r))
    return Comodule.build(m.coalgebra, n.dim, rho)


def restrict_to_coefficients(m: Comodule) -> Comodule:
    """M as a comodule over its coefficient coalgebra C(M)."""
    cm = coefficient_coalgebra(m, m.whole())
    sub = restrict(m.coalgebra, cm)
    index = {p: t for t, p in enumerate(cm.pivots)}
    rho = []
    for x in range(m.dim):
        for (y, k), r in m.coact(_unit(m.field, m.dim, x)).items():
            if k in index:
                rho.append((x, y, index[k], r))
    return Comodule.build(sub, m.dim, rho, m.labels)


def sum_subspaces(m: Comodule, spaces: Iterable[Subspace]) -> Subspace:
    return sum_all(m.field, m.dim, spaces)
