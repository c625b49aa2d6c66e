"""Link classes, the two direct-sum decompositions, flags and structural checks.

Two simple subcoalgebras are linked when their wedges do not commute; the
equivalence classes are the connected components of that graph.  (A
2-partition of the vertices separating D from E is crossed by some
noncommuting pair iff every such partition is, iff D and E are joined by a
path of noncommuting pairs: a partition that no edge crosses is a union of
components, and conversely the component of D gives a partition crossed by
no edge.)  The same construction on nonzero minimal closed subcomodules
gives the comodule classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from .coalgebra import Coalgebra, WedgeTower, is_subcoalgebra, restrict, wedge, wedge_tower
from .comodule import (
    Comodule,
    MinimalClosed,
    Verdict,
    _component,
    ann_dual,
    ann_module,
    closure,
    coefficient_coalgebra,
    coefficient_radical,
    comodule_wedge,
    comodule_wedge_tower,
    cyclic_submodule,
    is_weak_closed,
    minimal_closed_subcomodules,
    restrict_to_coefficients,
    socle,
    subcomodule_as_comodule,
)
from .config import ConsistencyError
from .exactla import Subspace, annihilator, intersect, sum_all
from .radical import analyze


# ------------------------------------------------------------- link graphs


def connected_components(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for g in sorted(groups.values()))


@dataclass(frozen=True)
class LinkGraph:
    side: str  # "coalgebra" or "comodule"
    vertices: tuple[Subspace, ...]
    edges: tuple[tuple[int, int], ...]
    classes: tuple[tuple[int, ...], ...]

    def class_index(self, v: int) -> int:
        return next(i for i, cls in enumerate(self.classes) if v in cls)

    def same_class(self, a: int, b: int) -> bool:
        return self.class_index(a) == self.class_index(b)


def _link_graph(side: str, vertices: Sequence[Subspace],
                wedge_fn: Callable[[Subspace, Subspace], Subspace]) -> LinkGraph:
    edges = []
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if wedge_fn(vertices[i], vertices[j]) != wedge_fn(vertices[j], vertices[i]):
                edges.append((i, j))
    return LinkGraph(side, tuple(vertices), tuple(edges),
                     connected_components(len(vertices), edges))


@lru_cache(maxsize=256)
def link_classes_coalgebra(c: Coalgebra) -> LinkGraph:
    simples = analyze(c).simples
    return _link_graph("coalgebra", simples, lambda x, y: wedge(c, x, y))


@lru_cache(maxsize=256)
def link_classes_comodule(m: Comodule) -> LinkGraph:
    vertices = [mc.space for mc in minimal_closed_subcomodules(m)]
    return _link_graph("comodule", vertices, lambda x, y: comodule_wedge(m, x, y))


# --------------------------------------------------- coalgebra decomposition


@dataclass(frozen=True)
class CoalgebraClass:
    simples: tuple[Subspace, ...]
    simple_indices: tuple[int, ...]
    span: Subspace  # E_α
    tower: WedgeTower  # limit is (E_α)^(∞)

    @property
    def summand(self) -> Subspace:
        return self.tower.limit


@lru_cache(maxsize=256)
def coalgebra_classes(c: Coalgebra) -> tuple[CoalgebraClass, ...]:
    """Link classes with E_α and (E_α)^(∞), ordered by the smallest basis vector of E_α."""
    graph = link_classes_coalgebra(c)
    out = []
    for cls in graph.classes:
        simples = tuple(graph.vertices[i] for i in cls)
        span = sum_all(c.field, c.dim, simples)
        out.append(CoalgebraClass(simples, cls, span, wedge_tower(c, span)))
    out.sort(key=lambda k: k.span.sort_key())
    summands = [k.summand for k in out]
    if sum(s.dim for s in summands) != c.dim or sum_all(c.field, c.dim, summands) != c.whole():
        raise ConsistencyError("coalgebra summands do not form a direct sum equal to C")
    for s in summands:
        if not is_subcoalgebra(c, s):
            raise ConsistencyError("a coalgebra summand is not a subcoalgebra")
    return tuple(out)


def decompose_coalgebra(c: Coalgebra) -> list[Subspace]:
    """Indecomposable subcoalgebras (E_α)^(∞), one per link class."""
    return [k.summand for k in coalgebra_classes(c)]


# ----------------------------------------------------- comodule analysis


@dataclass(frozen=True)
class Cell:
    """One refinement cell 𝓔(α,i): the simples behind one comodule class (or the zero class)."""

    simples: tuple[Subspace, ...]
    comodule_class: int | None  # index into the comodule link graph's classes; None = zero class
    span: Subspace  # E(α,i)
    component: Subspace  # M_{E(α,i)}
    tower_limit: Subspace  # (M_{E(α,i)})^(∞)

    @property
    def zero(self) -> bool:
        return self.comodule_class is None


@dataclass(frozen=True)
class Block:
    alpha: int
    coalgebra_class: CoalgebraClass
    summand: Subspace  # M_{(E_α)^(∞)}
    component_of_span: Subspace  # M_{E_α}
    tower_of_component: Subspace  # (M_{E_α})^(∞)
    cells: tuple[Cell, ...]


@dataclass(frozen=True)
class Flags:
    full: bool
    component_faithful: bool
    pi_commutative_C: bool
    pi_commutative_M: bool
    w_relational_hereditary: bool
    indecomposable_C: bool
    irreducible_C: bool
    indecomposable_M: bool
    relative_irreducible_M: bool
    cosemisimple: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "n/a"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


class Analysis:
    """Every derived object for one comodule, computed lazily and kept."""

    def __init__(self, m: Comodule):
        self.m = m
        self.c = m.coalgebra
        self.field = m.field

    @cached_property
    def radical(self):
        return analyze(self.c)

    @cached_property
    def simples(self) -> tuple[Subspace, ...]:
        return self.radical.simples

    @cached_property
    def components(self) -> tuple[Subspace, ...]:
        """M_D for every simple D, in the order of ``simples``."""
        return tuple(_component(self.m, d) for d in self.simples)

    @cached_property
    def minimal_closed(self) -> tuple[MinimalClosed, ...]:
        return minimal_closed_subcomodules(self.m)

    @cached_property
    def c_graph(self) -> LinkGraph:
        return link_classes_coalgebra(self.c)

    @cached_property
    def m_graph(self) -> LinkGraph:
        return link_classes_comodule(self.m)

    @cached_property
    def c_classes(self) -> tuple[CoalgebraClass, ...]:
        return coalgebra_classes(self.c)

    @cached_property
    def coefficients(self) -> Subspace:
        return coefficient_coalgebra(self.m, self.m.whole())

    @cached_property
    def socle(self):
        return socle(self.m)

    def simple_index(self, d: Subspace) -> int:
        return self.simples.index(d)

    def c_class_of_simple(self, i: int) -> int:
        """Index into ``c_classes`` (sorted order) of the class containing simple i."""
        return next(a for a, k in enumerate(self.c_classes) if i in k.simple_indices)

    def m_vertex_of_simple(self, i: int) -> int | None:
        d = self.simples[i]
        for v, mc in enumerate(self.minimal_closed):
            if mc.simple == d:
                return v
        return None

    def c_related(self, i: int, j: int) -> bool:
        return self.c_graph.same_class(i, j)

    def m_related(self, i: int, j: int) -> bool:
        """M_{D_i} ∼ M_{D_j}, with the zero class for vanishing components."""
        vi, vj = self.m_vertex_of_simple(i), self.m_vertex_of_simple(j)
        if vi is None or vj is None:
            return vi is None and vj is None
        return self.m_graph.same_class(vi, vj)

    @cached_property
    def simples_in_coefficients(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.simples) if d <= self.coefficients)

    @cached_property
    def faithful(self) -> tuple[int, ...]:
        return tuple(i for i, md in enumerate(self.components) if not md.is_zero)

    # ---- classification

    @cached_property
    def w_relational_hereditary(self) -> bool:
        inside = self.simples_in_coefficients
        return all(self.m_related(i, j) for i in inside for j in inside if self.c_related(i, j))

    @cached_property
    def flags(self) -> Flags:
        return Flags(
            full=self.coefficients == self.c.whole(),
            component_faithful=all(not md.is_zero for md in self.components),
            pi_commutative_C=not self.c_graph.edges,
            pi_commutative_M=not self.m_graph.edges,
            w_relational_hereditary=self.w_relational_hereditary,
            indecomposable_C=len(self.c_graph.classes) == 1,
            irreducible_C=len(self.simples) == 1,
            indecomposable_M=len(self.m_graph.classes) == 1,
            relative_irreducible_M=len(self.minimal_closed) == 1,
            cosemisimple=self.socle.space == self.m.whole(),
        )

    # ---- decomposition

    @cached_property
    def blocks(self) -> tuple[Block, ...]:
        m = self.m
        cells_by_alpha: dict[int, list[tuple[tuple[int, ...], int | None]]] = {}
        for ci, cls in enumerate(self.m_graph.classes):
            simple_ids = tuple(self.simple_index(self.minimal_closed[v].simple) for v in cls)
            alphas = {self.c_class_of_simple(i) for i in simple_ids}
            if len(alphas) != 1:
                raise ConsistencyError("a comodule class spans several coalgebra classes")
            cells_by_alpha.setdefault(alphas.pop(), []).append((simple_ids, ci))
        blocks = []
        for alpha, k in enumerate(self.c_classes):
            raw = cells_by_alpha.get(alpha, [])
            zero_ids = tuple(i for i in k.simple_indices if self.components[i].is_zero)
            cells = []
            for simple_ids, ci in raw:
                cells.append(self._cell(simple_ids, ci))
            cells.sort(key=lambda cell: cell.span.sort_key())
            if zero_ids:
                cells.append(self._cell(zero_ids, None))
            summand = _component(m, k.summand)
            comp = _component(m, k.span)
            tower = comodule_wedge_tower(m, comp).limit
            refined = sum_all(self.field, m.dim, (cell.tower_limit for cell in cells))
            if not (summand == tower == refined):
                raise ConsistencyError(
                    f"class {alpha}: M_(E)^inf = {summand!r}, (M_E)^inf = {tower!r}, "
                    f"sum of refined towers = {refined!r}"
                )
            if closure(m, summand) != summand:
                raise ConsistencyError(f"summand of class {alpha} is not closed")
            blocks.append(Block(alpha, k, summand, comp, tower, tuple(cells)))
        total = [b.summand for b in blocks]
        if sum(s.dim for s in total) != m.dim or sum_all(self.field, m.dim, total) != m.whole():
            raise ConsistencyError("comodule summands do not form a direct sum equal to M")
        return tuple(blocks)

    def _cell(self, simple_ids: tuple[int, ...], ci: int | None) -> Cell:
        simples = tuple(self.simples[i] for i in simple_ids)
        span = sum_all(self.field, self.c.dim, simples)
        comp = _component(self.m, span)
        limit = comodule_wedge_tower(self.m, comp).limit
        return Cell(simples, ci, span, comp, limit)


@lru_cache(maxsize=128)
def analysis(m: Comodule) -> Analysis:
    return Analysis(m)


def classify(m: Comodule) -> Flags:
    return analysis(m).flags


@dataclass(frozen=True)
class DecompositionReport:
    comodule: Comodule
    coalgebra_graph: LinkGraph
    comodule_graph: LinkGraph
    blocks: tuple[Block, ...]
    flags: Flags
    socle: Subspace
    theorem_checks: tuple[Check, ...]

    @property
    def summands(self) -> tuple[Subspace, ...]:
        return tuple(b.summand for b in self.blocks if not b.summand.is_zero)

    @property
    def coalgebra_summands(self) -> tuple[Subspace, ...]:
        return tuple(b.coalgebra_class.summand for b in self.blocks)


def decompose_comodule(m: Comodule, checks: bool = True) -> DecompositionReport:
    a = analysis(m)
    blocks = a.blocks
    theorem_checks = tuple(verify_structure(m)) if checks else ()
    return DecompositionReport(m, a.c_graph, a.m_graph, blocks, a.flags, a.socle.space,
                               theorem_checks)


# ------------------------------------------------------------ verification


def sample_subcomodules(m: Comodule, count: int, seed: int = 0) -> list[Subspace]:
    """Seeded subcomodules: cyclic submodules C*x of random x and sums of two of them."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        terms = 1 + (t % 2)
        space = m.zero_space()
        for _ in range(terms):
            x = [m.field(rng.choice((0, 0, 1, -1, 2))) for _ in range(m.dim)]
            space = space + cyclic_submodule(m, x)
        out.append(space)
    return out


class _Suite:
    def __init__(self):
        self.checks: list[Check] = []

    def add(self, name: str, ok: bool | None, witness: str = ""):
        if ok is None:
            self.checks.append(Check(name, "n/a", witness or "hypothesis not satisfied"))
        elif ok:
            self.checks.append(Check(name, "pass"))
        else:
            self.checks.append(Check(name, "fail", f"implementation bug: {witness}"))


def _first(pairs, pred) -> str:
    for item in pairs:
        if not pred(item):
            return repr(item)
    return ""


def verify_structure(m: Comodule, seed: int = 0) -> list[Check]:
    """Evaluate the structural identities and implications on this instance.

    Implications whose hypotheses fail are reported as ``n/a``.  A ``fail``
    always points to a bug in this package, never to the mathematics.
    """
    a = analysis(m)
    c = a.c
    s = _Suite()
    simples, comps = a.simples, a.components
    f = a.flags
    idx = range(len(simples))
    pairs = [(i, j) for i in idx for j in idx if i != j]

    test_subs = [m.whole(), m.zero_space()] + [mc.space for mc in a.minimal_closed]
    test_subs += [cyclic_submodule(m, b) for b in m.whole().basis]
    test_subs += [b.summand for b in a.blocks]

    # annihilators and components
    s.add("annihilator_is_coefficient_perp", all(
        ann_dual(m, n) == annihilator(coefficient_coalgebra(m, n)) for n in test_subs))
    subco = list(simples) + [k.span for k in a.c_classes] + [k.summand for k in a.c_classes]
    subco += [a.radical.coradical, c.whole()]
    s.add("component_of_own_coefficients", all(
        _component(m, e) == _component(m, coefficient_coalgebra(m, _component(m, e))) for e in subco))
    s.add("components_closed", all(
        closure(m, _component(m, e)) == _component(m, e) for e in subco))
    s.add("closed_iff_own_component", all(
        (closure(m, n) == n) == (_component(m, coefficient_coalgebra(m, n)) == n) for n in test_subs))
    s.add("faithful_iff_annihilator_nonzero", all(
        (not comps[i].is_zero) == (not ann_module(m, annihilator(simples[i])).is_zero) for i in idx))
    s.add("outside_coefficients_vanish", all(
        comps[i].is_zero for i in idx if (simples[i] & a.coefficients).is_zero))
    s.add("coefficients_of_simple_component", all(
        coefficient_coalgebra(m, comps[i]) == (m.coalgebra.zero_space() if comps[i].is_zero else simples[i])
        for i in idx))
    s.add("disjoint_simples_disjoint_components",
          all((comps[i] & comps[j]).is_zero for i, j in pairs),
          _first(pairs, lambda p: (comps[p[0]] & comps[p[1]]).is_zero))

    # minimal closed subcomodules
    mins = [mc.space for mc in a.minimal_closed]
    s.add("faithful_simples_biject_minimal_closed",
          len(a.faithful) == len(mins) == len(set(mins))
          and all(coefficient_coalgebra(m, mc.space) == mc.simple for mc in a.minimal_closed))
    rng = random.Random(seed)
    probe_ok = True
    for mc in a.minimal_closed:
        for _ in range(4):
            x = mc.space.combine([m.field(rng.randint(-2, 2)) for _ in range(mc.space.dim)])
            if any(x) and closure(m, cyclic_submodule(m, x)) != mc.space:
                probe_ok = False
    s.add("minimal_closed_generated_by_any_vector", probe_ok)

    # wedges of components
    s.add("component_wedge_bound", all(
        comodule_wedge(m, comps[i], comps[j])
        == _component(m, wedge(c, coefficient_coalgebra(m, comps[i]), coefficient_coalgebra(m, comps[j])))
        and comodule_wedge(m, comps[i], comps[j]) <= _component(m, wedge(c, simples[i], simples[j]))
        for i in idx for j in idx))
    fpairs = [(i, j) for i in a.faithful for j in a.faithful]
    s.add("faithful_component_wedge", all(
        comodule_wedge(m, comps[i], comps[j]) == _component(m, wedge(c, simples[i], simples[j]))
        for i, j in fpairs))
    s.add("component_of_sum_contains_sum", all(
        _component(m, simples[i] + simples[j]) >= comps[i] + comps[j] for i, j in pairs))
    s.add("coradical_component_is_socle",
          _component(m, a.radical.coradical) == sum_all(m.field, m.dim, comps) == a.socle.space)
    triples = [(i, j, k) for i in idx for j in idx for k in idx][:27]
    s.add("comodule_wedge_superadditive", all(
        comodule_wedge(m, comps[i] + comps[j], comps[k])
        >= comodule_wedge(m, comps[i], comps[k]) + comodule_wedge(m, comps[j], comps[k])
        for i, j, k in triples))
    s.add("coalgebra_wedge_superadditive", all(
        wedge(c, simples[i] + simples[j], simples[k])
        >= wedge(c, simples[i], simples[k]) + wedge(c, simples[j], simples[k])
        for i, j, k in triples))

    # link classes on both sides
    s.add("comodule_link_implies_coalgebra_link", all(
        a.c_related(i, j) for i, j in fpairs if a.m_related(i, j)))
    s.add("comodule_class_inside_coalgebra_class", all(
        {comps[j] for j in idx if a.m_related(i, j)} <= {comps[j] for j in idx if a.c_related(i, j)}
        for i in idx))
    s.add("faithful_class_inside_coalgebra_class", all(
        {comps[j] for j in idx if a.m_related(i, j)}
        <= {comps[j] for j in a.faithful if a.c_related(i, j)}
        for i in a.faithful))

    # the decomposition
    try:
        blocks = a.blocks
        ok = True
    except ConsistencyError as exc:
        blocks, ok = (), False
        s.add("decomposition_direct_sum_and_towers", False, str(exc))
    if ok:
        s.add("decomposition_direct_sum_and_towers", True)
        cover = all(
            sorted((x for cell in b.cells for x in cell.simples), key=Subspace.sort_key)
            == sorted(b.coalgebra_class.simples, key=Subspace.sort_key)
            for b in blocks)
        s.add("refinement_covers_classes", cover)
        if f.component_faithful:
            nonzero = [cell for b in blocks for cell in b.cells]
            s.add("faithful_refinement_is_comodule_classes",
                  all(not cell.zero for cell in nonzero)
                  and sorted(cell.comodule_class for cell in nonzero) == list(range(len(a.m_graph.classes))))
        else:
            s.add("faithful_refinement_is_comodule_classes", None)

    # transfer of flags from C to M
    s.add("pi_commutative_transfers",
          f.pi_commutative_M if f.pi_commutative_C else None)
    n_nonzero_m = len(a.m_graph.classes)
    if len(a.c_graph.classes) >= 2 and f.component_faithful:
        s.add("decomposable_transfers_when_faithful", n_nonzero_m >= 2)
    else:
        s.add("decomposable_transfers_when_faithful", None)
    s.add("irreducible_gives_relative_irreducible",
          f.relative_irreducible_M if (f.irreducible_C and m.dim > 0) else None)

    # passing to the coefficient coalgebra
    mr = restrict_to_coefficients(m)
    s.add("cyclic_over_coefficients", all(
        cyclic_submodule(m, b) == cyclic_submodule(mr, b) for b in m.whole().basis))
    s.add("closure_over_coefficients", all(
        closure(m, n) == closure(mr, n) for n in test_subs))
    mins_r = sorted((mc.space for mc in minimal_closed_subcomodules(mr)), key=Subspace.sort_key)
    s.add("minimal_closed_over_coefficients",
          mins_r == sorted(mins, key=Subspace.sort_key))
    fr = analysis(mr).flags
    s.add("flags_over_coefficients",
          fr.indecomposable_M == f.indecomposable_M
          and fr.relative_irreducible_M == f.relative_irreducible_M)
    all_faithful_inside = all(i in a.faithful for i in a.simples_in_coefficients)
    if all_faithful_inside:
        cr = mr.coalgebra
        s.add("indecomposable_gives_indecomposable_coefficients",
              len(link_classes_coalgebra(cr).classes) == 1 if f.indecomposable_M else None)
        s.add("relative_irreducible_iff_coefficients_irreducible",
              f.relative_irreducible_M == (len(analyze(cr).simples) == 1))
    else:
        s.add("indecomposable_gives_indecomposable_coefficients", None)
        s.add("relative_irreducible_iff_coefficients_irreducible", None)

    # W-relational hereditary
    c1_eq_c0 = all_faithful_inside
    s.add("hereditary_gives_faithful_coefficients",
          c1_eq_c0 if f.w_relational_hereditary else None)
    if ok:
        s.add("hereditary_equivalents_agree", _hereditary_equivalents(a, c1_eq_c0))

    if f.full and f.w_relational_hereditary:
        s.add("full_hereditary_indecomposable", f.indecomposable_M == f.indecomposable_C)
        s.add("full_hereditary_irreducible",
              f.relative_irreducible_M == f.irreducible_C)
        s.add("full_hereditary_splits_into_irreducibles",
              _splits_into_relative_irreducibles(a) == all(len(k.simples) == 1 for k in a.c_classes))
        s.add("full_hereditary_pi_commutative", f.pi_commutative_M == f.pi_commutative_C)
    else:
        for name in ("full_hereditary_indecomposable",
                     "full_hereditary_irreducible",
                     "full_hereditary_splits_into_irreducibles",
                     "full_hereditary_pi_commutative"):
            s.add(name, None, "hypothesis full + W-relational hereditary fails")

    inside = a.simples_in_coefficients
    ipairs = [(i, j) for i in inside for j in inside if i != j]

    def m_commute(i, j):
        return comodule_wedge(m, comps[i], comps[j]) == comodule_wedge(m, comps[j], comps[i])

    def c_commute(i, j):
        return wedge(c, simples[i], simples[j]) == wedge(c, simples[j], simples[i])

    hyp = all(c_commute(i, j) for i, j in ipairs if m_commute(i, j))
    s.add("commuting_transfer_gives_hereditary",
          f.w_relational_hereditary if hyp else None)
    s.add("commuting_simples_commuting_components", all(
        m_commute(i, j) for i, j in fpairs if i != j and c_commute(i, j)))

    if m.is_regular():
        _regular_identities(s, m, a, seed)
    else:
        s.add("regular_comodule_identities", None, "M is not the regular comodule")

    s.add("socle_formulas_agree", a.socle.agree)
    s.add("radical_annihilates_socle", coefficient_radical(m) == ann_dual(m, a.socle.space))
    s.add("socle_is_sum_of_minimal_closed",
          a.socle.space == sum_all(m.field, m.dim, mins))
    j = a.radical.radical
    s.add("radical_nilpotent", c.dual.power(j, c.dim + 1).is_zero if not j.is_zero else True)
    return s.checks


def _splits_into_relative_irreducibles(a: Analysis) -> bool:
    """Every nonzero summand holds exactly one nonzero minimal closed subcomodule."""
    mins = [mc.space for mc in a.minimal_closed]
    return all(sum(1 for x in mins if x <= b.summand) == 1
               for b in a.blocks if not b.summand.is_zero)


def _hereditary_equivalents(a: Analysis, c1_eq_c0: bool) -> bool:
    inside = a.simples_in_coefficients
    cond1 = a.w_relational_hereditary
    cond2 = c1_eq_c0 and all(
        sum(1 for cell in b.cells if not cell.zero) <= 1 for b in a.blocks)
    everything = range(len(a.simples))
    # [M_D] as a set of subspaces; the zero class is {0}
    cond3 = all(
        {a.components[j] for j in everything if a.m_related(i, j)}
        == {a.components[j] for j in inside if a.c_related(i, j)}
        for i in inside
    )
    cond4 = all(a.m_related(i, j) == a.c_related(i, j) for i in inside for j in inside)

    def indecomposable_or_zero(space: Subspace) -> bool:
        if space.is_zero:
            return True
        sub = subcomodule_as_comodule(a.m, space)
        return len(link_classes_comodule(sub).classes) <= 1

    cond5 = c1_eq_c0 and all(indecomposable_or_zero(b.summand) for b in a.blocks)
    cond6 = c1_eq_c0 and all(indecomposable_or_zero(b.tower_of_component) for b in a.blocks)
    weak_closed = all(closure(a.m, b.summand) == b.summand for b in a.blocks)
    cond7 = cond6 and weak_closed
    cond8 = cond5 and weak_closed
    return len({cond1, cond2, cond3, cond4, cond5, cond6, cond7, cond8}) == 1


def _regular_identities(s: _Suite, m: Comodule, a: Analysis, seed: int):
    c = a.c
    subs = sample_subcomodules(m, 12, seed) + [mc.space for mc in a.minimal_closed]
    s.add("regular_closure_is_coefficients", all(
        closure(m, n) == coefficient_coalgebra(m, n) for n in subs))
    s.add("regular_ideal_annihilators", all(
        annihilator(x) == ann_module(m, x)
        for x in [a.radical.radical] + [annihilator(d) for d in a.simples]))
    s.add("regular_closed_iff_subcoalgebra", all(
        (closure(m, n) == n) == is_subcoalgebra(c, n) for n in subs))
    consistent = True
    for n in subs:
        verdict = is_weak_closed(m, n, samples=8, seed=seed).verdict
        closed = closure(m, n) == n
        if (verdict is Verdict.TRUE) != closed and verdict is not Verdict.UNKNOWN:
            consistent = False
        if verdict is Verdict.TRUE and not closed:
            consistent = False
    s.add("regular_weak_closed_iff_closed", consistent)
    s.add("regular_minimal_closed_are_simples",
          sorted((mc.space for mc in a.minimal_closed), key=Subspace.sort_key)
          == sorted(a.simples, key=Subspace.sort_key))
    s.add("regular_wedges_agree", all(
        comodule_wedge(m, x, y) == wedge(c, x, y) for x in a.simples for y in a.simples))
    s.add("regular_flags",
          a.flags.full and a.flags.w_relational_hereditary and a.flags.component_faithful)
    s.add("regular_decompositions_agree",
          sorted((b.summand for b in a.blocks), key=Subspace.sort_key)
          == sorted(decompose_coalgebra(c), key=Subspace.sort_key))
    s.add("regular_socle_is_coradical", a.socle.space == a.radical.coradical)
