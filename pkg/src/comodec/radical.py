"""Jacobson radical of C*, the coradical C_0 and the simple subcoalgebras.

The radical is the radical of the trace form x, y ↦ tr(L_{x*y}) of the
regular representation, which is exact in characteristic 0 and in
characteristic p > dim C*.  Simple subcoalgebras come from splitting the
center of C*/J into central primitive idempotents; each simple block's
complement is annihilated inside C_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coalgebra import Coalgebra, DualAlgebra, is_subcoalgebra
from .config import ConsistencyError, NonSplitError, UnsupportedFieldError
from .exactla import Field, Subspace, _Echelon, annihilator, intersect, kernel, sum_all


def check_characteristic(field: Field, dim: int) -> None:
    if field.p and field.p <= dim:
        raise UnsupportedFieldError(
            f"radical needs characteristic 0 or p > {dim}; got GF({field.p})"
        )


def trace_form(a: DualAlgebra, side: str = "left") -> list[list]:
    """Gram matrix G[a][b] = tr(X_{δ_a * δ_b}) with X the left or right regular rep."""
    n, field = a.dim, a.field
    traces = [field.zero] * n
    for m, i, j, c in a.coalgebra.delta:
        # δ_i * δ_j has δ_m-coefficient c
        if side == "left" and m == j:
            traces[i] += c
        elif side == "right" and m == i:
            traces[j] += c
    gram = [[field.zero] * n for _ in range(n)]
    for m, i, j, c in a.coalgebra.delta:
        if traces[m]:
            gram[i][j] += c * traces[m]
    if field.p:
        gram = [[x % field.p for x in row] for row in gram]
    return gram


def jacobson_radical(a: DualAlgebra, side: str = "left") -> Subspace:
    """J(C*) as the radical of the regular trace form."""
    check_characteristic(a.field, a.dim)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return kernel(a.field, trace_form(a, side), a.dim)


def coradical(c: Coalgebra) -> Subspace:
    """C_0 = J^⊥ taken in C."""
    return analyze(c).coradical


# ---------------------------------------------------------- the quotient C*/J


class _Quotient:
    """C*/J in the coordinates of the free columns of J's echelon basis."""

    def __init__(self, a: DualAlgebra, radical: Subspace):
        self.a = a
        self.field = a.field
        self.radical = radical
        self.free = radical.free_columns
        self.dim = len(self.free)

    def project(self, f) -> tuple:
        r = self.radical.reduce(f)
        return tuple(r[i] for i in self.free)

    def lift(self, u) -> tuple:
        v = [self.field.zero] * self.a.dim
        for i, x in zip(self.free, u):
            v[i] = x
        return tuple(v)

    def mul(self, u, w) -> tuple:
        return self.project(self.a.convolve(self.lift(u), self.lift(w)))

    @property
    def one(self) -> tuple:
        return self.project(self.a.unit)

    def unit_vector(self, i: int) -> tuple:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return tuple(v)

    def add(self, u, w, scale=1) -> tuple:
        p = self.field.p
        out = [x + scale * y for x, y in zip(u, w)]
        return tuple(x % p for x in out) if p else tuple(out)

    def scale(self, s, u) -> tuple:
        p = self.field.p
        return tuple((s * x) % p for x in u) if p else tuple(s * x for x in u)

    def center(self) -> Subspace:
        basis = [self.unit_vector(i) for i in range(self.dim)]
        products = [[self.mul(b, z) for z in basis] for b in basis]
        rows = []
        for i in range(self.dim):
            # column s holds the commutator [z_s, b_i]
            comm = [self.add(products[s][i], products[i][s], -1) for s in range(self.dim)]
            for coord in range(self.dim):
                rows.append([comm[s][coord] for s in range(self.dim)])
        return kernel(self.field, rows, self.dim)


def _minimal_polynomial(q: _Quotient, w, e) -> list:
    """Coefficients (low to high, monic) of the minimal polynomial of w in the algebra with unit e."""
    powers = [e]
    while True:
        powers.append(q.mul(powers[-1], w))
        rows = [[pw[coord] for pw in powers] for coord in range(q.dim)]
        ker = kernel(q.field, rows, len(powers))
        if not ker.is_zero:
            v = ker.basis[0]
            lead = v[-1]
            inv = q.field.inv(lead)
            p = q.field.p
            return [(x * inv) % p if p else x * inv for x in v]


def split_roots(field: Field, coeffs: list) -> list:
    """Distinct roots in ``field`` of a squarefree polynomial that splits into linear factors.

    Raises ``NonSplitError`` for an irreducible factor of degree > 1.
    """
    import sympy

    x = sympy.Symbol("x")
    if field.p:
        poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=field.p)
    else:
        poly = sympy.Poly(
            [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)],
            x,
            domain=sympy.QQ,
        )
    _, factors = poly.factor_list()
    roots = []
    for fac, mult in factors:
        if fac.degree() > 1:
            raise NonSplitError(
                f"center of C*/J does not split over {field}: irreducible factor {fac.as_expr()}",
                factor=str(fac.as_expr()),
            )
        if mult > 1:
            raise ConsistencyError(f"repeated root {fac.as_expr()} in a semisimple center")
        a1, a0 = fac.all_coeffs()
        if field.p:
            roots.append(field(-int(a0) * pow(int(a1) % field.p, -1, field.p)))
        else:
            r = -sympy.Rational(a0) / sympy.Rational(a1)
            roots.append(field(f"{r.p}/{r.q}" if r.q != 1 else str(r.p)))
    return roots


def central_idempotents(q: _Quotient) -> list[tuple]:
    """Central primitive idempotents of C*/J (quotient coordinates)."""
    center = q.center()
    idems = [q.one]
    for z in center.basis:
        refined = []
        for e in idems:
            w = q.mul(z, e)
            coeffs = _minimal_polynomial(q, w, e)
            roots = split_roots(q.field, coeffs)
            if len(roots) == 1:
                refined.append(e)
                continue
            for i, lam in enumerate(roots):
                piece = e
                for j, mu in enumerate(roots):
                    if i == j:
                        continue
                    factor = q.add(w, q.scale(mu, e), -1)
                    piece = q.scale(q.field.inv(lam - mu), q.mul(piece, factor))
                refined.append(piece)
        idems = refined
    return idems


@dataclass(frozen=True)
class RadicalResult:
    radical: Subspace  # J ⊆ C*
    coradical: Subspace  # C_0 ⊆ C
    simples: tuple[Subspace, ...]  # sorted by Subspace.sort_key


@lru_cache(maxsize=512)
def analyze(c: Coalgebra) -> RadicalResult:
    a = c.dual
    radical = jacobson_radical(a)
    c0 = annihilator(radical)
    if annihilator(c0) != radical or not is_subcoalgebra(c, c0):
        raise ConsistencyError("J^⊥ is not a subcoalgebra with annihilator J")
    simples = _simples(c, radical, c0)
    return RadicalResult(radical, c0, simples)


def _simples(c: Coalgebra, radical: Subspace, c0: Subspace) -> tuple[Subspace, ...]:
    if c.dim == 0:
        return ()
    q = _Quotient(c.dual, radical)
    idems = central_idempotents(q)
    blocks = []
    for e in idems:
        ech = _Echelon(c.field, c.dim)
        for i in range(q.dim):
            ech.insert(q.lift(q.mul(e, q.unit_vector(i))))
        blocks.append(Subspace._from_echelon(ech))
    simples = []
    for i, block in enumerate(blocks):
        others = sum_all(c.field, c.dim, (b for j, b in enumerate(blocks) if j != i))
        d = intersect(c0, annihilator(others))
        if d.dim != block.dim or not is_subcoalgebra(c, d):
            raise ConsistencyError(f"block {i} does not yield a subcoalgebra of matching size")
        simples.append(d)
    if sum_all(c.field, c.dim, simples) != c0:
        raise ConsistencyError("simple subcoalgebras do not sum to the coradical")
    return tuple(sorted(simples, key=Subspace.sort_key))


def simple_subcoalgebras(c: Coalgebra) -> list[Subspace]:
    return list(analyze(c).simples)
