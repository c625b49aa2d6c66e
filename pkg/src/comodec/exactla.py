"""Exact scalars over Q or F_p and canonical subspaces of k^n.

Every subobject the rest of the package talks about (subcoalgebras,
subcomodules, ideals of the dual algebra) is a :class:`Subspace`: a
reduced row-echelon basis with no zero rows.  Two subspaces are equal iff
those bases are identical, so ``==`` and ``hash`` are exact set equality.

Rationals are ``gmpy2.mpq`` values; residues mod p are plain ``int`` in
``[0, p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Sequence

import gmpy2
from gmpy2 import mpq

Vector = tuple
Matrix = tuple  # tuple of row tuples


class FieldError(ValueError):
    """Bad scalar text or an unsupported field description."""


class DimensionError(ValueError):
    """Operands live in different ambient spaces or have the wrong shape."""


_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


@dataclass(frozen=True)
class Field:
    """The ground field: ``p == 0`` is Q, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0 or (self.p and not gmpy2.is_prime(self.p)):
            raise FieldError(f"characteristic must be 0 or a prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return mpq(0) if self.p == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.p == 0 else 1

    def __call__(self, value: Any):
        """Coerce an int, rational or element string into the field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.p == 0:
            return mpq(value)
        if isinstance(value, int):
            return value % self.p
        q = mpq(value)
        num, den = int(q.numerator), int(q.denominator)
        if den % self.p == 0:
            raise FieldError(f"{value} has no image in GF({self.p})")
        return num * pow(den, -1, self.p) % self.p

    def vector(self, values: Iterable[Any]) -> Vector:
        return tuple(self(v) for v in values)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / a
        return pow(int(a), -1, self.p)

    def parse(self, text: str):
        """Strict parse: integers, ``p/q`` in lowest terms (Q), residues in [0, p) (F_p)."""
        if not isinstance(text, str):
            raise FieldError(f"scalar must be a string, got {text!r}")
        s = text.strip()
        if self.p == 0:
            if _INT_RE.match(s):
                return mpq(int(s))
            m = _RAT_RE.match(s)
            if not m:
                raise FieldError(f"malformed rational {text!r}")
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise FieldError(f"zero denominator in {text!r}")
            if den == 1 or gmpy2.gcd(num, den) != 1:
                raise FieldError(f"{text!r} is not in lowest terms")
            return mpq(num, den)
        if not re.match(r"^\d+$", s):
            raise FieldError(f"malformed residue {text!r} for GF({self.p})")
        r = int(s)
        if r >= self.p:
            raise FieldError(f"residue {text!r} not in [0, {self.p})")
        return r

    def format(self, a) -> str:
        if self.p == 0:
            a = mpq(a)
            if a.denominator == 1:
                return str(int(a.numerator))
            return f"{int(a.numerator)}/{int(a.denominator)}"
        return str(int(a))

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------- row algebra


def _sub_scaled(field: Field, y: Sequence, a, x: Sequence) -> list:
    """y - a*x, entrywise."""
    if field.p:
        p = field.p
        return [(yi - a * xi) % p for yi, xi in zip(y, x)]
    return [yi - a * xi for yi, xi in zip(y, x)]


def _scale(field: Field, a, x: Sequence) -> list:
    if field.p:
        p = field.p
        return [(a * xi) % p for xi in x]
    return [a * xi for xi in x]


class _Echelon:
    """Incrementally maintained reduced echelon basis."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list:
        r = list(v)
        for row, piv in zip(self.rows, self.pivots):
            c = r[piv]
            if c:
                r = _sub_scaled(self.field, r, c, row)
        return r

    def insert(self, v: Sequence) -> bool:
        r = self.reduce(v)
        piv = next((i for i, c in enumerate(r) if c), None)
        if piv is None:
            return False
        r = _scale(self.field, self.field.inv(r[piv]), r)
        for k, row in enumerate(self.rows):
            c = row[piv]
            if c:
                self.rows[k] = _sub_scaled(self.field, row, c, r)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.rows.insert(pos, r)
        self.pivots.insert(pos, piv)
        return True

    @property
    def full(self) -> bool:
        return len(self.rows) == self.n


def rref(field: Field, m: Sequence[Sequence]) -> Matrix:
    """Reduced row-echelon form of ``m`` with the original row count.

    Nonzero rows come first, zero rows are kept at the bottom.
    """
    m = [field.vector(row) for row in m]
    if not m:
        return ()
    ncols = len(m[0])
    ech = _Echelon(field, ncols)
    for row in m:
        if len(row) != ncols:
            raise DimensionError("ragged matrix")
        ech.insert(row)
        if ech.full:
            break
    zero = tuple([field.zero] * ncols)
    out = [tuple(r) for r in ech.rows]
    return tuple(out + [zero] * (len(m) - len(out)))


def rank(field: Field, m: Sequence[Sequence]) -> int:
    return sum(1 for row in rref(field, m) if any(row))


# ------------------------------------------------------------------ Subspace


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^n stored by its canonical (reduced echelon) basis."""

    field: Field
    ambient_dim: int
    basis: Matrix = ()

    def __post_init__(self):
        last = -1
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise DimensionError("basis vector has wrong length")
            piv = next((i for i, c in enumerate(row) if c), None)
            if piv is None or piv <= last or row[piv] != 1:
                raise ValueError("basis is not in reduced echelon form")
            last = piv
        for row in self.basis:
            for other in self.basis:
                if other is not row and row[self._pivot_of(other)] != 0:
                    raise ValueError("basis is not reduced")

    @staticmethod
    def _pivot_of(row) -> int:
        return next(i for i, c in enumerate(row) if c)

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence] = ()) -> "Subspace":
        ech = _Echelon(field, n)
        for v in vectors:
            if len(v) != n:
                raise DimensionError(f"vector of length {len(v)} in k^{n}")
            ech.insert(field.vector(v))
            if ech.full:
                break
        return cls._from_echelon(ech)

    @classmethod
    def _from_echelon(cls, ech: _Echelon) -> "Subspace":
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", ech.field)
        object.__setattr__(obj, "ambient_dim", ech.n)
        object.__setattr__(obj, "basis", tuple(tuple(r) for r in ech.rows))
        return obj

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls.span(field, n, identity(field, n))

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors with the given indices."""
        return cls.span(field, n, [unit(field, n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivot_of(row) for row in self.basis)

    @cached_property
    def free_columns(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def _echelon(self) -> _Echelon:
        ech = _Echelon(self.field, self.ambient_dim)
        ech.rows = [list(r) for r in self.basis]
        ech.pivots = list(self.pivots)
        return ech

    def reduce(self, v: Sequence) -> Vector:
        """Residual of ``v`` after clearing this subspace's pivot columns."""
        return tuple(self._echelon().reduce(v))

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the canonical basis; ``v`` must lie in the space."""
        if v not in self:
            raise ValueError("vector not in subspace")
        return tuple(v[i] for i in self.pivots)

    def combine(self, coeffs: Sequence) -> Vector:
        out = [self.field.zero] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                out = [o + c * r for o, r in zip(out, row)]
        if self.field.p:
            out = [o % self.field.p for o in out]
        return tuple(out)

    def quotient_map(self) -> Matrix:
        """Matrix of k^n -> k^n / self in the coordinates of the free columns."""
        n = self.ambient_dim
        cols = []
        for j in range(n):
            r = self.reduce(unit(self.field, n, j))
            cols.append([r[i] for i in self.free_columns])
        return tuple(tuple(cols[j][a] for j in range(n)) for a in range(len(self.free_columns)))

    def sort_key(self) -> tuple:
        """Pivot columns first, then entries: subspaces reaching earlier coordinates come first."""
        return (self.pivots, self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __ge__(self, other: "Subspace") -> bool:
        return contains(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(self.field.format(c) for c in r) + ")" for r in self.basis)
        return f"Subspace<{self.field} dim {self.dim}/{self.ambient_dim}: {rows}>"


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionError(
            f"ambient mismatch: {a.field}^{a.ambient_dim} vs {b.field}^{b.ambient_dim}"
        )


def kernel(field: Field, m: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """{v : m v = 0} as a canonical subspace of k^ncols."""
    if ncols is None:
        if not m:
            raise DimensionError("ncols required for an empty matrix")
        ncols = len(m[0])
    ech = _Echelon(field, ncols)
    for row in m:
        if len(row) != ncols:
            raise DimensionError("ragged matrix")
        ech.insert(field.vector(row))
        if ech.full:
            break
    piv = set(ech.pivots)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(ech.rows, ech.pivots):
            c = row[f]
            if c:
                v[pc] = (-c) % field.p if field.p else -c
        basis.append(v)
    return Subspace.span(field, ncols, basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    ech = a._echelon()
    for row in b.basis:
        ech.insert(row)
    return Subspace._from_echelon(ech)


def sum_all(field: Field, n: int, spaces: Iterable[Subspace]) -> Subspace:
    ech = _Echelon(field, n)
    for s in spaces:
        if s.ambient_dim != n:
            raise DimensionError("ambient mismatch")
        for row in s.basis:
            ech.insert(row)
    return Subspace._from_echelon(ech)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b from the kernel of [A^T | -B^T]."""
    _check_same(a, b)
    field, n = a.field, a.ambient_dim
    if a.is_zero or b.is_zero:
        return Subspace.zero(field, n)
    da = a.dim
    neg = (lambda x: (-x) % field.p) if field.p else (lambda x: -x)
    rows = [
        [a.basis[i][t] for i in range(da)] + [neg(b.basis[j][t]) for j in range(b.dim)]
        for t in range(n)
    ]
    sol = kernel(field, rows, da + b.dim)
    return Subspace.span(field, n, (a.combine(v[:da]) for v in sol.basis))


def annihilator(x: Subspace) -> Subspace:
    """{f : f(v) = 0 for all v in x}, in dual-basis coordinates."""
    return kernel(x.field, x.basis, x.ambient_dim)


def contains(a: Subspace, b: Subspace) -> bool:
    _check_same(a, b)
    ech = a._echelon()
    return all(not any(ech.reduce(row)) for row in b.basis)


# ------------------------------------------------------------ small matrices


def unit(field: Field, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def identity(field: Field, n: int) -> Matrix:
    return tuple(unit(field, n, i) for i in range(n))


def mat_vec(field: Field, m: Sequence[Sequence], v: Sequence) -> Vector:
    out = tuple(sum((a * b for a, b in zip(row, v) if a and b), field.zero) for row in m)
    if field.p:
        out = tuple(x % field.p for x in out)
    return out


def vec_mat(field: Field, v: Sequence, m: Sequence[Sequence]) -> Vector:
    if not m:
        return ()
    out = [field.zero] * len(m[0])
    for c, row in zip(v, m):
        if c:
            out = [o + c * r for o, r in zip(out, row)]
    if field.p:
        out = [o % field.p for o in out]
    return tuple(out)


def mat_mul(field: Field, a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return tuple(vec_mat(field, row, b) for row in a)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*m))


def inverse(field: Field, m: Sequence[Sequence]) -> Matrix:
    """Inverse of a square matrix; raises ``ValueError`` when singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("inverse of a non-square matrix")
    aug = [list(field.vector(row)) + list(unit(field, n, i)) for i, row in enumerate(m)]
    red = rref(field, aug)
    for i in range(n):
        if tuple(red[i][:n]) != unit(field, n, i):
            raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)
