"""Dense linear algebra over exact rationals.

Everything is a `fractions.Fraction`; there are no tolerances anywhere.
Subspaces store a reduced-row-echelon basis, so two equal subspaces have
identical representations and equality is syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def fvec(items: Iterable) -> Vec:
    """Coerce an iterable of ints/strings/Fractions to a rational vector."""
    return tuple(Fraction(x) for x in items)


def zero_vec(n: int) -> Vec:
    return (_ZERO,) * n


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def vec_dot(a: Vec, b: Vec) -> Fraction:
    acc = _ZERO
    for x, y in zip(a, b):
        if x and y:
            acc += x * y
    return acc


def is_zero_vec(a: Vec) -> bool:
    return not any(a)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; `cols` is explicit so 0-row stacks keep shape."""

    rows: tuple[Vec, ...]
    cols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.cols:
                raise ValueError("ragged matrix rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        frozen = tuple(fvec(r) for r in rows)
        if cols is None:
            if not frozen:
                raise ValueError("cols required for a 0-row matrix")
            cols = len(frozen[0])
        return cls(frozen, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((_ZERO,) * ncols,) * nrows, ncols)

    def apply(self, v: Sequence[Fraction]) -> Vec:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for row in self.rows:
            acc = _ZERO
            for m, x in zip(row, v):
                if m and x:
                    acc += m * x
            out.append(acc)
        return tuple(out)

    def col(self, j: int) -> Vec:
        return tuple(row[j] for row in self.rows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        bt = list(zip(*other.rows)) if other.rows else [()] * other.cols
        out = []
        for row in self.rows:
            new = []
            for bcol in bt:
                acc = _ZERO
                for x, y in zip(row, bcol):
                    if x and y:
                        acc += x * y
                new.append(acc)
            out.append(tuple(new))
        return Matrix(tuple(out), other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols or self.nrows != other.nrows:
            raise ValueError("shape mismatch in matrix sum")
        return Matrix(tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols or self.nrows != other.nrows:
            raise ValueError("shape mismatch in matrix difference")
        return Matrix(tuple(vec_sub(a, b) for a, b in zip(self.rows, other.rows)), self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-x for x in r) for r in self.rows), self.cols)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(vec_scale(c, r) for r in self.rows), self.cols)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix({self.nrows}x{self.cols}: {body})"


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def stack(matrices: Sequence[Matrix], cols: Optional[int] = None) -> Matrix:
    """Vertical concatenation; `cols` disambiguates an empty stack."""
    if matrices:
        cols = matrices[0].cols
        rows: list[Vec] = []
        for m in matrices:
            if m.cols != cols:
                raise ValueError("column mismatch in stack")
            rows.extend(m.rows)
        return Matrix(tuple(rows), cols)
    if cols is None:
        raise ValueError("cols required for an empty stack")
    return Matrix((), cols)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        src = None
        for r in range(pr, len(rows)):
            if rows[r][pc]:
                src = r
                break
        if src is None:
            continue
        rows[pr], rows[src] = rows[src], rows[pr]
        prow = rows[pr]
        inv = _ONE / prow[pc]
        if inv != 1:
            for c in range(pc, ncols):
                if prow[c]:
                    prow[c] *= inv
        for r in range(len(rows)):
            if r == pr:
                continue
            f = rows[r][pc]
            if f:
                row = rows[r]
                for c in range(pc, ncols):
                    if prow[c]:
                        row[c] -= f * prow[c]
        pivots.append(pc)
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns; the form is unique."""
    rows = [list(r) for r in m.rows]
    rows, pivots = _rref_rows(rows, m.cols)
    return Matrix(tuple(tuple(r) for r in rows), m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> "Subspace":
    """Canonical basis of the right null space {x : m x = 0}."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [_ZERO] * m.cols
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red.rows[r][fc]
        basis.append(tuple(v))
    return Subspace.span(m.cols, basis)


def solve(m: Matrix, b: Sequence[Fraction]) -> Optional[Vec]:
    """Some exact solution of m x = b, or None when inconsistent."""
    if len(b) != m.nrows:
        raise ValueError("right-hand side length mismatch")
    ncols = m.cols
    rows = [list(r) + [Fraction(x)] for r, x in zip(m.rows, b)]
    rows, pivots = _rref_rows(rows, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [_ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return tuple(x)


def invert(m: Matrix) -> Matrix:
    """Inverse of a square matrix; raises ValueError when singular."""
    if m.nrows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.cols
    rows = [list(r) + [_ONE if i == j else _ZERO for j in range(n)]
            for i, r in enumerate(m.rows)]
    rows, pivots = _rref_rows(rows, 2 * n)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(tuple(tuple(r[n:]) for r in rows[:n]), n)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held as the unique reduced-echelon basis (no zero rows)."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(fvec(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("spanning vector has wrong length")
        rows, pivots = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim, Matrix.identity(ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def reduce_vector(self, v: Sequence[Fraction]) -> Vec:
        """Residue of v after elimination against the basis; zero iff v is a member."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        w = list(Fraction(x) for x in v)
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)
            f = w[p]
            if f:
                for c in range(p, self.ambient_dim):
                    if row[c]:
                        w[c] -= f * row[c]
        return tuple(w)

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        return is_zero_vec(self.reduce_vector(v))

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked combination system."""
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        k, m = self.dim, other.dim
        if k == 0 or m == 0:
            return Subspace.zero(self.ambient_dim)
        rows = []
        for i in range(self.ambient_dim):
            rows.append(tuple(b[i] for b in self.basis) + tuple(-b[i] for b in other.basis))
        combos = kernel(Matrix(tuple(rows), k + m))
        vectors = []
        for c in combos.basis:
            v = [_ZERO] * self.ambient_dim
            for a, b in zip(c[:k], self.basis):
                if a:
                    for i, x in enumerate(b):
                        if x:
                            v[i] += a * x
            vectors.append(tuple(v))
        return Subspace.span(self.ambient_dim, vectors)

    def image_under(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(m.nrows, [m.apply(v) for v in self.basis])

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.nrows, [m.col(j) for j in range(m.cols)])


def restrict_map(m: Matrix, domain: Subspace) -> Matrix:
    """Columns are m applied to the domain's basis vectors."""
    cols = [m.apply(v) for v in domain.basis]
    return Matrix(tuple(tuple(c[i] for c in cols) for i in range(m.nrows)), len(cols))
