"""Structure-constant algebras over the rationals and their element calculus.

An algebra is a dimension, a rank-3 tensor c[i][j][k] with
basis_i * basis_j = sum_k c[i][j][k] basis_k, and a verified two-sided unit.
Identity checking (alternative / flexible / associative) works on basis
triples: the linearized identities are multilinear, so basis enumeration
decides them over characteristic zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import AlgebraMismatchError, UnitValidationError
from .linalg import Matrix, Vec, fvec, is_zero_vec, vec_add, vec_scale, vec_sub, zero_vec

_ZERO = Fraction(0)


class Algebra:
    """Immutable finite-dimensional unital algebra given by structure constants."""

    __slots__ = ("dim", "constants", "unit", "labels", "_table", "_hash")

    def __init__(self, constants: Sequence[Sequence[Sequence]], unit: Sequence,
                 labels: Optional[Sequence[str]] = None):
        dim = len(constants)
        if dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        tensor = tuple(
            tuple(fvec(constants[i][j]) for j in range(dim)) for i in range(dim)
        )
        for i in range(dim):
            if len(constants[i]) != dim:
                raise ValueError("structure tensor is not dim x dim x dim")
            for j in range(dim):
                if len(tensor[i][j]) != dim:
                    raise ValueError("structure tensor is not dim x dim x dim")
        self.dim = dim
        self.constants = tensor
        self.unit = fvec(unit)
        if len(self.unit) != dim:
            raise ValueError("unit vector has wrong length")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != dim:
                raise ValueError("labels length must equal dim")
        self.labels = labels
        # sparse view: _table[i][j] = ((k, c), ...) for nonzero c[i][j][k]
        self._table = tuple(
            tuple(tuple((k, c) for k, c in enumerate(row) if c) for row in plane)
            for plane in tensor
        )
        self._hash = hash((dim, tensor, self.unit))
        self._validate_unit()

    def _validate_unit(self):
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.mul_vec(self.unit, b) != b or self.mul_vec(b, self.unit) != b:
                raise UnitValidationError(
                    f"claimed unit fails on basis element {self.label(i)}"
                )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim == other.dim and self.constants == other.constants
                and self.unit == other.unit)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Algebra(dim={self.dim})"

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def basis_vec(self, i: int) -> Vec:
        return tuple(Fraction(1) if k == i else _ZERO for k in range(self.dim))

    # -- raw vector arithmetic (hot paths work on tuples, not Elements) --

    def mul_vec(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
        out = [_ZERO] * self.dim
        table = self._table
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = table[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                p = ai * bj
                for k, c in row[j]:
                    out[k] += p * c
        return tuple(out)

    def mul_basis(self, i: int, j: int) -> Vec:
        return self.constants[i][j]

    def left_mult_matrix(self, y: Sequence[Fraction]) -> Matrix:
        """Matrix of x -> y x in the algebra basis."""
        cols = [self.mul_vec(y, self.basis_vec(j)) for j in range(self.dim)]
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(self.dim)), self.dim)

    def right_mult_matrix(self, y: Sequence[Fraction]) -> Matrix:
        """Matrix of x -> x y in the algebra basis."""
        cols = [self.mul_vec(self.basis_vec(j), y) for j in range(self.dim)]
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(self.dim)), self.dim)

    # -- element constructors --

    def element(self, coeffs: Iterable) -> "Element":
        v = fvec(coeffs)
        if len(v) != self.dim:
            raise AlgebraMismatchError("coefficient vector has wrong length")
        return Element(self, v)

    def basis_element(self, i: int) -> "Element":
        return Element(self, self.basis_vec(i))

    def zero(self) -> "Element":
        return Element(self, zero_vec(self.dim))

    def one(self) -> "Element":
        return Element(self, self.unit)


@dataclass(frozen=True)
class Element:
    """Coefficient vector tied to its algebra; supports +, -, * (ring product)."""

    algebra: Algebra
    coeffs: Vec

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, vec_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, vec_sub(self.coeffs, other.coeffs))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, self.algebra.mul_vec(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, vec_scale(Fraction(other), self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, vec_scale(Fraction(other), self.coeffs))
        return NotImplemented

    def is_zero(self) -> bool:
        return is_zero_vec(self.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                name = self.algebra.label(i)
                terms.append(name if c == 1 else f"({c})*{name}")
        return " + ".join(terms) if terms else "0"


def multiply(a: Element, b: Element) -> Element:
    return a * b


def commutator(x: Element, y: Element) -> Element:
    """[x, y] = x y - y x."""
    x._check(y)
    alg = x.algebra
    return Element(alg, vec_sub(alg.mul_vec(x.coeffs, y.coeffs),
                                alg.mul_vec(y.coeffs, x.coeffs)))


def associator(x: Element, y: Element, z: Element) -> Element:
    """(x, y, z) = (x y) z - x (y z)."""
    x._check(y)
    x._check(z)
    alg = x.algebra
    xy_z = alg.mul_vec(alg.mul_vec(x.coeffs, y.coeffs), z.coeffs)
    x_yz = alg.mul_vec(x.coeffs, alg.mul_vec(y.coeffs, z.coeffs))
    return Element(alg, vec_sub(xy_z, x_yz))


def mult_operators(y: Element) -> tuple[Matrix, Matrix]:
    """Left and right multiplication operators (L_y, R_y) as matrices."""
    alg = y.algebra
    return alg.left_mult_matrix(y.coeffs), alg.right_mult_matrix(y.coeffs)


def _basis_associators(a: Algebra) -> list[list[list[Vec]]]:
    n = a.dim
    prods = a.constants
    out = [[[None] * n for _ in range(n)] for _ in range(n)]  # type: ignore[list-item]
    for i in range(n):
        bi = a.basis_vec(i)
        for j in range(n):
            pij = prods[i][j]
            for k in range(n):
                left = a.mul_vec(pij, a.basis_vec(k))
                right = a.mul_vec(bi, prods[j][k])
                out[i][j][k] = vec_sub(left, right)
    return out


def check_alternative(a: Algebra) -> bool:
    """(x,x,y) = 0 = (y,x,x), decided by the linearized identities on basis triples."""
    return alternativity_witness(a) is None


def alternativity_witness(a: Algebra) -> Optional[tuple[int, int, int]]:
    """Basis triple violating (i,j,k)+(j,i,k)=0 or (i,j,k)+(i,k,j)=0, if any."""
    ass = _basis_associators(a)
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not is_zero_vec(vec_add(ass[i][j][k], ass[j][i][k])):
                    return (i, j, k)
                if not is_zero_vec(vec_add(ass[i][j][k], ass[i][k][j])):
                    return (i, j, k)
    return None


def check_flexible(a: Algebra) -> bool:
    """(x,y,x) = 0, via the linearization (x,y,z) + (z,y,x) = 0 on basis triples."""
    ass = _basis_associators(a)
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not is_zero_vec(vec_add(ass[i][j][k], ass[k][j][i])):
                    return False
    return True


def check_associative(a: Algebra) -> bool:
    return find_nonassociative_triple(a) is None


def find_nonassociative_triple(a: Algebra) -> Optional[tuple[int, int, int]]:
    """First basis triple with nonzero associator, or None when associative."""
    ass = _basis_associators(a)
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not is_zero_vec(ass[i][j][k]):
                    return (i, j, k)
    return None
