"""Constructors for the stock algebras and random test-input generators.

The catalog covers the associative matrix algebras, the eight-dimensional
vector-matrix algebra (the split octonions), doubled algebras built by the
Cayley-Dickson recipe, and direct sums.  Recipe strings give the CLI a
reproducible, serializable way to name these.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Algebra, Element
from .errors import InputError
from .liederiv import CentralTerm, MapSpec, SampleBudget, compose
from .linalg import Matrix, fvec, kernel, zero_vec
from .sampling import random_poly, random_rational, rng_for
from .structure import IdempotentKind, center, commutator_subspace, derivation_algebra, verify_idempotent

_Z = Fraction(0)
_O = Fraction(1)


def matrix_algebra(n: int) -> Algebra:
    """Full n x n matrix algebra on the matrix units E_pq (row-major order)."""
    if n < 1:
        raise ValueError("matrix algebra needs n >= 1")
    dim = n * n
    idx = lambda p, q: p * n + q
    constants = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    if q == r:
                        v = [_Z] * dim
                        v[idx(p, s)] = _O
                        constants[idx(p, q)][idx(r, s)] = tuple(v)
    unit = [_Z] * dim
    for p in range(n):
        unit[idx(p, p)] = _O
    labels = [f"E{p+1}{q+1}" for p in range(n) for q in range(n)]
    return Algebra(constants, unit, labels)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def zorn() -> Algebra:
    """Vector-matrix algebra: scalar diagonal, 3-vector corners.

    Elements (a, v; w, b) multiply as
    (a1 a2 + v1.w2,  a1 v2 + b2 v1 - w1 x w2;  a2 w1 + b1 w2 + v1 x v2,  b1 b2 + w1.v2).
    Basis order: e1, u1, u2, u3, v1, v2, v3, e2.
    """
    def unpack(c):
        return c[0], c[1:4], c[4:7], c[7]

    def mul(c1, c2):
        a1, v1, w1, b1 = unpack(c1)
        a2, v2, w2, b2 = unpack(c2)
        a = a1 * a2 + _dot(v1, w2)
        v = tuple(a1 * x + b2 * y - z for x, y, z in zip(v2, v1, _cross(w1, w2)))
        w = tuple(a2 * x + b1 * y + z for x, y, z in zip(w1, w2, _cross(v1, v2)))
        b = b1 * b2 + _dot(w1, v2)
        return (a,) + v + w + (b,)

    basis = [tuple(_O if k == i else _Z for k in range(8)) for i in range(8)]
    constants = [[mul(basis[i], basis[j]) for j in range(8)] for i in range(8)]
    unit = (_O, _Z, _Z, _Z, _Z, _Z, _Z, _O)
    labels = ["e1", "u1", "u2", "u3", "v1", "v2", "v3", "e2"]
    return Algebra(constants, unit, labels)


@dataclass(frozen=True)
class InvolutiveAlgebra:
    """An algebra carrying a conjugation matrix, as Cayley-Dickson scaffolding."""

    algebra: Algebra
    conjugation: Matrix


def rationals() -> InvolutiveAlgebra:
    """The scalars with the trivial involution: the doubling seed."""
    return InvolutiveAlgebra(Algebra((((_O,),),), (_O,), ["1"]), Matrix.identity(1))


def cayley_dickson(base: InvolutiveAlgebra, mu) -> InvolutiveAlgebra:
    """Double an involutive algebra: (a,b)(c,d) = (ac + mu conj(d) b, da + b conj(c))."""
    mu = Fraction(mu)
    if mu == 0:
        raise ValueError("doubling parameter must be nonzero")
    alg, conj = base.algebra, base.conjugation
    n = alg.dim
    dim = 2 * n

    def pad(first, second):
        return tuple(first) + tuple(second)

    zero = zero_vec(n)
    constants = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            a = alg.basis_vec(i) if i < n else zero
            b = alg.basis_vec(i - n) if i >= n else zero
            c = alg.basis_vec(j) if j < n else zero
            d = alg.basis_vec(j - n) if j >= n else zero
            first = tuple(
                x + mu * y
                for x, y in zip(alg.mul_vec(a, c), alg.mul_vec(conj.apply(d), b))
            )
            second = tuple(
                x + y for x, y in zip(alg.mul_vec(d, a), alg.mul_vec(b, conj.apply(c)))
            )
            constants[i][j] = pad(first, second)
    unit = pad(alg.unit, zero)
    doubled = Algebra(constants, unit, [f"e{k}" for k in range(dim)])
    conj_rows = []
    for r in range(dim):
        if r < n:
            conj_rows.append(tuple(conj.rows[r]) + zero)
        else:
            conj_rows.append(zero + tuple(-x for x in Matrix.identity(n).rows[r - n]))
    return InvolutiveAlgebra(doubled, Matrix(tuple(conj_rows), dim))


def octonion_algebra(mus: Sequence) -> Algebra:
    """Iterated doubling of the scalars; three parameters give a dim-8 algebra."""
    cur = rationals()
    for mu in mus:
        cur = cayley_dickson(cur, mu)
    return cur.algebra


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product on the concatenated basis."""
    n, m = a.dim, b.dim
    dim = n + m
    constants = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            constants[i][j] = tuple(a.constants[i][j]) + zero_vec(m)
    for i in range(m):
        for j in range(m):
            constants[n + i][n + j] = zero_vec(n) + tuple(b.constants[i][j])
    unit = tuple(a.unit) + tuple(b.unit)
    labels = None
    if a.labels and b.labels:
        labels = [f"L.{s}" for s in a.labels] + [f"R.{s}" for s in b.labels]
    return Algebra(constants, unit, labels)


def find_idempotent(a: Algebra) -> Optional[Element]:
    """Search basis vectors b (b*b = b) and midpoints (1+b)/2 (b*b = 1)."""
    for i in range(a.dim):
        b = a.basis_vec(i)
        e = Element(a, b)
        if verify_idempotent(a, e) is IdempotentKind.NONTRIVIAL:
            return e
    half = Fraction(1, 2)
    for i in range(a.dim):
        b = a.basis_vec(i)
        if a.mul_vec(b, b) == a.unit:
            e = Element(a, tuple(half * (u + x) for u, x in zip(a.unit, b)))
            if verify_idempotent(a, e) is IdempotentKind.NONTRIVIAL:
                return e
    return None


def commutator_annihilating_functional(a: Algebra):
    """A covector vanishing on the whole commutator span (zero if none exists)."""
    comm = commutator_subspace(a)
    if comm.dim == 0:
        return a.unit  # anything works; pick a stable nonzero covector
    ker = kernel(Matrix(tuple(comm.basis), a.dim))
    return ker.basis[0] if ker.dim else zero_vec(a.dim)


def random_lie_derivation(a: Algebra, budget: SampleBudget, central_terms: int = 1) -> MapSpec:
    """Seeded random derivation-plus-central-term map, assembled via `compose`.

    The linear part is a random combination of the derivation-algebra basis;
    each nonlinear term is poly(functional . a) * z with the functional
    annihilating the commutator span, poly without constant term, and z a
    random central element.
    """
    rng = rng_for(budget.seed)
    ders = derivation_algebra(a)
    linear = Matrix.zeros(a.dim, a.dim)
    for dmat in ders:
        c = random_rational(rng, budget.height)
        if c:
            linear = linear + dmat.scale(c)
    terms = []
    if central_terms:
        ell = commutator_annihilating_functional(a)
        cen = center(a)
        for _ in range(central_terms):
            z = zero_vec(a.dim)
            for zb in cen.basis:
                c = random_rational(rng, budget.height)
                if c:
                    z = tuple(x + c * y for x, y in zip(z, zb))
            terms.append(CentralTerm(fvec(ell), random_poly(rng, height=budget.height), fvec(z)))
    return compose(a, linear, tuple(terms))


@dataclass(frozen=True)
class ConstructionRecipe:
    kind: str
    n: Optional[int] = None
    mus: Optional[tuple[Fraction, ...]] = None
    parts: Optional[tuple["ConstructionRecipe", ...]] = None

    def describe(self) -> str:
        if self.kind == "matrix":
            return f"matrix:{self.n}"
        if self.kind == "zorn":
            return "zorn"
        if self.kind == "cayley-dickson":
            return "cayley-dickson:" + ",".join(str(m) for m in self.mus)
        if self.kind == "sum":
            return "sum(" + "|".join(p.describe() for p in self.parts) + ")"
        return self.kind


_ALIASES = {
    "m2m2": "sum(matrix:2|matrix:2)",
    "zornq": "sum(zorn|matrix:1)",
}


def parse_recipe(text: str) -> ConstructionRecipe:
    """Recipe grammar: zorn | matrix:N | cayley-dickson:m1,m2,... | sum(r1|r2) | m2m2 | zornq."""
    text = text.strip()
    low = text.lower()
    if low in _ALIASES:
        return parse_recipe(_ALIASES[low])
    if low == "zorn":
        return ConstructionRecipe("zorn")
    if low.startswith("matrix:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad matrix recipe {text!r}")
        if n < 1:
            raise InputError("matrix recipe needs n >= 1")
        return ConstructionRecipe("matrix", n=n)
    if low.startswith(("cayley-dickson:", "cd:")):
        arg = text.split(":", 1)[1]
        try:
            mus = tuple(Fraction(s) for s in arg.split(","))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad doubling parameters {arg!r}")
        if not mus or any(m == 0 for m in mus):
            raise InputError("doubling parameters must be nonzero")
        return ConstructionRecipe("cayley-dickson", mus=mus)
    if low.startswith("sum(") and text.endswith(")"):
        inner = text[4:-1]
        depth = 0
        cut = None
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "|" and depth == 0:
                cut = i
                break
        if cut is None:
            raise InputError(f"sum recipe needs two parts: {text!r}")
        return ConstructionRecipe(
            "sum", parts=(parse_recipe(inner[:cut]), parse_recipe(inner[cut + 1:]))
        )
    raise InputError(f"unknown recipe {text!r}")


def build(recipe: ConstructionRecipe) -> Algebra:
    if recipe.kind == "matrix":
        return matrix_algebra(recipe.n)
    if recipe.kind == "zorn":
        return zorn()
    if recipe.kind == "cayley-dickson":
        return octonion_algebra(recipe.mus)
    if recipe.kind == "sum":
        return direct_sum(build(recipe.parts[0]), build(recipe.parts[1]))
    raise InputError(f"unknown recipe kind {recipe.kind!r}")


def canonical_idempotent(recipe: ConstructionRecipe, algebra: Algebra) -> Element:
    """The conventional nontrivial idempotent for a recipe.

    Matrix algebras use the first diagonal unit, the vector-matrix algebra its
    diagonal idempotent, sums the unit of the first summand; doubled algebras
    fall back to a small search.
    """
    if recipe.kind == "matrix":
        if recipe.n < 2:
            raise InputError("matrix:1 has no nontrivial idempotent")
        return algebra.basis_element(0)
    if recipe.kind == "zorn":
        return algebra.basis_element(0)
    if recipe.kind == "sum":
        left_dim = build(recipe.parts[0]).dim
        coeffs = tuple(algebra.unit[:left_dim]) + zero_vec(algebra.dim - left_dim)
        return Element(algebra, coeffs)
    found = find_idempotent(algebra)
    if found is None:
        raise InputError(f"no nontrivial idempotent found for recipe {recipe.describe()!r}")
    return found
