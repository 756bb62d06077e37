"""Global structural invariants: nucleus, center, derivations, primality.

All subspace answers come from exact kernel computations. The only
probabilistic verdict in this module is `check_prime` without a witness: the
annihilator search quantifies over an infinite ring, so absence of a witness
is reported as ProbablyPrime over the seeded sample, never as a theorem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import (
    Algebra,
    Element,
    check_alternative,
    check_associative,
    check_flexible,
)
from .errors import NotAlternativeError
from .linalg import Matrix, Subspace, is_zero_vec, kernel, stack
from .sampling import random_nonzero_vector, rng_for


@lru_cache(maxsize=None)
def nucleus(a: Algebra) -> Subspace:
    """Elements r with (x,y,r) = (x,r,y) = (r,x,y) = 0 for all x, y."""
    n = a.dim
    blocks = []
    lmat = [a.left_mult_matrix(a.basis_vec(i)) for i in range(n)]
    rmat = [a.right_mult_matrix(a.basis_vec(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            prod = a.constants[i][j]
            # (b_i, b_j, r): L_{b_i b_j} - L_{b_i} L_{b_j}
            blocks.append(a.left_mult_matrix(prod) - lmat[i] * lmat[j])
            # (b_i, r, b_j): R_{b_j} L_{b_i} - L_{b_i} R_{b_j}
            blocks.append(rmat[j] * lmat[i] - lmat[i] * rmat[j])
            # (r, b_i, b_j): R_{b_j} R_{b_i} - R_{b_i b_j}
            blocks.append(rmat[j] * rmat[i] - a.right_mult_matrix(prod))
    return kernel(stack(blocks, n))


@lru_cache(maxsize=None)
def center(a: Algebra) -> Subspace:
    """Nuclear elements commuting with everything."""
    n = a.dim
    blocks = [a.right_mult_matrix(a.basis_vec(i)) - a.left_mult_matrix(a.basis_vec(i))
              for i in range(n)]
    commuting = kernel(stack(blocks, n))
    return nucleus(a) & commuting


def centralizer(a: Algebra, s: Subspace) -> Subspace:
    """Elements of the whole algebra commuting with every element of s."""
    if s.ambient_dim != a.dim:
        raise ValueError("subspace does not live in this algebra")
    if s.dim == 0:
        return Subspace.full(a.dim)
    blocks = [a.right_mult_matrix(v) - a.left_mult_matrix(v) for v in s.basis]
    return kernel(stack(blocks, a.dim))


@lru_cache(maxsize=None)
def commutator_subspace(a: Algebra) -> Subspace:
    """Span of all commutators [x, y], computed from basis pairs."""
    n = a.dim
    vectors = []
    for i in range(n):
        for j in range(i + 1, n):
            c = tuple(x - y for x, y in zip(a.constants[i][j], a.constants[j][i]))
            if any(c):
                vectors.append(c)
    return Subspace.span(n, vectors)


def _leibniz_rows(a: Algebra) -> Matrix:
    """Linear system on vec(d), d an n x n matrix with unknowns d[r][c] at r*n+c:
    d(b_i b_j) - d(b_i) b_j - b_i d(b_j) = 0 for all basis pairs."""
    n = a.dim
    c = a.constants
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [0] * (n * n)
                for m in range(n):
                    if c[i][j][m]:
                        row[k * n + m] += c[i][j][m]
                    if c[m][j][k]:
                        row[m * n + i] -= c[m][j][k]
                    if c[i][m][k]:
                        row[m * n + j] -= c[i][m][k]
                if any(row):
                    rows.append(row)
    return Matrix.from_rows(rows, n * n)


@lru_cache(maxsize=None)
def derivation_algebra(a: Algebra) -> tuple[Matrix, ...]:
    """Basis of all matrices satisfying the Leibniz rule on every basis pair."""
    n = a.dim
    sols = kernel(_leibniz_rows(a))
    return tuple(
        Matrix(tuple(tuple(v[r * n + c] for c in range(n)) for r in range(n)), n)
        for v in sols.basis
    )


@lru_cache(maxsize=None)
def derivation_span(a: Algebra) -> Subspace:
    """Derivation algebra as a subspace of vectorized matrices (for membership)."""
    n = a.dim
    return Subspace.span(
        n * n, [tuple(x for row in d.rows for x in row) for d in derivation_algebra(a)]
    )


def is_derivation(a: Algebra, d: Matrix) -> bool:
    """Exact Leibniz check of one matrix on all basis pairs."""
    n = a.dim
    cols = [d.col(j) for j in range(n)]
    for i in range(n):
        bi = a.basis_vec(i)
        for j in range(n):
            lhs = d.apply(a.constants[i][j])
            rhs = tuple(
                x + y
                for x, y in zip(a.mul_vec(cols[i], a.basis_vec(j)), a.mul_vec(bi, cols[j]))
            )
            if lhs != rhs:
                return False
    return True


class IdempotentKind(enum.Enum):
    NOT_IDEMPOTENT = "not-idempotent"
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


def verify_idempotent(a: Algebra, e: Element) -> IdempotentKind:
    """e*e = e decides idempotency; 0 and the unit count as trivial."""
    v = e.coeffs
    if a.mul_vec(v, v) != v:
        return IdempotentKind.NOT_IDEMPOTENT
    if is_zero_vec(v) or v == a.unit:
        return IdempotentKind.TRIVIAL
    return IdempotentKind.NONTRIVIAL


@dataclass(frozen=True)
class PrimalityResult:
    """Outcome of the annihilator search; witness None means ProbablyPrime."""

    witness: Optional[tuple[Element, Element]]
    candidates_tried: int
    seed: int

    @property
    def probably_prime(self) -> bool:
        return self.witness is None


def check_prime(a: Algebra, trials: int, seed: int) -> PrimalityResult:
    """Search for nonzero a0, b with (a0 x) b = 0 for every basis x.

    Candidates a0 are the basis vectors plus `trials` seeded random nonzero
    vectors.  Any hit is returned as an exact, substitution-verified witness;
    exhaustion means ProbablyPrime.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not check_alternative(a):
        raise NotAlternativeError("primality criterion applies to alternative rings")
    n = a.dim
    rng = rng_for(seed)
    candidates = [a.basis_vec(i) for i in range(n)]
    candidates += [random_nonzero_vector(rng, n) for _ in range(trials)]
    for cand in candidates:
        prods = [a.mul_vec(cand, a.basis_vec(k)) for k in range(n)]
        blocks = [a.left_mult_matrix(p) for p in prods]
        ker = kernel(stack(blocks, n))
        if ker.dim > 0:
            b = ker.basis[0]
            for p in prods:
                if not is_zero_vec(a.mul_vec(p, b)):
                    raise AssertionError("witness failed substitution check")
            return PrimalityResult((Element(a, cand), Element(a, b)), len(candidates), seed)
    return PrimalityResult(None, len(candidates), seed)


@dataclass(frozen=True)
class StructureReport:
    nucleus: Subspace
    center: Subspace
    derivation_dim: int
    is_alternative: bool
    is_flexible: bool
    is_associative: bool


def analyze(a: Algebra) -> StructureReport:
    nuc = nucleus(a)
    cen = center(a)
    assert nuc.contains(cen), "center must sit inside the nucleus"
    rep = StructureReport(
        nucleus=nuc,
        center=cen,
        derivation_dim=len(derivation_algebra(a)),
        is_alternative=check_alternative(a),
        is_flexible=check_flexible(a),
        is_associative=check_associative(a),
    )
    if rep.is_associative:
        assert nuc.dim == a.dim, "associative algebra must have full nucleus"
    return rep
