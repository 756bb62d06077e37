"""Peirce decomposition relative to a nontrivial idempotent.

For e1 nontrivial idempotent and e2 = 1 - e1, the four corner projections
a -> e_i a e_j are explicit matrices, so "component lies in R_ij" and the
corner conditions all become exact kernel questions.  Index convention:
corners are addressed 0/1 in code and printed 1/2 in reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, Element, check_alternative
from .errors import (
    AmbiguityError,
    NotAlternativeError,
    NotIdempotentError,
    PreconditionFailedError,
    TrivialIdempotentError,
)
from .linalg import Matrix, Subspace, column_space, kernel, rank, restrict_map, stack
from .report import Check
from .sampling import random_rational, rng_for
from .structure import IdempotentKind, center, centralizer, verify_idempotent


class PeirceContext:
    """Idempotent pair with corner projections and corner subspaces."""

    __slots__ = ("algebra", "e1", "e2", "proj", "spaces")

    def __init__(self, algebra: Algebra, e1: Element, e2: Element,
                 proj: tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]],
                 spaces: tuple[tuple[Subspace, Subspace], tuple[Subspace, Subspace]]):
        self.algebra = algebra
        self.e1 = e1
        self.e2 = e2
        self.proj = proj
        self.spaces = spaces

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.spaces[0][0].dim, self.spaces[0][1].dim,
                self.spaces[1][0].dim, self.spaces[1][1].dim)

    def component(self, a: Element, i: int, j: int) -> Element:
        return Element(self.algebra, self.proj[i][j].apply(a.coeffs))

    def decompose(self, a: Element) -> tuple[Element, Element, Element, Element]:
        """Corner components (a11, a12, a21, a22); they sum back to a exactly."""
        if a.algebra is not self.algebra and a.algebra != self.algebra:
            raise ValueError("element belongs to a different algebra")
        return (self.component(a, 0, 0), self.component(a, 0, 1),
                self.component(a, 1, 0), self.component(a, 1, 1))

    def __repr__(self):
        return f"PeirceContext(dims={self.dims})"


def make_context(algebra: Algebra, e1: Element) -> PeirceContext:
    """Build and validate the full Peirce context for a nontrivial idempotent."""
    kind = verify_idempotent(algebra, e1)
    if kind is IdempotentKind.NOT_IDEMPOTENT:
        raise NotIdempotentError("supplied element is not idempotent")
    if kind is IdempotentKind.TRIVIAL:
        raise TrivialIdempotentError("idempotent must differ from 0 and the unit")
    if not check_alternative(algebra):
        raise NotAlternativeError("Peirce decomposition requires an alternative algebra")

    e2 = algebra.one() - e1
    lm = [algebra.left_mult_matrix(e.coeffs) for e in (e1, e2)]
    rm = [algebra.right_mult_matrix(e.coeffs) for e in (e1, e2)]
    proj_rows = []
    for i in range(2):
        row = []
        for j in range(2):
            p = rm[j] * lm[i]
            if p != lm[i] * rm[j]:
                raise AmbiguityError(
                    f"(e{i+1} a) e{j+1} != e{i+1} (a e{j+1}) on some basis element"
                )
            row.append(p)
        proj_rows.append(tuple(row))
    proj = tuple(proj_rows)

    total = proj[0][0] + proj[0][1] + proj[1][0] + proj[1][1]
    if total != Matrix.identity(algebra.dim):
        raise AmbiguityError("corner projections do not sum to the identity")
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    prod = proj[i][j] * proj[k][l]
                    expected = proj[i][j] if (i, j) == (k, l) else None
                    if expected is None:
                        if not prod.is_zero():
                            raise AmbiguityError("corner projections are not orthogonal")
                    elif prod != expected:
                        raise AmbiguityError("corner projection is not idempotent")

    spaces = tuple(
        tuple(column_space(proj[i][j]) for j in range(2)) for i in range(2)
    )
    if sum(spaces[i][j].dim for i in range(2) for j in range(2)) != algebra.dim:
        raise AmbiguityError("corner dimensions do not sum to the algebra dimension")
    return PeirceContext(algebra, e1, e2, proj, spaces)


@dataclass(frozen=True)
class RelationViolation:
    relation: str
    x: Element
    y: Element
    product: Element


@dataclass(frozen=True)
class RelationReport:
    violations: tuple[RelationViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_relations(ctx: PeirceContext) -> RelationReport:
    """Check the corner multiplication rules on Peirce-basis pairs.

    (i) R_ij R_jl in R_il; (ii) R_ij R_ij in R_ji; (iii) other corner products
    vanish; (iv) squares in off-diagonal corners vanish, checked directly and
    through the polarization x y + y x = 0.
    """
    alg = ctx.algebra
    bad: list[RelationViolation] = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    if j == k:
                        name, target = f"(i) R{i+1}{j+1}R{k+1}{l+1}<=R{i+1}{l+1}", ctx.spaces[i][l]
                    elif (i, j) == (k, l):
                        name, target = f"(ii) R{i+1}{j+1}R{i+1}{j+1}<=R{j+1}{i+1}", ctx.spaces[j][i]
                    else:
                        name, target = f"(iii) R{i+1}{j+1}R{k+1}{l+1}=0", None
                    for x in ctx.spaces[i][j].basis:
                        for y in ctx.spaces[k][l].basis:
                            p = alg.mul_vec(x, y)
                            ok = not any(p) if target is None else target.contains_vector(p)
                            if not ok:
                                bad.append(RelationViolation(
                                    name, Element(alg, x), Element(alg, y), Element(alg, p)))
    for (i, j) in ((0, 1), (1, 0)):
        basis = ctx.spaces[i][j].basis
        for x in basis:
            sq = alg.mul_vec(x, x)
            if any(sq):
                bad.append(RelationViolation(
                    f"(iv) x{i+1}{j+1}^2=0", Element(alg, x), Element(alg, x), Element(alg, sq)))
        for a in range(len(basis)):
            for b in range(len(basis)):
                anti = tuple(
                    u + v for u, v in zip(alg.mul_vec(basis[a], basis[b]),
                                          alg.mul_vec(basis[b], basis[a]))
                )
                if any(anti):
                    bad.append(RelationViolation(
                        f"(iv) xy+yx=0 on R{i+1}{j+1}",
                        Element(alg, basis[a]), Element(alg, basis[b]), Element(alg, anti)))
    return RelationReport(tuple(bad))


@dataclass(frozen=True)
class ConditionsReport:
    checks: tuple[Check, Check, Check, Check]

    @property
    def all_hold(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed(self) -> Optional[Check]:
        for c in self.checks:
            if not c.ok:
                return c
        return None


def _annihilator_in(alg: Algebra, domain: Subspace, multipliers: Subspace,
                    side: str) -> Optional[Element]:
    """Nonzero x in `domain` killed by every multiplier (x*r or r*x), if any."""
    if domain.dim == 0:
        return None
    blocks = []
    for r in multipliers.basis:
        op = alg.right_mult_matrix(r) if side == "right" else alg.left_mult_matrix(r)
        blocks.append(restrict_map(op, domain))
    if not blocks:
        coeffs = (1,) + (0,) * (domain.dim - 1)
    else:
        ker = kernel(stack(blocks, domain.dim))
        if ker.dim == 0:
            return None
        coeffs = ker.basis[0]
    v = [0] * alg.dim
    for c, b in zip(coeffs, domain.basis):
        if c:
            for idx, x in enumerate(b):
                v[idx] += c * x
    return Element(alg, tuple(v))


def check_conditions(ctx: PeirceContext, seed: int = 0, samples: int = 20) -> ConditionsReport:
    """Corner conditions (1)-(4).

    (1)-(3) are linear in the quantified element, so kernel triviality over the
    corner bases decides them exactly.  (4) is exact when the center is a
    line (left multiplication by the basis element must be invertible) and
    sampled otherwise; the verdict mode records which.
    """
    alg = ctx.algebra
    s = ctx.spaces
    checks = []

    w = _annihilator_in(alg, s[0][1], s[1][0], "right") or \
        _annihilator_in(alg, s[1][0], s[0][1], "right")
    checks.append(Check("condition-1", w is None, "exact",
                        witness=None if w is None else repr(w),
                        detail="x_ij R_ji = 0 forces x_ij = 0"))

    w = _annihilator_in(alg, s[0][0], s[0][1], "right") or \
        _annihilator_in(alg, s[0][0], s[1][0], "left")
    checks.append(Check("condition-2", w is None, "exact",
                        witness=None if w is None else repr(w),
                        detail="x_11 R_12 = 0 or R_21 x_11 = 0 forces x_11 = 0"))

    w = _annihilator_in(alg, s[1][1], s[0][1], "left") or \
        _annihilator_in(alg, s[1][1], s[1][0], "right")
    checks.append(Check("condition-3", w is None, "exact",
                        witness=None if w is None else repr(w),
                        detail="R_12 x_22 = 0 or x_22 R_21 = 0 forces x_22 = 0"))

    cen = center(alg)
    if cen.dim == 0:
        checks.append(Check("condition-4", True, "exact", detail="center is zero; vacuous"))
    elif cen.dim == 1:
        ok = rank(alg.left_mult_matrix(cen.basis[0])) == alg.dim
        checks.append(Check("condition-4", ok, "exact",
                            witness=None if ok else repr(Element(alg, cen.basis[0])),
                            detail="z R = R for nonzero central z (center is a line)"))
    else:
        rng = rng_for(seed)
        ok = True
        witness = None
        cands = list(cen.basis)
        for _ in range(samples):
            v = tuple(random_rational(rng) for _ in range(cen.dim))
            if any(v):
                combo = [0] * alg.dim
                for c, b in zip(v, cen.basis):
                    for idx, x in enumerate(b):
                        combo[idx] += c * x
                cands.append(tuple(combo))
        for z in cands:
            if rank(alg.left_mult_matrix(z)) != alg.dim:
                ok = False
                witness = repr(Element(alg, z))
                break
        checks.append(Check("condition-4", ok, "sampled", witness=witness,
                            detail=f"center dim {cen.dim} > 1; basis plus {samples} samples"))
    return ConditionsReport(tuple(checks))


def _require_conditions_123(ctx: PeirceContext):
    rep = check_conditions(ctx)
    for c in rep.checks[:3]:
        if not c.ok:
            raise PreconditionFailedError(
                f"{c.name} fails (witness {c.witness}); proposition needs (1)-(3)"
            )


def verify_prop_spade_club(ctx: PeirceContext) -> tuple[bool, bool]:
    """Diagonal elements commuting with an off-diagonal corner are central.

    Spade: centralizer(R_12) meet (R_11 + R_22) inside the center; club is the
    R_21 analogue.  Requires corner conditions (1)-(3).
    """
    _require_conditions_123(ctx)
    alg = ctx.algebra
    cen = center(alg)
    diag = ctx.spaces[0][0] + ctx.spaces[1][1]
    spade = cen.contains(centralizer(alg, ctx.spaces[0][1]) & diag)
    club = cen.contains(centralizer(alg, ctx.spaces[1][0]) & diag)
    return spade, club


def verify_offdiag_centralizer(ctx: PeirceContext) -> bool:
    """Centralizer of an off-diagonal corner sits inside corner + center."""
    _require_conditions_123(ctx)
    alg = ctx.algebra
    cen = center(alg)
    for (i, j) in ((0, 1), (1, 0)):
        target = ctx.spaces[i][j] + cen
        if not target.contains(centralizer(alg, ctx.spaces[i][j])):
            return False
    return True
