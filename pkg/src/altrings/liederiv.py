"""Lie multiplicative derivations and their splitting into derivation + center map.

A map D (not assumed additive) satisfying D([x,y]) = [D(x),y] + [x,D(y)] is
represented either in closed form (`MapSpec`: a linear part plus finitely many
polynomial central terms) or as an opaque callback (`OpaqueMap`).  `decompose`
splits such a map into an additive derivation `delta` (a matrix) and a
center-valued residual `tau` vanishing on commutators, following the corner
construction: normalize D at the idempotent with an inner correction, read off
delta on the off-diagonal corners directly, and strip the unique central part
on the diagonal corners.

Verification policy: identities that are multilinear in the quantified
variables (Leibniz for matrices, corner containments of linear maps) are
decided exactly on basis tuples; statements about non-additive maps are
checked on basis tuples plus seeded random samples and labeled "sampled",
except where the MapSpec form makes an exact structural decision possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .algebra import Algebra, Element
from .errors import (
    AlgebraMismatchError,
    InternalInvariantError,
    LieLawViolatedError,
    NonUniqueSplitError,
    NormalizationFailedError,
    NoSplitError,
    NotCentralError,
    NotDerivationError,
)
from .linalg import (
    Matrix,
    Vec,
    fvec,
    invert,
    is_zero_vec,
    kernel,
    solve,
    vec_add,
    vec_sub,
    zero_vec,
)
from .peirce import PeirceContext
from .report import Check
from .sampling import random_rational, random_vector, rng_for
from .structure import center, commutator_subspace, is_derivation

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SampleBudget:
    """Seed and sample counts for the probabilistic side of the checks."""

    seed: int
    pair_samples: int = 20
    element_samples: int = 20
    height: int = 9

    def __post_init__(self):
        if self.pair_samples < 1 or self.element_samples < 1:
            raise ValueError("sample counts must be at least 1")


@dataclass(frozen=True)
class CentralTerm:
    """One nonlinear contribution a -> poly(functional . a) * central."""

    functional: Vec
    poly: tuple[Fraction, ...]  # coefficient at index d multiplies s**d
    central: Vec

    def eval_scalar(self, s: Fraction) -> Fraction:
        acc = _ZERO
        power = Fraction(1)
        for d, c in enumerate(self.poly):
            if d:
                power *= s
            if c:
                acc += c * power
        return acc


@dataclass(frozen=True)
class MapSpec:
    """Closed-form map: D(a) = linear . a + sum_t poly_t(functional_t . a) central_t.

    Central elements are verified central and polynomials have zero constant
    term at construction, so D(0) = 0 holds for every instance.
    """

    algebra: Algebra
    linear: Matrix
    terms: tuple[CentralTerm, ...] = ()

    def __post_init__(self):
        n = self.algebra.dim
        if self.linear.nrows != n or self.linear.cols != n:
            raise ValueError("linear part must be dim x dim")
        cen = center(self.algebra)
        for t in self.terms:
            if len(t.functional) != n or len(t.central) != n:
                raise ValueError("central term has wrong dimensions")
            if t.poly and t.poly[0] != 0:
                raise ValueError("central-term polynomial must have zero constant term")
            if not cen.contains_vector(t.central):
                raise NotCentralError(
                    f"term target {Element(self.algebra, t.central)!r} is not central"
                )

    @property
    def is_linear(self) -> bool:
        """True when every nonlinear term is inert (zero polynomial, target, or functional)."""
        return all(
            not any(t.poly) or is_zero_vec(t.central) or is_zero_vec(t.functional)
            for t in self.terms
        )

    @property
    def is_identically_zero(self) -> bool:
        return self.linear.is_zero() and self.is_linear

    def eval_vec(self, v: Vec) -> Vec:
        out = list(self.linear.apply(v))
        for t in self.terms:
            s = _ZERO
            for f, x in zip(t.functional, v):
                if f and x:
                    s += f * x
            val = t.eval_scalar(s)
            if val:
                for i, z in enumerate(t.central):
                    if z:
                        out[i] += val * z
        return tuple(out)

    def __call__(self, a: Element) -> Element:
        if a.algebra is not self.algebra and a.algebra != self.algebra:
            raise AlgebraMismatchError("element belongs to a different algebra")
        return Element(self.algebra, self.eval_vec(a.coeffs))

    def scale(self, c) -> "MapSpec":
        c = Fraction(c)
        return MapSpec(self.algebra, self.linear.scale(c),
                       tuple(CentralTerm(t.functional, tuple(c * p for p in t.poly), t.central)
                             for t in self.terms))


@dataclass(frozen=True)
class OpaqueMap:
    """Opaque evaluation callback; all checks against it are sample-based."""

    algebra: Algebra
    fn: Callable[[Element], Element]

    def eval_vec(self, v: Vec) -> Vec:
        return self.fn(Element(self.algebra, v)).coeffs

    def __call__(self, a: Element) -> Element:
        if a.algebra is not self.algebra and a.algebra != self.algebra:
            raise AlgebraMismatchError("element belongs to a different algebra")
        return Element(self.algebra, self.eval_vec(a.coeffs))


MapLike = Union[MapSpec, OpaqueMap]


def evaluate(d: MapLike, a: Element) -> Element:
    return d(a)


def _shifted(d: MapLike, delta: Matrix) -> MapLike:
    """The map a -> d(a) - delta a, in closed form when possible."""
    if isinstance(d, MapSpec):
        return MapSpec(d.algebra, d.linear - delta, d.terms)
    mat = delta
    return OpaqueMap(d.algebra, lambda a, _d=d, _m=mat: _d(a) - Element(a.algebra, _m.apply(a.coeffs)))


def check_lie_law(d: MapLike, budget: SampleBudget) -> Check:
    """D([x,y]) = [D(x),y] + [x,D(y)] on basis pairs plus sampled pairs.

    Exact for maps with no effective nonlinear term (the defect is bilinear);
    sampled otherwise.
    """
    alg = d.algebra
    n = alg.dim
    exact = isinstance(d, MapSpec) and d.is_linear
    pairs = [(alg.basis_vec(i), alg.basis_vec(j)) for i in range(n) for j in range(n) if i != j]
    rng = rng_for(budget.seed)
    if not exact:
        pairs += [(random_vector(rng, n, budget.height), random_vector(rng, n, budget.height))
                  for _ in range(budget.pair_samples)]
    for x, y in pairs:
        comm = vec_sub(alg.mul_vec(x, y), alg.mul_vec(y, x))
        lhs = d.eval_vec(comm)
        dx, dy = d.eval_vec(x), d.eval_vec(y)
        rhs = vec_add(vec_sub(alg.mul_vec(dx, y), alg.mul_vec(y, dx)),
                      vec_sub(alg.mul_vec(x, dy), alg.mul_vec(dy, x)))
        if lhs != rhs:
            return Check("lie-law", False, "exact" if exact else "sampled",
                         witness=f"x={Element(alg, x)!r}, y={Element(alg, y)!r}")
    return Check("lie-law", True, "exact" if exact else "sampled")


def inner_f(algebra: Algebra, y: Element, z: Element) -> Matrix:
    """Inner correction [L_y,L_z] + [L_y,R_z] + [R_y,R_z].

    Operators compose left to right here (x S T means T(S(x))), so as matrices
    the bracket [S, T] is M_T M_S - M_S M_T.  In an alternative algebra the
    result is a derivation; that is re-verified and failure raises.
    """
    ly = algebra.left_mult_matrix(y.coeffs)
    ry = algebra.right_mult_matrix(y.coeffs)
    lz = algebra.left_mult_matrix(z.coeffs)
    rz = algebra.right_mult_matrix(z.coeffs)
    f = (lz * ly - ly * lz) + (rz * ly - ly * rz) + (rz * ry - ry * rz)
    if not is_derivation(algebra, f):
        raise NotDerivationError("inner correction fails the Leibniz rule "
                                 "(is the algebra alternative?)")
    return f


@dataclass(frozen=True)
class HypothesesReport:
    a: Check
    b: Check

    @property
    def both_hold(self) -> bool:
        return self.a.ok and self.b.ok


def _corner_samples(ctx: PeirceContext, i: int, rng, count: int, height: int) -> list[Vec]:
    basis = ctx.spaces[i][i].basis
    out = list(basis)
    for _ in range(count):
        v = [_ZERO] * ctx.algebra.dim
        for b in basis:
            c = random_rational(rng, height)
            if c:
                for idx, x in enumerate(b):
                    if x:
                        v[idx] += c * x
        out.append(tuple(v))
    return out


def check_hypotheses(ctx: PeirceContext, d: MapLike, budget: SampleBudget) -> HypothesesReport:
    """Corner hypotheses: e2 D(R_11) e2 inside Z e2, and e1 D(R_22) e1 inside Z e1.

    Checked on the corner basis plus sampled corner elements; exact for purely
    linear maps (the containment is then linear in the corner argument).
    """
    alg = ctx.algebra
    cen = center(alg)
    exact = isinstance(d, MapSpec) and d.is_linear
    rng = rng_for(budget.seed)
    checks = []
    for which, i in (("a", 0), ("b", 1)):
        other = 1 - i
        target = cen.image_under(ctx.proj[other][other])
        count = 0 if exact else budget.element_samples
        ok, witness = True, None
        for v in _corner_samples(ctx, i, rng, count, budget.height):
            img = ctx.proj[other][other].apply(d.eval_vec(v))
            if not target.contains_vector(img):
                ok, witness = False, (f"a{i+1}{i+1}={Element(alg, v)!r} -> corner "
                                      f"{Element(alg, img)!r} outside Z*e{other+1}")
                break
        checks.append(Check(f"hypothesis-{which}", ok, "exact" if exact else "sampled",
                            witness=witness))
    return HypothesesReport(checks[0], checks[1])


def normalize_at_idempotent(ctx: PeirceContext, d: MapLike) -> tuple[MapLike, Element, Matrix]:
    """Subtract the inner correction built from the off-diagonal parts of D(e1).

    Returns (D', y, f) with D' = D - f, y the off-diagonal part of D(e1), and
    f the inner correction at (y, -e1).  Postcondition, checked exactly:
    D'(e1) and D'(e2) are central.
    """
    alg = ctx.algebra
    de1 = d(ctx.e1)
    y = ctx.component(de1, 0, 1) + ctx.component(de1, 1, 0)
    f = inner_f(alg, y, -ctx.e1)
    shifted = _shifted(d, f)
    cen = center(alg)
    for e, name in ((ctx.e1, "e1"), (ctx.e2, "e2")):
        img = shifted.eval_vec(e.coeffs)
        if not cen.contains_vector(img):
            raise NormalizationFailedError(
                f"D'({name}) = {Element(alg, img)!r} is not central; "
                "the map is not a Lie derivation or corner conditions fail"
            )
    return shifted, y, f


def split_diagonal(ctx: PeirceContext, c: Element, side: int) -> tuple[Element, Element]:
    """Write a diagonal-corner value c as b + z, b in R_ii, z central.

    For side 1 the central part is pinned by matching the (2,2) corner; the
    solution must exist (else NoSplit: the corner hypothesis fails) and be
    unique (else NonUnique: corner conditions (2)/(3) fail).
    """
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    alg = ctx.algebra
    other = 2 - side  # 0-based index of the opposite corner
    cen = center(alg)
    proj = ctx.proj[other][other]
    cols = [proj.apply(z) for z in cen.basis]
    system = Matrix(tuple(tuple(col[r] for col in cols) for r in range(alg.dim)),
                    len(cols))
    if kernel(system).dim > 0:
        raise NonUniqueSplitError(
            "central elements are not separated by the opposite corner; "
            "corner conditions (2)/(3) are violated"
        )
    rhs = proj.apply(c.coeffs)
    combo = solve(system, rhs)
    if combo is None:
        raise NoSplitError(
            f"no central element matches the corner of {c!r}; "
            f"hypothesis {'a' if side == 1 else 'b'} is violated"
        )
    z = [_ZERO] * alg.dim
    for w, zb in zip(combo, cen.basis):
        if w:
            for idx, x in enumerate(zb):
                if x:
                    z[idx] += w * x
    zel = Element(alg, tuple(z))
    b = c - zel
    if not ctx.spaces[side - 1][side - 1].contains_vector(b.coeffs):
        raise NoSplitError(f"residue {b!r} does not lie in the diagonal corner")
    return b, zel


@dataclass(frozen=True)
class DecompositionResult:
    """Derivation part, center-valued residual, the normalization data
    (y, z, f with f the inner correction at (y, z)), and the per-step
    verification checks."""

    algebra: Algebra
    delta: Matrix
    tau: MapLike
    correction_y: Element
    correction_z: Element
    correction_f: Matrix
    normalized: MapLike
    checks: tuple[Check, ...]
    budget: SampleBudget

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _adapted_basis(ctx: PeirceContext) -> list[tuple[int, int, Vec]]:
    out = []
    for i in range(2):
        for j in range(2):
            for v in ctx.spaces[i][j].basis:
                out.append((i, j, v))
    return out


def _delta_value(ctx: PeirceContext, shifted: MapLike, i: int, j: int, v: Vec) -> Vec:
    """Construction rule for delta' on one Peirce component (raises on failure)."""
    alg = ctx.algebra
    img = shifted.eval_vec(v)
    if i != j:
        if not ctx.spaces[i][j].contains_vector(img):
            raise LieLawViolatedError(
                f"D'({Element(alg, v)!r}) = {Element(alg, img)!r} leaves corner "
                f"R{i+1}{j+1}; the map is not a Lie derivation"
            )
        return img
    off = vec_add(ctx.proj[0][1].apply(img), ctx.proj[1][0].apply(img))
    if not is_zero_vec(off):
        raise LieLawViolatedError(
            f"D'({Element(alg, v)!r}) has off-diagonal part {Element(alg, off)!r}; "
            "the map is not a Lie derivation"
        )
    b, _z = split_diagonal(ctx, Element(alg, img), i + 1)
    return b.coeffs


def decompose(ctx: PeirceContext, d: MapLike, budget: SampleBudget) -> DecompositionResult:
    """Split a Lie multiplicative derivation as delta + tau.

    Callers are expected to have checked the Lie law, corner conditions
    (1)-(4), and the corner hypotheses first; violations surface here as
    precondition errors from the construction steps.  Failures of the final
    verification raise InternalInvariantError: with honest inputs they cannot
    happen.
    """
    alg = ctx.algebra
    checks: list[Check] = []

    shifted, y, f = normalize_at_idempotent(ctx, d)
    checks.append(Check("normalized-e1-central", True, "exact"))
    checks.append(Check("normalized-e2-central", True, "exact"))

    adapted = _adapted_basis(ctx)
    values = [_delta_value(ctx, shifted, i, j, v) for (i, j, v) in adapted]
    checks.append(Check("corner-images", True, "sampled",
                        detail="off-diagonal images stay in their corner; "
                               "diagonal images split as corner + center"))

    basis_mat = Matrix(tuple(tuple(v[r] for (_, _, v) in adapted) for r in range(alg.dim)),
                       alg.dim)
    value_mat = Matrix(tuple(tuple(val[r] for val in values) for r in range(alg.dim)),
                       alg.dim)
    delta_prime = value_mat * invert(basis_mat)
    delta = delta_prime + f

    if isinstance(d, MapSpec):
        tau: MapLike = MapSpec(alg, d.linear - delta, d.terms)
    else:
        tau = _shifted(d, delta)

    # -- verification --

    if not is_derivation(alg, delta):
        raise InternalInvariantError(
            "delta fails the Leibniz rule; either an internal bug or the input "
            "was not a genuine Lie derivation (run the Lie-law check)"
        )
    checks.append(Check("delta-leibniz", True, "exact"))

    rng = rng_for(budget.seed)
    n = alg.dim
    for _ in range(budget.element_samples):
        v = random_vector(rng, n, budget.height)
        parts = [(i, j, ctx.proj[i][j].apply(v)) for i in range(2) for j in range(2)]
        rule = zero_vec(n)
        for i, j, part in parts:
            if any(part):
                rule = vec_add(rule, _delta_value(ctx, shifted, i, j, part))
        if rule != delta_prime.apply(v):
            raise InternalInvariantError(
                "matrix extension of delta disagrees with the corner construction "
                f"at {Element(alg, v)!r}"
            )
    checks.append(Check("delta-matches-construction", True, "sampled",
                        detail=f"{budget.element_samples} random elements"))

    cen = center(alg)
    if isinstance(tau, MapSpec):
        bad = next((k for k in range(n) if not cen.contains_vector(tau.linear.col(k))), None)
        checks.append(Check("tau-central", bad is None, "exact",
                            witness=None if bad is None else
                            f"tau({alg.label(bad)}) off the center"))
        if bad is not None:
            raise InternalInvariantError("tau has a non-central linear column")
    else:
        for _ in range(budget.element_samples):
            v = random_vector(rng, n, budget.height)
            if not cen.contains_vector(tau.eval_vec(v)):
                raise InternalInvariantError(
                    f"tau({Element(alg, v)!r}) is not central"
                )
        checks.append(Check("tau-central", True, "sampled",
                            detail=f"{budget.element_samples} random elements"))

    comm = commutator_subspace(alg)
    if isinstance(tau, MapSpec):
        ok = all(is_zero_vec(tau.linear.apply(c)) for c in comm.basis)
        for t in tau.terms:
            if not any(t.poly):
                continue
            ok = ok and all(
                sum((f * x for f, x in zip(t.functional, c)), _ZERO) == 0
                for c in comm.basis
            )
        mode = "exact"
    else:
        ok = True
        mode = "sampled"
    pairs = [(alg.basis_vec(i), alg.basis_vec(j)) for i in range(n) for j in range(n) if i < j]
    pairs += [(random_vector(rng, n, budget.height), random_vector(rng, n, budget.height))
              for _ in range(budget.pair_samples)]
    witness = None
    for x, yv in pairs:
        c = vec_sub(alg.mul_vec(x, yv), alg.mul_vec(yv, x))
        if not is_zero_vec(tau.eval_vec(c)):
            ok = False
            witness = f"x={Element(alg, x)!r}, y={Element(alg, yv)!r}"
            break
    checks.append(Check("tau-kills-commutators", ok, mode, witness=witness))
    if not ok:
        raise InternalInvariantError(f"tau does not vanish on a commutator ({witness})")

    if isinstance(d, MapSpec):
        checks.append(Check("almost-additive", True, "exact",
                            detail="nonlinear defects land in the span of central targets"))
    else:
        ok = True
        witness = None
        for _ in range(budget.pair_samples):
            x = random_vector(rng, n, budget.height)
            yv = random_vector(rng, n, budget.height)
            defect = vec_sub(d.eval_vec(vec_add(x, yv)),
                             vec_add(d.eval_vec(x), d.eval_vec(yv)))
            if not cen.contains_vector(defect):
                ok, witness = False, f"x={Element(alg, x)!r}, y={Element(alg, yv)!r}"
                break
        checks.append(Check("almost-additive", ok, "sampled", witness=witness))
        if not ok:
            raise InternalInvariantError("additivity defect left the center")

    return DecompositionResult(alg, delta, tau, y, -ctx.e1, f, shifted, tuple(checks), budget)


def compose(algebra: Algebra, delta: Matrix, terms: tuple[CentralTerm, ...] = ()) -> MapSpec:
    """Assemble delta + tau as a MapSpec, validating both halves.

    delta must satisfy the Leibniz rule; every nonlinear term must be central
    (checked by MapSpec) and must vanish on commutators, which for one
    polynomial term means its functional annihilates the commutator span.
    """
    if not is_derivation(algebra, delta):
        raise NotDerivationError("linear part fails the Leibniz rule on a basis pair")
    comm = commutator_subspace(algebra)
    for t in terms:
        if not any(t.poly) or is_zero_vec(fvec(t.central)):
            continue
        for c in comm.basis:
            s = sum((f * x for f, x in zip(t.functional, c)), _ZERO)
            if s != 0:
                raise LieLawViolatedError(
                    "central-term functional does not vanish on the commutator "
                    "span; the composed map would break the Lie product rule"
                )
    return MapSpec(algebra, delta, tuple(terms))
