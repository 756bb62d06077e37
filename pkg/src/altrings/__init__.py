"""Exact computer algebra for finite-dimensional alternative rings."""

from .algebra import (
    Algebra,
    Element,
    associator,
    check_alternative,
    check_associative,
    check_flexible,
    commutator,
    find_nonassociative_triple,
    mult_operators,
    multiply,
)
from .catalog import (
    ConstructionRecipe,
    build,
    canonical_idempotent,
    cayley_dickson,
    direct_sum,
    find_idempotent,
    matrix_algebra,
    octonion_algebra,
    parse_recipe,
    random_lie_derivation,
    rationals,
    zorn,
)
from .liederiv import (
    CentralTerm,
    DecompositionResult,
    MapSpec,
    OpaqueMap,
    SampleBudget,
    check_hypotheses,
    check_lie_law,
    compose,
    decompose,
    evaluate,
    inner_f,
    normalize_at_idempotent,
    split_diagonal,
)
from .linalg import Matrix, Subspace, column_space, kernel, rank, rref, solve
from .peirce import (
    PeirceContext,
    check_conditions,
    make_context,
    verify_offdiag_centralizer,
    verify_prop_spade_club,
    verify_relations,
)
from .structure import (
    IdempotentKind,
    PrimalityResult,
    StructureReport,
    analyze,
    center,
    centralizer,
    check_prime,
    commutator_subspace,
    derivation_algebra,
    is_derivation,
    nucleus,
    verify_idempotent,
)

__version__ = "0.1.0"
