"""finring: finite unital rings, their structural sets, and the class
predicates built on the power radical sqrtJ(R) = {x : some x^m lies in
J(R)}, together with a theorem-checking harness and CLI."""

from .analysis import (
    analysis,
    center,
    ideal_closure,
    idempotents,
    in_jacobson,
    in_sqrt_jacobson,
    is_unit_closed_subring,
    jacobson,
    nilpotents,
    sqrt_jacobson,
    unit_inverses,
    units,
)
from .build import (
    NAMED_GROUPS,
    QuotientRing,
    Subring,
    bt,
    corner,
    cyclic,
    cyclic_subgroups,
    gf,
    group_product,
    group_ring,
    matrix_ring,
    poly_quotient,
    product,
    quotient,
    subgroup_generated,
    subring_closure,
    trivial_extension,
    upper_triangular,
    zmod,
)
from .core import (
    DEFAULT_LIMITS,
    DEFAULT_SEED,
    ArgumentError,
    AxiomReport,
    ElementSet,
    FiniteRing,
    InternalConsistencyError,
    LimitError,
    Limits,
    dump_tables,
    parse_table_dump,
    verify_axioms,
)
from .expr import ParseError, evaluate, format_expr, format_group, parse, parse_and_build
from .groups import GroupTable
from .harness import (
    CLAIMS,
    Corpus,
    CorpusError,
    default_corpus,
    load_corpus,
    run_claim,
    run_suite,
)
from .predicates import (
    ClassReport,
    check_unit_class,
    classify,
    is_dedekind_finite,
    is_division,
    is_local,
    is_semisimple,
    is_sqrt_ju,
    is_two_sqrt_ju,
)

__version__ = "0.1.0"
