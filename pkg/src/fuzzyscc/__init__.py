"""Fuzzy argumentation frameworks under Goedel semantics, solved directly or
SCC-recursively."""
from .attacks import (
    AttackStatus,
    attack_status,
    best_weakening,
    characteristic,
    defends,
    outparents,
    set_sufficiently_attacks,
    weaken,
)
from .core import (
    FAF,
    DegreeLattice,
    FAFError,
    FAFParseError,
    FuzzySet,
    breakpoint_lattice,
    complement,
    degree,
    format_degree,
    fuzzy_subset,
    grid_lattice,
    make_faf,
    parse_faf,
    restrict,
    serialize_faf,
    tnorm,
)
from .recursive import (
    SccContext,
    defended_part,
    gf_check,
    gf_enumerate,
    grounded_scc,
    limited_part,
    prune_tolerable_attacks,
    residual_part,
)
from .scc import compute_sccs, condensation, is_single_scc
from .semantics import (
    BudgetExceeded,
    SemanticsKind,
    enumerate_extensions,
    grounded,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_preferred,
    is_stable,
)

__version__ = "0.1.0"
