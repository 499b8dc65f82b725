"""Exact combinatorics of nilpotent orbits and minimal reduction types."""

from .elliptic import EllipticClass, delta, elliptic_classes, rt_min, rtmin_char
from .jinduction import LeviIndex, interior_splits, j_induce, ls_induce_orbit
from .minimal import (
    CandidatePair,
    SkeletonConfig,
    VerifyReport,
    block_candidates,
    count_irreducibles,
    enumerate_skeleton,
    kl_fibers,
    missing_irreducibles,
    stratum_label,
    two_special_set,
    verify_class,
    verify_family,
)
from .orbits import (
    GroupType,
    Orbit,
    centralizer_dim,
    closure_leq,
    is_special,
    list_orbits,
    parse_group,
    parse_orbit,
    springer_dim,
    validate_orbit,
)
from .springer import (
    WChar,
    b_invariant,
    is_springer_value,
    parse_wchar,
    springer_char,
    springer_char_inverse,
)
from .tables import (
    DiscrepancyReport,
    TableRecord,
    character_aliases,
    check_tables,
    load_all,
    load_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
