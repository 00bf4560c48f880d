"""Shifted tableau toolkit.

Mixed insertion and the deterministic mixed jeu de taquin that computes it,
extended Sagan-Worley rectification of Q-tableaux, the shifted plactic
relations, Schur P/Q polynomials with expansion in the P basis, and
exhaustive verification suites tying all of it together.
"""

from .shapes import (
    Cell,
    ContainmentError,
    Letter,
    Partition,
    SkewShape,
    compare_letters,
    diagonal_cells,
    high,
    is_strict_partition,
    low,
    make_skew,
    strict_partitions,
    strict_subpartitions,
)
from .tableaux import (
    ParseError,
    ShiftedTableau,
    content,
    enumerate_tableaux,
    is_q_tableau,
    is_semistandard,
    parse_tableau,
    print_tableau,
    raise_diagonals,
    standardize,
)
from .insertion import (
    LengthError,
    MarkerError,
    enumerate_hook_set,
    in_hook_set,
    is_hook_word,
    longest_hook_subword_brute,
    longest_hook_subword_length,
    mixed_insert_letter,
    mixed_insert_word,
    plactic_equivalent,
    relation_neighbors,
)
from .mixed_jdt import (
    BULLET,
    GAP,
    HoleTableau,
    NoInnerShapeError,
    SlideEvent,
    StuckError,
    check_rect_equals_insertion,
    mixed_rectify,
    oplus,
    staircase,
)
from .saganworley import (
    NoNeighborError,
    SWState,
    preimage_count,
    rectification_counter,
    skew_plactic_schur_p,
    southwestmost_marker,
    sw_rectify,
    sw_slide,
)
from .symfunc import (
    MismatchError,
    NotInSpanError,
    NotSymmetricError,
    SymPoly,
    expand_in_p,
    schur_p_poly,
    schur_q_poly,
    shifted_lr_coeffs,
    skew_schur_p_coeffs,
)
from .verify import SUITE_NAMES, VerifyResult, run_suite

__version__ = "0.1.0"
