"""Complete cd-index of Bruhat intervals in symmetric groups."""

from ._cdindex import (
    CdIndexError,
    FlipUndefined,
    InvalidArgument,
    NotDecomposable,
    NotInSubring,
    ad_to_cd,
    bruhat_leq,
    cd_index,
    check_flip_condition,
    check_strong_flip_condition,
    complete_phi,
    expand_cd,
    export_dot,
    flag_cd_index,
    flip_pairing,
    length,
    reflection_order,
    scan_interval,
    shelling_decomposition,
    t_set,
    verify_coefficient,
)

__all__ = [
    "CdIndexError",
    "FlipUndefined",
    "InvalidArgument",
    "NotDecomposable",
    "NotInSubring",
    "ad_to_cd",
    "bruhat_leq",
    "cd_index",
    "check_flip_condition",
    "check_strong_flip_condition",
    "complete_phi",
    "expand_cd",
    "export_dot",
    "flag_cd_index",
    "flip_pairing",
    "length",
    "reflection_order",
    "scan_interval",
    "shelling_decomposition",
    "t_set",
    "verify_coefficient",
]
