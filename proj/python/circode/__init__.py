"""Minimum distance tools for double and triple circulant codes.

Codes are passed as header strings ("011101001") or as lists of generator rows.
"""

from ._circode import (  # noqa: F401
    DimensionError,
    ParseError,
    __version__,
    brute_force_distance,
    canonical_rotation,
    chen_distance,
    circulant_exact_distance,
    construct,
    encode,
    ga_message_distance,
    load_bounds,
    mim_estimate,
    mim_ga_estimate,
    osd_decode,
    search,
    verify_claim,
)
