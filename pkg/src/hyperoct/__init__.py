"""Hyperoctahedral numeral system and ranking of signed permutations."""

from .errors import (
    DegreeMismatchError,
    DegreeTooLargeError,
    HyperoctError,
    IndexOutOfRangeError,
    InvalidDigitError,
    InvalidPermutationError,
    MalformedTextError,
    RankOutOfRangeError,
    WidthOverflowError,
)
from .numeral import (
    HyperNumeral,
    format_numeral,
    from_integer,
    parse,
    place_value,
    successor,
    to_integer,
    validate,
)
from .rankcodec import SignedLehmerPair, decode_lehmer, map_m, rank, unrank, unrank_trace
from .sigperm import (
    Root,
    SignedPermutation,
    apply_to_root,
    code,
    compose,
    format_window,
    identity,
    inv_by_counting,
    inv_by_roots,
    inverse,
    is_negative_root,
    parse_window,
)

__version__ = "0.1.0"
