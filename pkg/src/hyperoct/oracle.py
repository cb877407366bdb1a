"""Brute-force reference ordering of B_n.

Enumerates every window word, sorts by the value order
``1 < 2 < ... < n < -n < ... < -1`` and reads ranks off the sorted list.
Nothing here touches inversion statistics or the numeral system, so it can
check :mod:`hyperoct.rankcodec` independently.
"""

import itertools
from functools import lru_cache
from math import factorial

from .errors import DegreeMismatchError, DegreeTooLargeError
from .sigperm import SignedPermutation

DEFAULT_GUARD = 6


def value_key(v: int, n: int) -> int:
    """Position of signed value ``v`` in the order ``1..n, -n..-1`` (0-based)."""
    return v - 1 if v > 0 else 2 * n + v


def lex_key(p: SignedPermutation) -> tuple:
    return tuple(value_key(v, p.n) for v in p.window)


def compare_lex(a: SignedPermutation, b: SignedPermutation) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    if a.n != b.n:
        raise DegreeMismatchError(a.n, b.n)
    ka, kb = lex_key(a), lex_key(b)
    return (ka > kb) - (ka < kb)


def _check_guard(n, guard):
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if n > guard:
        raise DegreeTooLargeError(n, guard)


def enumerate_all(n: int, guard: int = DEFAULT_GUARD) -> list:
    """All ``2**n * n!`` elements of B_n, in generation order."""
    _check_guard(n, guard)
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * v for s, v in zip(signs, perm))))
    assert len(out) == (2 ** n) * factorial(n)
    return out


@lru_cache(maxsize=None)
def _sorted_windows(n: int) -> tuple:
    elems = enumerate_all(n, guard=max(n, DEFAULT_GUARD))
    return tuple(p.window for p in sorted(elems, key=lex_key))


@lru_cache(maxsize=None)
def _rank_table(n: int) -> dict:
    return {w: k for k, w in enumerate(_sorted_windows(n), start=1)}


def sorted_group(n: int, guard: int = DEFAULT_GUARD) -> list:
    """B_n in lexicographic order; position ``k-1`` holds the element of rank ``k``."""
    _check_guard(n, guard)
    return [SignedPermutation(w) for w in _sorted_windows(n)]


def reference_rank(p: SignedPermutation, guard: int = DEFAULT_GUARD) -> int:
    """1 + number of elements of B_n strictly before ``p``."""
    _check_guard(p.n, guard)
    return _rank_table(p.n)[p.window]
