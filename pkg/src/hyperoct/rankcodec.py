"""Ranking and unranking of signed permutations.

The rank of ``pi`` in B_n (ordered lexicographically under
``1 < 2 < ... < n < -n < ... < -1``) is one more than the value of its
inversion code ``inv_1 : ... : inv_n`` read as an n-digit hyperoctahedral
numeral.  Unranking inverts this: each digit ``g_i`` of ``k - 1`` is split by
:func:`map_m` into an unsigned Lehmer digit and a sign, the Lehmer digits are
decoded by selection from a shrinking list, and the signs are applied
positionwise.
"""

from dataclasses import dataclass

from .errors import HyperoctError, RankOutOfRangeError
from .numeral import HyperNumeral, from_integer, place_value, to_integer, validate
from .sigperm import SignedPermutation, code


@dataclass(frozen=True)
class SignedLehmerPair:
    """``m = (m_{n-1}, ..., m_0)`` and ``eps = (eps_{n-1}, ..., eps_0)``."""

    m: tuple
    eps: tuple


def map_m(level: int, gamma: int):
    """Split digit ``gamma`` at position ``level`` into ``(m, sign)``.

    ``(gamma, +1)`` when ``gamma <= level``, else ``(1 + 2*level - gamma, -1)``.
    """
    if not 0 <= gamma <= 2 * level + 1:
        raise HyperoctError(f"digit {gamma} out of range 0..{2 * level + 1} at level {level}")
    if gamma <= level:
        return gamma, 1
    return 1 + 2 * level - gamma, -1


def decode_lehmer(m) -> tuple:
    """Unsigned permutation whose inversion table is ``m = (m_{n-1}, ..., m_0)``.

    Position ``i`` takes the ``(m_{n-i} + 1)``-th smallest value still unused.
    """
    m = tuple(m)
    n = len(m)
    for idx, mi in enumerate(m):
        level = n - 1 - idx
        if not 0 <= mi <= level:
            raise HyperoctError(f"Lehmer digit m_{level} = {mi} out of range 0..{level}")
    live = list(range(1, n + 1))
    return tuple(live.pop(mi) for mi in m)


def code_numeral(p: SignedPermutation) -> HyperNumeral:
    """The inversion code as a fixed-width numeral (``d_{n-i} = inv_i``)."""
    return validate(code(p), fixed_width=True)


def rank(p: SignedPermutation) -> int:
    return 1 + to_integer(code_numeral(p))


def order(n: int) -> int:
    """Size of B_n, i.e. the largest rank."""
    return place_value(n)


def lehmer_pair(digits: HyperNumeral) -> SignedLehmerPair:
    """Apply :func:`map_m` to every digit of a fixed-width numeral."""
    k = digits.width
    pairs = [map_m(k - 1 - idx, g) for idx, g in enumerate(digits.digits)]
    return SignedLehmerPair(tuple(mi for mi, _ in pairs), tuple(s for _, s in pairs))


@dataclass(frozen=True)
class UnrankTrace:
    """Intermediate values of one unranking, kept for inspection."""

    digits: HyperNumeral
    pair: SignedLehmerPair
    sigma: tuple
    result: SignedPermutation


def unrank_numeral(digits: HyperNumeral) -> UnrankTrace:
    """Signed permutation of degree ``digits.width`` whose code is ``digits``."""
    pair = lehmer_pair(digits)
    sigma = decode_lehmer(pair.m)
    # position i (1-based) takes the sign produced by digit g_{n-i}, i.e. pair.eps[i-1]
    window = tuple(s * v for s, v in zip(pair.eps, sigma))
    return UnrankTrace(digits, pair, sigma, SignedPermutation(window))


def unrank_trace(k: int, n: int) -> UnrankTrace:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    top = order(n)
    if not 1 <= k <= top:
        raise RankOutOfRangeError(k, top)
    return unrank_numeral(from_integer(k - 1, width=n))


def unrank(k: int, n: int) -> SignedPermutation:
    """The ``k``-th element (1-based) of B_n."""
    return unrank_trace(k, n).result
