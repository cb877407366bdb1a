"""Signed permutations (elements of the hyperoctahedral group B_n) and i-inversions.

A signed permutation is stored as its window word ``(pi(1), ..., pi(n))``;
``pi(-k) = -pi(k)`` supplies the rest.  The i-inversion statistic is computed
two ways that share no code: :func:`inv_by_roots` counts positive roots sent to
negative roots in the type-B root system, :func:`inv_by_counting` uses the
closed-form count over later window entries.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterator

from .errors import (
    DegreeMismatchError,
    IndexOutOfRangeError,
    InvalidPermutationError,
    MalformedTextError,
)


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        for v in window:
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidPermutationError(f"window entries must be integers: {window}")
        if sorted(abs(v) for v in window) != list(range(1, n + 1)):
            raise InvalidPermutationError(
                f"absolute values of {window} are not a permutation of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, k: int) -> int:
        """Image of a signed point ``k`` in ``[-n..-1] u [1..n]``."""
        if k == 0 or abs(k) > self.n:
            raise IndexOutOfRangeError(k, self.n)
        v = self.window[abs(k) - 1]
        return v if k > 0 else -v

    @property
    def sigma(self) -> tuple:
        """Underlying unsigned permutation ``(|pi(1)|, ..., |pi(n)|)``."""
        return tuple(abs(v) for v in self.window)

    @property
    def signs(self) -> tuple:
        return tuple(1 if v > 0 else -1 for v in self.window)

    def __str__(self) -> str:
        return format_window(self)


def identity(n: int) -> SignedPermutation:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(p: SignedPermutation, q: SignedPermutation) -> SignedPermutation:
    """``p o q``: apply ``q`` first, then ``p``."""
    if p.n != q.n:
        raise DegreeMismatchError(p.n, q.n)
    return SignedPermutation(tuple(p(v) for v in q.window))


def inverse(p: SignedPermutation) -> SignedPermutation:
    inv = [0] * p.n
    for k, v in enumerate(p.window, start=1):
        # p(k) = v  =>  p^{-1}(|v|) = sign(v) * k
        inv[abs(v) - 1] = k if v > 0 else -k
    return SignedPermutation(tuple(inv))


def parse_window(text: str) -> SignedPermutation:
    """Read a window word such as ``"1 -3 4 2"`` or ``"1,-3,4,2"``."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    for t in tokens:
        if not re.fullmatch(r"[+-]?[0-9]+", t):
            raise MalformedTextError(text, f"{t!r} is not a signed integer")
    try:
        return SignedPermutation(tuple(int(t) for t in tokens))
    except InvalidPermutationError as exc:
        raise MalformedTextError(text, str(exc)) from None


def format_window(p: SignedPermutation) -> str:
    return " ".join(str(v) for v in p.window)


# -- root system of type B ---------------------------------------------------

E, PLUS, MINUS = "e", "plus", "minus"


@dataclass(frozen=True)
class Root:
    """``e_i`` (kind ``E``), ``e_i + e_j`` (``PLUS``) or ``e_i - e_j`` (``MINUS``)."""

    kind: str
    i: int
    j: int = 0

    def vector(self) -> Dict[int, int]:
        if self.kind == E:
            return {self.i: 1}
        if self.kind == PLUS:
            return {self.i: 1, self.j: 1}
        if self.kind == MINUS:
            return {self.i: 1, self.j: -1}
        raise ValueError(f"unknown root kind {self.kind!r}")


def positive_roots_at(n: int, i: int) -> Iterator[Root]:
    """The ``2(n-i)+1`` positive roots whose leading index is ``i``."""
    _check_index(i, n)
    yield Root(E, i)
    for j in range(i + 1, n + 1):
        yield Root(PLUS, i, j)
        yield Root(MINUS, i, j)


def positive_roots(n: int) -> Iterator[Root]:
    for i in range(1, n + 1):
        yield from positive_roots_at(n, i)


def apply_to_root(p: SignedPermutation, v) -> Dict[int, int]:
    """Image of ``v`` under ``p^{-1}`` acting on coordinates.

    The inverse relabels coordinates: ``w[m] = v[p^{-1}(m)]`` with
    ``v[-k] = -v[k]``.  Net effect: ``e_k`` goes to ``sign(p(k)) e_|p(k)|``.
    ``v`` is a :class:`Root` or an ``{index: coefficient}`` mapping.
    """
    return _relabel(_InverseAction(p), v)


class _InverseAction:
    __slots__ = ("n", "q", "where")

    def __init__(self, p):
        self.n = p.n
        self.q = inverse(p).window
        # where[k] = the coordinate m with |p^{-1}(m)| = k
        self.where = {abs(src): m for m, src in enumerate(self.q, start=1)}


def _relabel(action, v):
    vec = v.vector() if isinstance(v, Root) else dict(v)
    image = {}
    for k, c in vec.items():
        _check_index(k, action.n)
        if c:
            m = action.where[k]
            image[m] = c if action.q[m - 1] > 0 else -c
    return image


def is_negative_root(vec: Dict[int, int]) -> bool:
    """Whether a root vector lies in ``-Phi_n^+``.

    Roots have one or two non-zero coefficients, all ``+-1``; the root is
    negative exactly when its lowest-index coefficient is ``-1``.
    """
    support = sorted((k, c) for k, c in vec.items() if c)
    if not 1 <= len(support) <= 2 or any(c not in (1, -1) for _, c in support):
        raise ValueError(f"{vec} is not a root of type B")
    return support[0][1] < 0


def inv_by_roots(p: SignedPermutation, i: int) -> int:
    """Number of roots in ``Phi_{n,i}^+`` that ``p^{-1}`` sends into ``-Phi_n^+``."""
    action = _InverseAction(p)
    return sum(1 for v in positive_roots_at(p.n, i) if is_negative_root(_relabel(action, v)))


def inv_by_counting(p: SignedPermutation, i: int) -> int:
    _check_index(i, p.n)
    w = p.window
    j = abs(w[i - 1])
    smaller = larger = 0
    for k in range(i, p.n):
        if abs(w[k]) < j:
            smaller += 1
        else:
            larger += 1
    if w[i - 1] > 0:
        return smaller
    return 1 + smaller + 2 * larger


def code(p: SignedPermutation) -> tuple:
    """The inversion code ``(inv_1 p, ..., inv_n p)``."""
    return tuple(inv_by_counting(p, i) for i in range(1, p.n + 1))


def code_by_roots(p: SignedPermutation) -> tuple:
    return tuple(inv_by_roots(p, i) for i in range(1, p.n + 1))


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(i, n)

