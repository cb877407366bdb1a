"""Exception types shared by the hyperoct modules.

Every domain error derives from :class:`HyperoctError` (itself a ``ValueError``)
so callers such as the CLI can catch them in one place.
"""


class HyperoctError(ValueError):
    pass


class InvalidDigitError(HyperoctError):
    """A digit exceeds the bound ``2i+1`` of its position ``i`` (counted from the right)."""

    def __init__(self, position, value, bound):
        self.position = position
        self.value = value
        self.bound = bound
        super().__init__(
            f"invalid digit {value} at position {position}: must lie in 0..{bound}"
        )


class MalformedTextError(HyperoctError):
    def __init__(self, text, reason):
        self.text = text
        self.reason = reason
        super().__init__(f"malformed text {text!r}: {reason}")


class WidthOverflowError(HyperoctError):
    def __init__(self, value, width):
        self.value = value
        self.width = width
        super().__init__(f"{value} does not fit in {width} hyperoctahedral digits")


class InvalidPermutationError(HyperoctError):
    pass


class DegreeMismatchError(HyperoctError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"degree mismatch: {left} != {right}")


class IndexOutOfRangeError(HyperoctError, IndexError):
    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(f"index {index} out of range 1..{n}")


class RankOutOfRangeError(HyperoctError):
    def __init__(self, rank, maximum):
        self.rank = rank
        self.maximum = maximum
        super().__init__(f"rank {rank} out of range 1..{maximum}")


class DegreeTooLargeError(HyperoctError):
    def __init__(self, n, guard):
        self.n = n
        self.guard = guard
        super().__init__(f"degree {n} exceeds enumeration guard {guard}")
