"""Binary strings and their dyadic-interval geometry.

A BitString is an immutable MSB-first bit sequence stored as a
(value, length) pair.  The empty string (written '' in text form) is a
valid value and acts as the neutral element for concatenation.

Every bit string w also names the half-open interval of real numbers in
[0, 1) whose binary expansion starts with w.  Two strings are
prefix-comparable exactly when their intervals intersect, and w1 is a
prefix of w2 exactly when the interval of w1 contains the interval of
w2.  The interval endpoints are dyadic rationals and are kept exact.
"""

from __future__ import annotations

from .errors import NotAPrefix


class BitString:
    """Immutable bit sequence; bit 0 is the most significant bit."""

    __slots__ = ("value", "length")

    def __init__(self, value=0, length=0):
        if length < 0:
            raise ValueError("length must be non-negative")
        if value < 0 or value >> length:
            raise ValueError(f"value {value} does not fit in {length} bits")
        self.value = value
        self.length = length

    @classmethod
    def from_text(cls, text):
        """Parse a string of '0'/'1' characters; '' gives the empty string."""
        value = 0
        for ch in text:
            if ch == "0":
                value <<= 1
            elif ch == "1":
                value = (value << 1) | 1
            else:
                raise ValueError(f"invalid bit character {ch!r}")
        return cls(value, len(text))

    def text(self):
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"BitString({self.text()!r})"

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return self.value == other.value and self.length == other.length

    def __hash__(self):
        return hash((self.value, self.length))

    def __iter__(self):
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def __getitem__(self, i):
        return self.bit(i)

    def bit(self, i):
        """Bit at position i, counting from the most significant end."""
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        return (self.value >> (self.length - 1 - i)) & 1

    def __add__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString((self.value << other.length) | other.value,
                         self.length + other.length)

    def append(self, bit):
        return BitString((self.value << 1) | (bit & 1), self.length + 1)

    def prefix(self, n):
        """The first n bits."""
        if not 0 <= n <= self.length:
            raise ValueError(f"prefix length {n} out of range")
        return BitString(self.value >> (self.length - n), n)

    def suffix(self, n):
        """Everything after the first n bits."""
        if not 0 <= n <= self.length:
            raise ValueError(f"suffix start {n} out of range")
        return BitString(self.value & ((1 << (self.length - n)) - 1),
                         self.length - n)


EMPTY = BitString(0, 0)


def sort_key(w):
    """Deterministic ordering: by length, then numerically (lexicographic)."""
    return (w.length, w.value)


def is_prefix(w1, w2):
    """True when w1 is a (not necessarily proper) prefix of w2."""
    return w1.length <= w2.length and \
        (w2.value >> (w2.length - w1.length)) == w1.value


def is_strict_prefix(w1, w2):
    return w1.length < w2.length and \
        (w2.value >> (w2.length - w1.length)) == w1.value


def comparable(w1, w2):
    """True when one argument is a prefix of the other."""
    if w1.length <= w2.length:
        return (w2.value >> (w2.length - w1.length)) == w1.value
    return (w1.value >> (w1.length - w2.length)) == w2.value


def strip_prefix(prefix, w):
    """Remove a leading prefix from w; raises NotAPrefix otherwise."""
    if not is_prefix(prefix, w):
        raise NotAPrefix(f"{prefix.text()!r} is not a prefix of {w.text()!r}")
    return BitString(w.value & ((1 << (w.length - prefix.length)) - 1),
                     w.length - prefix.length)


def longest_common_prefix(w1, w2):
    """The longest string that is a prefix of both arguments."""
    n = min(w1.length, w2.length)
    a = w1.value >> (w1.length - n)
    b = w2.value >> (w2.length - n)
    while n and a != b:
        a >>= 1
        b >>= 1
        n -= 1
    return BitString(a, n)


class DyadicRational:
    """Exact rational numerator / 2**exponent, kept with odd-or-zero numerator."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator, exponent):
        if numerator < 0:
            raise ValueError("numerator must be non-negative")
        if numerator == 0:
            exponent = 0
        else:
            while numerator & 1 == 0:
                numerator >>= 1
                exponent -= 1
        self.numerator = numerator
        self.exponent = exponent

    def _aligned(self, other):
        e = max(self.exponent, other.exponent)
        return (self.numerator << (e - self.exponent),
                other.numerator << (e - other.exponent))

    def __eq__(self, other):
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator == other.numerator and \
            self.exponent == other.exponent

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __lt__(self, other):
        a, b = self._aligned(other)
        return a < b

    def __le__(self, other):
        a, b = self._aligned(other)
        return a <= b

    def __float__(self):
        return self.numerator / (1 << self.exponent) if self.exponent >= 0 \
            else float(self.numerator << -self.exponent)

    def __repr__(self):
        return f"DyadicRational({self.numerator}, {self.exponent})"


class DyadicInterval:
    """A half-open interval [lo, hi) with exact dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        if not lo < hi:
            raise ValueError("interval must be non-empty")
        self.lo = lo
        self.hi = hi

    def intersects(self, other):
        return self.lo < other.hi and other.lo < self.hi

    def contains(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def __eq__(self, other):
        if not isinstance(other, DyadicInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"DyadicInterval({self.lo!r}, {self.hi!r})"


def to_fraction(w):
    """The value of w read as a binary fraction 0.w, as an exact dyadic."""
    return DyadicRational(w.value, w.length)


def to_interval(w):
    """The half-open interval of reals whose binary expansion starts with w."""
    return DyadicInterval(DyadicRational(w.value, w.length),
                          DyadicRational(w.value + 1, w.length))


def interval_intersects(a, b):
    return a.intersects(b)


def interval_contains(outer, inner):
    return outer.contains(inner)
