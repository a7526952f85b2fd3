"""Operations on finite sets of binary strings.

A word set here is any non-empty finite collection of BitString values
(duplicates are ignored).  The central notion is the full-prefix
closure: a string v belongs to the closure of a set s when every
infinite bit sequence starting with v passes through a member of s.
Equivalently, either some member of s is a prefix of v, or both
one-bit extensions of v belong to the closure.

``reduce`` returns the minimal elements of that closure.  The result is
always prefix-free, covers exactly the same infinite sequences as the
input, and is the canonical representative used when comparing modes.
"""

from __future__ import annotations

import itertools

from .bitstring import (BitString, is_prefix, longest_common_prefix,
                        sort_key, strip_prefix)
from .errors import CapExceeded, InvalidSet, MemberTooLong

# all_strings refuses to materialize more than 2**ALL_STRINGS_CAP words
ALL_STRINGS_CAP = 20

# enumerate_basic_modes is super-exponential in n; 3 covers practical use
BASIC_MODE_CAP = 3


def _as_set(words):
    ws = frozenset(words)
    if not ws:
        raise InvalidSet("word set must be non-empty")
    return ws


def common_prefix(words):
    """The longest string that is a prefix of every member."""
    ws = _as_set(words)
    it = iter(ws)
    acc = next(it)
    for w in it:
        if acc.length == 0:
            break
        acc = longest_common_prefix(acc, w)
    return acc


def is_prefix_free(words):
    """True when no member is a proper prefix of another member."""
    ws = sorted(_as_set(words), key=sort_key)
    for i, w1 in enumerate(ws):
        for w2 in ws[i + 1:]:
            if w1.length < w2.length and is_prefix(w1, w2):
                return False
    return True


def _covered(vlen, vval, lengths, members):
    # true when some member is a prefix of the node (vlen, vval)
    for l in lengths:
        if l > vlen:
            return False
        if (l, vval >> (vlen - l)) in members:
            return True
    return False


def in_full_closure(words, prefix):
    """Membership test for the full-prefix closure of a word set."""
    ws = _as_set(words)
    maxlen = max(w.length for w in ws)
    members = {(w.length, w.value) for w in ws}
    lengths = sorted({l for l, _ in members})

    def full(vlen, vval):
        if _covered(vlen, vval, lengths, members):
            return True
        if vlen >= maxlen:
            return False
        return full(vlen + 1, vval << 1) and full(vlen + 1, (vval << 1) | 1)

    return full(prefix.length, prefix.value)


def reduce(words):
    """The minimal elements of the full-prefix closure.

    The result is prefix-free and its closure equals the closure of the
    input.  If the input covers every infinite sequence the result is
    the singleton containing the empty string.
    """
    ws = _as_set(words)
    maxlen = max(w.length for w in ws)
    members = {(w.length, w.value) for w in ws}
    lengths = sorted({l for l, _ in members})
    out = []

    def walk(vlen, vval):
        # returns True when the node is in the closure; minimal such
        # nodes are collected because a full node never descends
        if _covered(vlen, vval, lengths, members):
            out.append((vlen, vval))
            return True
        if vlen >= maxlen:
            return False
        mark = len(out)
        f0 = walk(vlen + 1, vval << 1)
        f1 = walk(vlen + 1, (vval << 1) | 1)
        if f0 and f1:
            del out[mark:]
            out.append((vlen, vval))
            return True
        return False

    walk(0, 0)
    return frozenset(BitString(v, l) for l, v in out)


def to_basic_mode(words):
    """Reduce a word set and strip the common prefix off every member.

    The result always contains the word-set analogue of a code tree's
    shape near the root: it is prefix-free, has empty common prefix, and
    is invariant under further reduction.
    """
    reduced = reduce(words)
    head = common_prefix(reduced)
    return frozenset(strip_prefix(head, w) for w in reduced)


def all_strings(n, cap=ALL_STRINGS_CAP):
    """Every bit string of exactly n bits."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n > cap:
        raise CapExceeded(f"2**{n} strings exceed the cap of 2**{cap}")
    return frozenset(BitString(v, n) for v in range(1 << n))


def expand_to_fixed_length(words, n):
    """Replace every member w with all n-bit strings having prefix w."""
    ws = _as_set(words)
    out = []
    for w in ws:
        if w.length > n:
            raise MemberTooLong(
                f"member {w.text()!r} is longer than {n} bits")
        pad = n - w.length
        base = w.value << pad
        out.extend(BitString(base | t, n) for t in range(1 << pad))
    return frozenset(out)


def enumerate_basic_modes(n, cap=BASIC_MODE_CAP):
    """All distinct basic modes whose members are at most n bits long.

    A basic mode is what ``to_basic_mode`` can produce from a word set
    of the form {0u : u in L} | {1v : v in U} with non-empty L and U of
    (n-1)-bit strings.  For n == 2 there are exactly nine of them.
    """
    if n < 2:
        raise ValueError("basic modes need at least 2-bit members")
    if n > cap:
        raise CapExceeded(
            f"basic-mode enumeration for n={n} exceeds the cap of {cap}")
    stems = sorted(all_strings(n - 1), key=sort_key)
    zero = BitString(0, 1)
    one = BitString(1, 1)
    seen = set()
    for r in range(1, len(stems) + 1):
        for lo in itertools.combinations(stems, r):
            left = [zero + u for u in lo]
            for r2 in range(1, len(stems) + 1):
                for hi in itertools.combinations(stems, r2):
                    words = left + [one + u for u in hi]
                    seen.add(to_basic_mode(words))
    return seen
