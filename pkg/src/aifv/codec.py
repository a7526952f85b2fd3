"""Encoding and decoding against a validated code-tree set.

The encoder walks the trees, concatenating codewords, and finishes by
appending a termination word: the shortest member of the final tree's
mode (ties broken lexicographically, 0 before 1).  Any member would do,
because the mode lists exactly the ways a stream from that tree may
continue; the shortest keeps the output minimal.

The decoder is driven by the same structure in reverse.  Sitting at
tree k with some bits in hand, symbol a is confirmed once Cword_k(a)
matches and some member of Mode_{Point_k(a)} follows it.  Only the
codeword is consumed; the matched mode member is lookahead and stays
in the stream.  On a valid set exactly one symbol can ever match, and
the lookahead never exceeds the set's decoding delay.
"""

from __future__ import annotations

from .bitstring import BitString, sort_key
from .errors import AmbiguousMatch, NoMatch, SymbolOutOfRange, Truncated

# flush the bit accumulator to a chunk list past this many bits, so the
# working integer stays small while long messages are encoded
_CHUNK_BITS = 4096


class _Tables:
    """Per-set integer tables the hot loops run on."""

    __slots__ = ("cwords", "queries", "terminations")

    def __init__(self, tree_set):
        self.cwords = []        # [k][a] -> (len, value, point)
        self.queries = []       # [k] -> ((len, value), ...) shortest first
        self.terminations = []  # [k] -> BitString
        for tree in tree_set.trees:
            self.cwords.append([
                (w.length, w.value, point)
                for w, point in zip(tree.cwords, tree.points)])
            mode = sorted(tree.mode, key=sort_key)
            self.queries.append(tuple((q.length, q.value) for q in mode))
            self.terminations.append(mode[0])


def _tables(tree_set):
    tables = tree_set._codec
    if tables is None:
        tables = tree_set._codec = _Tables(tree_set)
    return tables


class EncodeResult:
    """An encoded stream split into its body and termination parts."""

    __slots__ = ("bits", "body_len", "final_tree", "termination")

    def __init__(self, bits, body_len, final_tree, termination):
        self.bits = bits
        self.body_len = body_len
        self.final_tree = final_tree
        self.termination = termination

    @property
    def body(self):
        return self.bits.prefix(self.body_len)

    def __repr__(self):
        return (f"EncodeResult(bits={self.bits.text()!r}, "
                f"body_len={self.body_len}, final_tree={self.final_tree})")


def _encode_body(tree_set, symbols):
    tables = _tables(tree_set)
    cwords = tables.cwords
    chunks = []
    acc = 0
    acc_len = 0
    k = 0
    for x in symbols:
        if not 0 <= x < len(cwords[0]):
            raise SymbolOutOfRange(f"symbol id {x} out of range")
        length, value, point = cwords[k][x]
        acc = (acc << length) | value
        acc_len += length
        k = point
        if acc_len >= _CHUNK_BITS:
            chunks.append((acc, acc_len))
            acc = 0
            acc_len = 0
    if acc_len or not chunks:
        chunks.append((acc, acc_len))
    total = 0
    total_len = 0
    for value, length in chunks:
        total = (total << length) | value
        total_len += length
    return BitString(total, total_len), k


def encode(tree_set, symbols):
    """Encode a symbol sequence, termination included."""
    tree_set.ensure_valid()
    body, k = _encode_body(tree_set, symbols)
    termination = _tables(tree_set).terminations[k]
    return EncodeResult(body + termination, body.length, k, termination)


def encode_without_termination(tree_set, symbols):
    """The body bits alone; a decoder may need more to finish."""
    tree_set.ensure_valid()
    body, _ = _encode_body(tree_set, symbols)
    return body


class DecodeTrace:
    """Decoded symbols plus the lookahead the decoder used for each."""

    __slots__ = ("symbols", "per_symbol_lookahead", "bits_consumed")

    def __init__(self, symbols, per_symbol_lookahead, bits_consumed):
        self.symbols = tuple(symbols)
        self.per_symbol_lookahead = tuple(per_symbol_lookahead)
        self.bits_consumed = bits_consumed

    def __repr__(self):
        return (f"DecodeTrace(symbols={self.symbols}, "
                f"per_symbol_lookahead={self.per_symbol_lookahead})")


def max_realized_lookahead(trace):
    """The largest lookahead used anywhere in a decode trace."""
    return max(trace.per_symbol_lookahead, default=0)


def decode(tree_set, bits, length):
    """Decode exactly ``length`` symbols from a bit stream.

    Bits beyond what the last symbol needs are ignored; the trace
    records how many were consumed.  Raises Truncated when the stream
    stops in the middle of a decision, NoMatch when no symbol fits the
    bits at all, and AmbiguousMatch only on sets that would not pass
    validation.
    """
    tree_set.ensure_valid()
    if length < 0:
        raise ValueError("symbol count must be non-negative")
    tables = _tables(tree_set)
    cwords = tables.cwords
    queries = tables.queries
    value = bits.value
    total = bits.length
    pos = 0
    out = []
    lookaheads = []
    k = 0
    for i in range(length):
        avail = total - pos
        match = -1
        match_point = -1
        match_len = 0
        match_look = 0
        matches = 0
        for a, (clen, cval, point) in enumerate(cwords[k]):
            if clen > avail:
                continue
            if (value >> (avail - clen)) & ((1 << clen) - 1) != cval:
                continue
            rest = avail - clen
            for qlen, qval in queries[point]:
                if qlen > rest:
                    continue
                if (value >> (rest - qlen)) & ((1 << qlen) - 1) == qval:
                    matches += 1
                    if matches == 1:
                        match, match_point = a, point
                        match_len, match_look = clen, qlen
                    break
        if matches > 1:
            raise AmbiguousMatch(
                f"{matches} symbols match at bit {pos}",
                symbol_index=i, bit_position=pos)
        if matches == 0:
            suffix = value & ((1 << avail) - 1) if avail else 0
            for clen, cval, point in cwords[k]:
                for qlen, qval in queries[point]:
                    wlen = clen + qlen
                    if wlen <= avail:
                        continue
                    word = (cval << qlen) | qval
                    if (word >> (wlen - avail)) == suffix:
                        raise Truncated(
                            f"stream ends inside symbol {i} at bit {pos}",
                            symbol_index=i, bit_position=pos)
            raise NoMatch(
                f"no symbol matches at bit {pos}",
                symbol_index=i, bit_position=pos)
        out.append(match)
        lookaheads.append(match_look)
        pos += match_len
        k = match_point
    return DecodeTrace(out, lookaheads, pos)
