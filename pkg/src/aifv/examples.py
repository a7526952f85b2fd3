"""Small ready-made codes used by the documentation, demos, and tests.

Everything here is constructed from scratch on each call, so callers
may mutate nothing and still share nothing.
"""

from __future__ import annotations

from .bitstring import BitString
from .codetree import CodeTree, CodeTreeSet

_B = BitString.from_text


def _tree(mode, rows):
    # rows: one (codeword, next) pair per symbol
    return CodeTree([_B(w) for w, _ in rows], [p for _, p in rows],
                    [_B(q) for q in mode])


def binary_delay3_set():
    """Five trees over {a, b} with 3-bit modes; the running example.

    Encoding 'abbaa' yields body '1001' plus termination '1', and the
    decoder needs at most three bits of lookahead.
    """
    return CodeTreeSet([
        _tree([""], [("", 1), ("0", 2)]),
        _tree(["1", "011"], [("1", 4), ("", 3)]),
        _tree(["0", "10"], [("0", 0), ("10", 0)]),
        _tree(["011", "100"], [("011", 0), ("100", 0)]),
        _tree(["1", "01"], [("1", 0), ("01", 0)]),
    ])


def instantaneous_huffman_set():
    """A single prefix-free tree; zero lookahead, mode is the empty word."""
    return CodeTreeSet([
        _tree([""], [("0", 0), ("10", 0), ("11", 0)]),
    ])


def ternary_full_set():
    """Three trees over {a, b, c} whose modes exactly fill the code space.

    Every mode equals the reduced set of streams its tree can emit, so
    the set is full; converting it to basic modes shortens codewords.
    """
    return CodeTreeSet([
        _tree([""], [("", 1), ("", 2), ("11", 0)]),
        _tree(["000", "001", "010"], [("000", 0), ("001", 0), ("010", 0)]),
        _tree(["011", "100", "101"], [("011", 0), ("100", 0), ("101", 0)]),
    ])


def skewed_delay3_set():
    """Four trees over {a, b, c, d} tuned for a highly skewed source.

    With ``skewed_distribution()`` the expected code length is about
    0.6042 bits per symbol against an entropy of about 0.5761.
    """
    return CodeTreeSet([
        _tree([""],
              [("", 1), ("0001", 0), ("0000", 1), ("0000000", 0)]),
        _tree(["001", "01", "1"],
              [("", 2), ("0011", 0), ("0010", 1), ("0010000", 0)]),
        _tree(["01", "1"],
              [("", 3), ("0101", 0), ("0100", 1), ("0100000", 0)]),
        _tree(["011", "1"],
              [("1", 0), ("0111", 0), ("0110", 1), ("0110000", 0)]),
    ])


def skewed_distribution():
    """The source probabilities used by the skewed four-symbol demos."""
    return [0.9, 0.05, 0.049, 0.001]


def quaternary_aifv2_doc():
    """Conventional two-tree code over {a, b, c, d}, as a document dict."""
    return {
        "kind": "aifv2",
        "symbols": ["a", "b", "c", "d"],
        "trees": [
            {"codewords": ["0", "10", "11", "1100"]},
            {"codewords": ["01", "10", "11", "1100"]},
        ],
    }


def quaternary_aifv3_doc():
    """Conventional three-tree code switching by plain chain degree."""
    return {
        "kind": "aifvm",
        "m": 3,
        "convention": "degree",
        "symbols": ["a", "b", "c", "d"],
        "trees": [
            {"codewords": ["0", "10", "11", "1100"]},
            {"codewords": ["01", "10", "11", "11000"]},
            {"codewords": ["001", "10", "11", "1100"]},
        ],
    }


def skewed_aifv3_doc():
    """Conventional three-tree code for the skewed source.

    These trees are drawn with the complementary switching convention:
    a symbol node with chain degree k hops to tree m - k.
    """
    return {
        "kind": "aifvm",
        "m": 3,
        "convention": "complement",
        "symbols": ["a", "b", "c", "d"],
        "trees": [
            {"codewords": ["", "0001", "0000", "0000000"]},
            {"codewords": ["", "0011", "0010", "0010000"]},
            {"codewords": ["1", "011", "010", "010000"]},
        ],
    }


def pair_huffman_vv_doc():
    """A VV code over {a, b, c}: a Huffman code on symbol pairs.

    Parsing depth 2; the block codewords form a complete prefix-free
    code of the nine pairs.
    """
    return {
        "depth": 2,
        "symbols": ["a", "b", "c"],
        "states": {
            "": {"lcword": "", "follow": [""]},
            "a": {"lcword": "0", "follow": [""]},
            "b": {"lcword": "1", "follow": ["01", "110", "100"]},
            "c": {"lcword": "1", "follow": ["00", "101", "111"]},
        },
        "blocks": {
            "aa": "00", "ab": "010", "ac": "011",
            "ba": "101", "bb": "1110", "bc": "1100",
            "ca": "100", "cb": "1101", "cc": "1111",
        },
    }


def tunstall_vv_doc():
    """A VV code over {a, b}: variable-length parse, 3-bit block words.

    Parsing depth 4 with blocks aaaa, aaab, aab, aba, abb, baa, bab,
    bb; every block recurs to the root state.
    """
    return {
        "depth": 4,
        "symbols": ["a", "b"],
        "states": {
            "": {"lcword": "", "follow": [""]},
            "a": {"lcword": "", "follow": ["0", "100"]},
            "b": {"lcword": "1", "follow": ["01", "1"]},
            "aa": {"lcword": "0", "follow": ["0", "10"]},
            "ab": {"lcword": "", "follow": ["011", "100"]},
            "ba": {"lcword": "1", "follow": ["01", "10"]},
            "aaa": {"lcword": "00", "follow": ["0", "1"]},
        },
        "blocks": {
            "aaaa": "000", "aaab": "001", "aab": "010",
            "aba": "011", "abb": "100",
            "baa": "101", "bab": "110", "bb": "111",
        },
    }


def uneven_word_set():
    """Seven words whose reduction is {'0', '10', '110'}."""
    return frozenset(_B(w) for w in
                     ["00", "010", "011", "100", "101", "1100", "1101"])
