"""Acceptance checks.

Each test covers one headline behaviour end to end, asserts the pinned
values and the runtime budget, and reports a single [PASS] line with
the measured numbers.
"""

import itertools
import random
import time

from aifv.analysis import entropy, expected_code_length, monte_carlo_rate
from aifv.bitstring import comparable, is_prefix
from aifv.codec import decode, encode, max_realized_lookahead
from aifv.codetree import decoding_delay, validate
from aifv.formats import parse_conventional, parse_vv_table
from aifv.transform import (equivalent_up_to_termination, import_aifv2,
                            import_aifvm, to_basic, vv_to_tree_set)
from aifv.wordset import enumerate_basic_modes, is_prefix_free, reduce
from aifv import examples

from conftest import bits, random_word_set, random_valid_tree_set


def report(capsys, line):
    with capsys.disabled():
        print(line, flush=True)


def test_criterion_1_golden_round_trip(capsys):
    ts = examples.binary_delay3_set()
    seq = (0, 1, 1, 0, 0)  # a b b a a
    encode(ts, seq)  # build the cached codec tables before timing
    start = time.perf_counter()
    result = encode(ts, seq)
    trace = decode(ts, result.bits, len(seq))
    elapsed = time.perf_counter() - start
    assert result.bits == bits("10011")
    assert trace.symbols == seq
    assert elapsed < 1e-3
    report(capsys, f"[PASS] criterion 1: 'a b b a a' -> 10011 -> "
                   f"'a b b a a' in {elapsed * 1e6:.0f} us")


def test_criterion_2_conventional_import_round_trip(capsys):
    kind, m, convention, symbols, trees = parse_conventional(
        examples.quaternary_aifv2_doc())
    ts = import_aifv2(trees, symbols)
    seq = (0, 2, 2, 0)  # a c c a
    result = encode(ts, seq)
    assert result.bits == bits("0111101")
    trace = decode(ts, result.bits, len(seq))
    assert trace.symbols == seq
    realized = max_realized_lookahead(trace)
    assert realized <= 2
    assert decoding_delay(ts) == 2
    report(capsys, f"[PASS] criterion 2: imported pair of trees encodes "
                   f"'a c c a' -> 0111101, realized lookahead {realized}")


def test_criterion_3_basic_mode_reduction(capsys):
    ts = examples.ternary_full_set()
    basic = to_basic(ts)
    modes = [frozenset(w.text() for w in t.mode) for t in basic.trees]
    assert modes == [frozenset([""]),
                     frozenset(["0", "10"]),
                     frozenset(["011", "10"])]
    assert encode(ts, [2, 0]).bits == bits("11000")
    assert encode(basic, [2, 0]).bits == bits("1100")
    assert equivalent_up_to_termination(ts, basic, max_len=4)
    report(capsys, "[PASS] criterion 3: reduced modes pinned, "
                   "'c a' 11000 -> 1100, equivalent through length 4")


def test_criterion_4_rate_comparison(capsys):
    start = time.perf_counter()
    dist = examples.skewed_distribution()
    proposed = examples.skewed_delay3_set()
    kind, m, convention, symbols, trees = parse_conventional(
        examples.skewed_aifv3_doc())
    conventional = import_aifvm(trees, m, symbols, convention)
    for ts in (proposed, conventional):
        assert validate(ts, "direct").ok
        assert validate(ts, "interval").ok
        assert decoding_delay(ts) == 3
    e_conv = expected_code_length(conventional, dist)
    e_prop = expected_code_length(proposed, dist)
    h = entropy(dist)
    elapsed = time.perf_counter() - start
    assert abs(e_conv - 0.655) <= 0.001
    assert abs(e_prop - 0.604) <= 0.001
    assert abs(h - 0.576) <= 0.001
    assert elapsed < 1.0
    report(capsys, f"[PASS] criterion 4: rates {e_conv:.4f} vs "
                   f"{e_prop:.4f}, entropy {h:.4f}, both valid at "
                   f"delay 3, {elapsed * 1e3:.0f} ms")


def test_criterion_5_vv_code_construction(capsys):
    pair = vv_to_tree_set(parse_vv_table(examples.pair_huffman_vv_doc()))
    assert encode(pair, [0, 0, 0]).bits == bits("000")
    assert encode(pair, [2, 0, 0, 1, 2]).bits == bits("100010100")
    tunstall = vv_to_tree_set(parse_vv_table(examples.tunstall_vv_doc()))
    assert encode(tunstall, [1, 0, 1, 0]).bits == bits("1100")
    assert encode(tunstall, [0, 1, 0, 1, 0]).bits == bits("011101")
    report(capsys, "[PASS] criterion 5: converted tables encode "
                   "aaa -> 000, caabc -> 100010100, baba -> 1100, "
                   "ababa -> 011101")


def test_criterion_6_two_bit_mode_census(capsys):
    modes = enumerate_basic_modes(2)
    got = sorted(sorted(w.text() for w in m) for m in modes)
    assert got == [
        [""],
        ["0", "10"], ["0", "11"],
        ["00", "1"], ["00", "10"], ["00", "11"],
        ["01", "1"], ["01", "10"], ["01", "11"],
    ]
    report(capsys, "[PASS] criterion 6: exactly the nine two-bit "
                   "basic modes")


def test_criterion_7_word_set_property_suite(capsys):
    rng = random.Random(20240817)
    hop = bits("10")
    start = time.perf_counter()
    for _ in range(10_000):
        s = random_word_set(rng, max_len=6, max_words=8)
        r = reduce(s)
        assert is_prefix_free(r)
        assert reduce(r) == r
        # reduced words abbreviate members, members extend reduced words
        assert all(any(is_prefix(v, w) for w in s) for v in r)
        assert all(any(is_prefix(v, w) for v in r) for w in s)
        # a set that covers s keeps covering after reduction
        parents = frozenset(w.prefix(max(w.length - 1, 0)) for w in s)
        reduced_parents = reduce(parents)
        assert all(any(is_prefix(p, v) for p in reduced_parents)
                   for v in r)
        # anything comparable with a reduced word meets some member
        for v in r:
            for probe in (v, v + hop, v.prefix(v.length // 2)):
                assert any(comparable(probe, w) for w in s)
        # reduction commutes with prepending a common prefix
        assert reduce(frozenset(hop + w for w in s)) \
            == frozenset(hop + v for v in r)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    report(capsys, f"[PASS] criterion 7: 10000 random word sets hold "
                   f"all reduction properties in {elapsed:.2f} s")


def test_criterion_8_randomized_code_tree_sets(capsys):
    rng = random.Random(20240818)
    start = time.perf_counter()
    sequences = 0
    for _ in range(500):
        ts = random_valid_tree_set(rng, max_trees=4, max_symbols=3)
        direct = validate(ts, "direct")
        interval = validate(ts, "interval")
        assert direct.ok and interval.ok
        assert direct.violations == interval.violations
        delay = decoding_delay(ts)
        m = ts.symbol_count
        for n in range(0, 7):
            seen = set()
            for seq in itertools.product(range(m), repeat=n):
                result = encode(ts, seq)
                trace = decode(ts, result.bits, n)
                assert trace.symbols == seq
                assert max_realized_lookahead(trace) <= delay
                assert result.bits not in seen
                seen.add(result.bits)
                sequences += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    report(capsys, f"[PASS] criterion 8: 500 random sets, both "
                   f"validators agree, {sequences} sequences round-trip "
                   f"injectively in {elapsed:.1f} s")


def test_criterion_9_monte_carlo_rate(capsys):
    ts = examples.skewed_delay3_set()
    dist = examples.skewed_distribution()
    start = time.perf_counter()
    rate = monte_carlo_rate(ts, dist, 10 ** 6, seed=7)
    elapsed = time.perf_counter() - start
    assert abs(rate - 0.604) <= 0.005
    assert elapsed < 5.0
    report(capsys, f"[PASS] criterion 9: simulated rate {rate:.6f} "
                   f"within 0.005 of 0.604 in {elapsed:.2f} s")
