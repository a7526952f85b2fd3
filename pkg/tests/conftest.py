"""Shared test helpers: random generators and independent oracles.

The oracles deliberately avoid the library's own integer tricks: they
re-derive prefix-closure facts from exact Fraction interval covering,
so a bug in the fast paths cannot hide behind itself.
"""

from fractions import Fraction

from aifv.bitstring import BitString, sort_key
from aifv.codetree import CodeTree, CodeTreeSet

# modes used by the random set generator; all prefix-free, members <= 3 bits
MODE_POOL = [
    [""],
    ["0", "10"], ["0", "11"], ["00", "1"], ["00", "10"], ["00", "11"],
    ["01", "1"], ["01", "10"], ["01", "11"],
    ["011", "100"], ["1", "011"], ["10", "11"], ["000", "001", "01"],
]


def bits(text):
    return BitString.from_text(text)


def words(*texts):
    return frozenset(BitString.from_text(t) for t in texts)


def texts(word_set):
    return sorted(w.text() for w in word_set)


def random_word_set(rng, max_len=6, max_words=8):
    count = rng.randint(1, max_words)
    out = set()
    while len(out) < count:
        n = 0 if rng.random() < 0.03 else rng.randint(1, max_len)
        out.add(BitString(rng.getrandbits(n) if n else 0, n))
    return frozenset(out)


def interval(w):
    return (Fraction(w.value, 1 << w.length),
            Fraction(w.value + 1, 1 << w.length))


def closure_oracle(word_set, prefix):
    # prefix is in the closure iff the members' intervals cover its own
    lo, hi = interval(prefix)
    spans = []
    for w in word_set:
        wlo, whi = interval(w)
        a, b = max(lo, wlo), min(hi, whi)
        if a < b:
            spans.append((a, b))
    spans.sort()
    reach = lo
    for a, b in spans:
        if a > reach:
            return False
        if b > reach:
            reach = b
        if reach >= hi:
            return True
    return reach >= hi


def reduce_oracle(word_set):
    maxlen = max(w.length for w in word_set)
    out = set()

    def walk(v):
        if closure_oracle(word_set, v):
            out.add(v)
            return
        if v.length < maxlen:
            walk(v.append(0))
            walk(v.append(1))

    walk(BitString())
    return frozenset(out)


def random_valid_tree_set(rng, max_trees=4, max_symbols=3):
    """A random set that is valid by construction.

    Every codeword extends a distinct member of its own tree's mode
    (splitting members into incomparable slots as needed), which forces
    both decodability conditions no matter where the trees point; a
    fixed hop to tree k+1 keeps every tree reachable.
    """
    tree_count = rng.randint(1, max_trees)
    symbol_count = rng.choice([1] + [2, 3] * 3)
    if symbol_count > max_symbols:
        symbol_count = max_symbols
    trees = []
    for k in range(tree_count):
        mode = frozenset(BitString.from_text(t)
                         for t in rng.choice(MODE_POOL))
        slots = sorted(mode, key=sort_key)
        while len(slots) < symbol_count:
            s = slots.pop(rng.randrange(len(slots)))
            slots.extend([s.append(0), s.append(1)])
        rng.shuffle(slots)
        cwords = []
        points = []
        for a in range(symbol_count):
            w = slots[a]
            for _ in range(rng.randint(0, 2)):
                w = w.append(rng.getrandbits(1))
            cwords.append(w)
            points.append((k + 1) % tree_count if a == 0
                          else rng.randrange(tree_count))
        trees.append(CodeTree(cwords, points, mode))
    return CodeTreeSet(trees)


def mutate_tree_set(rng, tree_set):
    """A random small edit; the result may or may not stay valid."""
    trees = list(tree_set.trees)
    k = rng.randrange(len(trees))
    tree = trees[k]
    cwords = list(tree.cwords)
    points = list(tree.points)
    mode = set(tree.mode)
    a = rng.randrange(len(cwords))
    kind = rng.randrange(3)
    if kind == 0:
        n = rng.randint(0, 3)
        cwords[a] = BitString(rng.getrandbits(n) if n else 0, n)
    elif kind == 1:
        points[a] = rng.randrange(len(trees))
    else:
        n = rng.randint(1, 3)
        mode.add(BitString(rng.getrandbits(n), n))
    trees[k] = CodeTree(cwords, points, mode)
    return CodeTreeSet(trees, tree_set.symbols)
