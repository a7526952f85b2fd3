"""Conversions that produce code-tree sets from other code descriptions.

Three sources are covered:

* ``to_basic`` rewrites a validated set so every mode is basic (empty
  common prefix).  The rewrite moves each mode's common prefix across
  the tree boundary: the bits every stream from tree k must start with
  are emitted by the predecessor instead, which shortens the encoded
  stream without changing what can be decoded.

* ``vv_to_tree_set`` turns a variable-to-variable code table (parse
  tree plus per-sequence codewords) into a code-tree set with one tree
  per internal parse state.  The construction needs each state's
  longest-guaranteed prefix to extend along every edge; where it does
  not, the table is rewritten by shifting bits between a state's
  codeword contribution and its follow set until the condition holds,
  or NormalizationFailed is raised.

* ``import_aifv2`` / ``import_aifvm`` accept conventional code trees
  given purely as codeword assignments, check their structural rules,
  recover the tree-switching behaviour from each symbol node's chain of
  single-child descendants, and infer every tree's mode from the set of
  bit patterns the trees can actually emit.
"""

from __future__ import annotations

import itertools

from .bitstring import (BitString, EMPTY, is_prefix, is_strict_prefix,
                        strip_prefix)
from .codec import encode
from .codetree import CodeTree, CodeTreeSet, validate
from .errors import (DepthExceeded, NormalizationFailed, NotAPrefix,
                     PrefixMismatch, StructureViolation)
from .wordset import common_prefix, reduce as reduce_words, to_basic_mode


def to_basic(tree_set):
    """An equivalent set in which every tree's mode is basic.

    Each tree k emits Cword_k(a) followed, eventually, by the common
    prefix of the successor's mode; the rewrite moves those guaranteed
    bits into the codeword.  When the start tree's mode already has an
    empty common prefix the converted set encodes every sequence to the
    same body bits up to termination; otherwise that constant prefix is
    dropped from the front of every encoding, since it carries no
    information.
    """
    report = tree_set.ensure_valid()
    heads = [common_prefix(tree.mode) for tree in tree_set.trees]
    new_trees = []
    for k, tree in enumerate(tree_set.trees):
        mode = to_basic_mode(tree.mode)
        cwords = []
        for w, point in zip(tree.cwords, tree.points):
            try:
                cwords.append(strip_prefix(heads[k], w + heads[point]))
            except NotAPrefix as exc:
                # cannot happen once validation passed: coverage forces
                # every emitted stream to start with the mode's prefix
                raise PrefixMismatch(
                    f"tree {k}: codeword {w.text()!r} does not absorb "
                    f"the mode prefix {heads[k].text()!r}") from exc
        new_trees.append(CodeTree(cwords, tree.points, mode))
    return CodeTreeSet(new_trees, tree_set.symbols, tree_set.tree_names)


def equivalent_up_to_termination(set_a, set_b, max_len=5):
    """Compare two sets' encodings over all sequences up to max_len.

    Two encodings of one sequence count as equal when truncating each
    side's termination word (possibly to nothing) can make the full
    outputs identical; bodies must agree wherever both are defined.
    Returns False as soon as any sequence separates the two sets.
    """
    set_a.ensure_valid()
    set_b.ensure_valid()
    if set_a.symbol_count != set_b.symbol_count:
        return False
    m = set_a.symbol_count
    for n in range(1, max_len + 1):
        for seq in itertools.product(range(m), repeat=n):
            ra = encode(set_a, seq)
            rb = encode(set_b, seq)
            if ra.body_len >= rb.body_len:
                ok = is_prefix(ra.body, rb.bits)
            else:
                ok = is_prefix(rb.body, ra.bits)
            if not ok:
                return False
    return True


class VVCodeTable:
    """A variable-to-variable code: parse tree, codewords, follow sets.

    States are proper prefixes of parse sequences and are keyed by
    tuples of symbol ids (the root is the empty tuple).  Each state
    carries the longest bit prefix guaranteed once the parser is in it
    (``lcwords``) and the set of ways the remaining stream may continue
    (``follows``).  Complete parse blocks map to their full codeword in
    ``blocks`` and optionally name the state the encoder returns to in
    ``recurrences`` (the root by default).
    """

    __slots__ = ("depth", "symbols", "lcwords", "follows", "blocks",
                 "recurrences")

    def __init__(self, depth, symbols, lcwords, follows, blocks,
                 recurrences=None):
        self.depth = depth
        self.symbols = tuple(symbols)
        self.lcwords = dict(lcwords)
        self.follows = {s: frozenset(f) for s, f in follows.items()}
        self.blocks = dict(blocks)
        self.recurrences = dict(recurrences or {})
        self._check()

    def _check(self):
        m = len(self.symbols)
        if m < 1:
            raise StructureViolation("a VV code needs at least one symbol")
        if self.depth < 1:
            raise StructureViolation("parse depth must be at least 1")
        states = set(self.lcwords)
        if set(self.follows) != states:
            raise StructureViolation("states with codewords and states "
                                     "with follow sets differ")
        if () not in states:
            raise StructureViolation("the root state is missing")
        if self.lcwords[()] != EMPTY:
            raise StructureViolation("the root state must carry no bits")
        for s in states:
            if len(s) >= self.depth:
                raise DepthExceeded(
                    f"state {s} is as long as the parse depth {self.depth}")
            if any(not 0 <= a < m for a in s):
                raise StructureViolation(f"state {s} uses unknown symbols")
            if s and s[:-1] not in states:
                raise StructureViolation(f"state {s} has no parent state")
            if not self.follows[s]:
                raise StructureViolation(f"state {s} has an empty follow set")
        for b in self.blocks:
            if len(b) > self.depth:
                raise DepthExceeded(
                    f"block {b} is longer than the parse depth {self.depth}")
            if not b or b[:-1] not in states:
                raise StructureViolation(f"block {b} has no parent state")
            if b in states:
                raise StructureViolation(f"{b} is both a state and a block")
        for s in states:
            for a in range(m):
                child = s + (a,)
                if child not in states and child not in self.blocks:
                    raise StructureViolation(
                        f"state {s} has no entry for symbol {a}")
        for b, target in self.recurrences.items():
            if b not in self.blocks:
                raise StructureViolation(f"recurrence on unknown block {b}")
            if target not in states:
                raise StructureViolation(
                    f"block {b} recurs to unknown state {target}")


def _normalize_vv(table):
    # every edge out of a state must extend that state's guaranteed
    # prefix; shift bits between lcwords and follow sets until it does
    lcwords = dict(table.lcwords)
    follows = {s: set(f) for s, f in table.follows.items()}
    states = sorted(lcwords, key=len)
    cap = 10 * (len(states) + len(table.blocks)) + 10

    def lower_parent(s, target):
        # move the bits of lcword[s] past ``target`` into the follow set
        tail = strip_prefix(target, lcwords[s])
        follows[s] = {tail + f for f in follows[s]}
        lcwords[s] = target

    for _ in range(cap):
        changed = False
        for s in states:
            base = lcwords[s]
            for a in range(len(table.symbols)):
                child = s + (a,)
                if child in lcwords:
                    word = lcwords[child]
                    if is_prefix(base, word):
                        continue
                    if is_strict_prefix(word, base):
                        # prefer raising the child onto the parent's prefix
                        if all(is_prefix(base, word + f)
                               for f in follows[child]):
                            follows[child] = {
                                strip_prefix(base, word + f)
                                for f in follows[child]}
                            lcwords[child] = base
                        else:
                            lower_parent(s, word)
                        changed = True
                    else:
                        raise NormalizationFailed(
                            f"state {child}: guaranteed bits "
                            f"{word.text()!r} conflict with {base.text()!r}")
                elif child in table.blocks:
                    word = table.blocks[child]
                    if is_prefix(base, word):
                        continue
                    if is_strict_prefix(word, base):
                        lower_parent(s, word)
                        changed = True
                    else:
                        raise NormalizationFailed(
                            f"block {child}: codeword {word.text()!r} "
                            f"conflicts with {base.text()!r}")
            if changed:
                break
        if not changed:
            return lcwords, {s: frozenset(f) for s, f in follows.items()}
    raise NormalizationFailed("table rewriting did not settle")


def _state_name(table, s):
    return "".join(table.symbols[a] for a in s)


def vv_to_tree_set(table):
    """Build the code-tree set that mimics a VV code symbol by symbol.

    One tree per parse state; entering a state emits the bits newly
    guaranteed beyond its parent, a complete block emits the rest of
    its codeword and hops to the recurrence state's tree.  Raises
    NormalizationFailed when no rewriting of the table supports this.
    """
    lcwords, follows = _normalize_vv(table)
    states = sorted(lcwords, key=lambda s: (len(s), s))
    ids = {s: k for k, s in enumerate(states)}
    trees = []
    for s in states:
        cwords = []
        points = []
        for a in range(len(table.symbols)):
            child = s + (a,)
            if child in lcwords:
                cwords.append(strip_prefix(lcwords[s], lcwords[child]))
                points.append(ids[child])
            else:
                cwords.append(strip_prefix(lcwords[s], table.blocks[child]))
                points.append(ids[table.recurrences.get(child, ())])
        trees.append(CodeTree(cwords, points, follows[s]))
    result = CodeTreeSet(trees, table.symbols,
                         tuple(_state_name(table, s) for s in states))
    report = validate(result)
    if not report.ok:
        raise NormalizationFailed(
            "normalized table is not decodable: "
            + "; ".join(v.message for v in report.violations[:3]))
    return result


class ConventionalTree:
    """One tree given only by its codeword per symbol."""

    __slots__ = ("cwords",)

    def __init__(self, cwords):
        self.cwords = tuple(cwords)
        if not self.cwords:
            raise StructureViolation("a tree needs at least one codeword")


def _build_nodes(cwords):
    # nodes are (depth, path-value) pairs; derive the tree from the
    # prefix closure of the codeword paths
    children = {}
    symbol_at = {}
    nodes = {(0, 0)}
    for a, w in enumerate(cwords):
        node = (w.length, w.value)
        if node in symbol_at:
            raise StructureViolation(
                f"symbols {symbol_at[node]} and {a} share the node "
                f"{w.text()!r}")
        symbol_at[node] = a
        nodes.add(node)
        for i in range(w.length):
            parent = (i, w.value >> (w.length - i))
            bit = (w.value >> (w.length - i - 1)) & 1
            child = (i + 1, w.value >> (w.length - i - 1))
            children.setdefault(parent, {})[bit] = child
            nodes.add(parent)
            nodes.add(child)
    return nodes, children, symbol_at


def _single_child(children, node):
    ch = children.get(node)
    if ch is not None and len(ch) == 1:
        return next(iter(ch.items()))
    return None


def _chain_degree(children, symbol_at, node):
    # length of the run of bare single-'0'-child nodes hanging under a
    # symbol node; this is what selects the successor tree
    degree = 0
    edge = _single_child(children, node)
    down = edge[1] if edge else None
    while down is not None and down not in symbol_at:
        edge = _single_child(children, down)
        if edge is None or edge[0] != 0:
            break
        degree += 1
        down = edge[1]
    return degree


def _check_common(tree_index, nodes, children, symbol_at):
    for node in nodes:
        ch = children.get(node, {})
        if not ch and node not in symbol_at:
            raise StructureViolation(
                f"tree {tree_index}: leaf at depth {node[0]} carries "
                f"no symbol")
        if len(ch) == 2 and node in symbol_at:
            raise StructureViolation(
                f"tree {tree_index}: symbol on a node with both children")


def _infer_modes(tables, n_bits):
    # a tree's mode is the reduced set of n-bit patterns its emitted
    # streams can start with, found by walking codeword concatenations
    modes = []
    for start in range(len(tables)):
        found = set()
        seen = set()
        stack = [(start, 0, 0)]
        while stack:
            state = stack.pop()
            if state in seen:
                continue
            seen.add(state)
            k, blen, bval = state
            for clen, cval, point in tables[k]:
                nlen = blen + clen
                nval = (bval << clen) | cval
                if nlen >= n_bits:
                    found.add(BitString(nval >> (nlen - n_bits), n_bits))
                else:
                    stack.append((point, nlen, nval))
        if found:
            modes.append(reduce_words(found))
        else:
            modes.append(frozenset([EMPTY]))
    return modes


def _assemble(conventional, points_per_tree, n_bits, symbols):
    tables = []
    for tree, points in zip(conventional, points_per_tree):
        tables.append([(w.length, w.value, p)
                       for w, p in zip(tree.cwords, points)])
    modes = _infer_modes(tables, n_bits)
    trees = [CodeTree(tree.cwords, points, mode)
             for tree, points, mode in
             zip(conventional, points_per_tree, modes)]
    result = CodeTreeSet(trees, symbols)
    report = validate(result)
    if not report.ok:
        raise StructureViolation(
            "imported trees are not decodable: "
            + "; ".join(v.message for v in report.violations[:3]))
    return result


def import_aifv2(trees, symbols=None):
    """Convert a conventional two-tree code into a code-tree set.

    The trees follow the classic structure: symbols sit on leaves or on
    incomplete internal nodes whose child hangs two '0' edges below
    them, and the second tree's root starts with a bare '1'-linked node
    on its '0' side.  A leaf symbol keeps the encoder on tree 0; a
    symbol on an internal node switches it to tree 1.
    """
    trees = [tree if isinstance(tree, ConventionalTree)
             else ConventionalTree(tree) for tree in trees]
    if len(trees) != 2:
        raise StructureViolation("expected exactly two trees")
    points_per_tree = []
    for t, tree in enumerate(trees):
        nodes, children, symbol_at = _build_nodes(tree.cwords)
        _check_common(t, nodes, children, symbol_at)
        points = []
        for a, w in enumerate(tree.cwords):
            node = (w.length, w.value)
            if not children.get(node):
                points.append(0)
                continue
            edge = _single_child(children, node)
            if edge is None or edge[0] != 0:
                raise StructureViolation(
                    f"tree {t}: symbol {a} sits on an internal node "
                    f"without a single '0' child")
            down = edge[1]
            below = _single_child(children, down)
            if down in symbol_at or below is None or below[0] != 0:
                raise StructureViolation(
                    f"tree {t}: symbol {a} is not two '0' edges above "
                    f"its subtree")
            points.append(1)
        if t == 1:
            root_kids = children.get((0, 0), {})
            if set(root_kids) != {0, 1}:
                raise StructureViolation(
                    "tree 1: the root must have both children")
            side = root_kids[0]
            link = _single_child(children, side)
            if side in symbol_at or link is None or link[0] != 1:
                raise StructureViolation(
                    "tree 1: the root's '0' child must be a bare node "
                    "linked by '1' to its child")
        points_per_tree.append(points)
    return _assemble(trees, points_per_tree, 2, symbols)


def import_aifvm(trees, m, symbols=None, convention="degree"):
    """Convert a conventional m-tree code into a code-tree set.

    Each symbol node's successor is selected by its chain degree: the
    number of bare single-'0'-child nodes hanging directly under it.
    ``convention`` maps a degree k to the next tree: "degree" uses
    T_k, "complement" uses T_{m-k} (leaves always return to T_0); both
    conventions appear in published tree drawings.
    """
    if convention not in ("degree", "complement"):
        raise ValueError(f"unknown switching convention {convention!r}")
    trees = [tree if isinstance(tree, ConventionalTree)
             else ConventionalTree(tree) for tree in trees]
    if m < 2:
        raise StructureViolation("m must be at least 2")
    if len(trees) != m:
        raise StructureViolation(f"expected {m} trees, got {len(trees)}")
    points_per_tree = []
    for t, tree in enumerate(trees):
        nodes, children, symbol_at = _build_nodes(tree.cwords)
        _check_common(t, nodes, children, symbol_at)
        points = []
        for a, w in enumerate(tree.cwords):
            node = (w.length, w.value)
            degree = _chain_degree(children, symbol_at, node) \
                if children.get(node) else 0
            if degree >= m:
                raise StructureViolation(
                    f"tree {t}: symbol {a} has chain degree {degree}, "
                    f"needs less than {m}")
            if degree == 0:
                points.append(0)
            elif convention == "degree":
                points.append(degree)
            else:
                points.append(m - degree)
        points_per_tree.append(points)
    return _assemble(trees, points_per_tree, m, symbols)
