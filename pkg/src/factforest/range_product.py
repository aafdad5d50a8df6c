"""Infix products in O(tree height) multiplications.

A query ``[i, j)`` descends from the root to the lowest node whose span
contains the range, then walks the two boundary paths.  On each level a
path contributes at most one multiplication: the product of the siblings
beyond the path, which for a flat node is its idempotent no matter how many
siblings are skipped.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .builder import build_forest
from .errors import EmptyRange, InternalInvariant, RangeOutOfBounds
from .forest import Leaf, iter_nodes


@dataclass(frozen=True, eq=False)
class ForestIndex:
    word: str
    tree: object
    table: tuple
    start: list
    end: list
    image: list
    parent: list
    children: list
    child_starts: list
    height: int

    def query(self, i, j):
        return query(self, i, j)


def index_tree(tree, word, table):
    """Flatten ``tree`` into navigation arrays (pre-order node ids, root = 0)."""
    start, end, image, parent, children, child_starts = [], [], [], [], [], []
    ids = {}
    for t in iter_nodes(tree):
        ids[id(t)] = len(start)
        start.append(t.start)
        end.append(t.end)
        image.append(t.image)
        parent.append(-1)
        children.append(())
        child_starts.append(())
    for t in iter_nodes(tree):
        k = ids[id(t)]
        if isinstance(t, Leaf):
            continue
        ch = [ids[id(c)] for c in t.children]
        for c in ch:
            parent[c] = k
        children[k] = ch
        child_starts[k] = [start[c] for c in ch]
    return ForestIndex(word, tree, table, start, end, image, parent, children,
                       child_starts, tree.height)


def preprocess(phi, green, w):
    tree = build_forest(phi, green, w)
    return index_tree(tree, w, phi.semigroup.table)


def query(idx, i, j, counter=None):
    """Image of ``w[i:j]``.  ``counter``, if given, is a one-element list that
    accumulates the number of table multiplications performed."""
    n = len(idx.word)
    if not (0 <= i <= n and 0 <= j <= n):
        raise RangeOutOfBounds(f"range {i}:{j} outside 0:{n}")
    if i >= j:
        raise EmptyRange(f"range {i}:{j} is empty")
    table = idx.table
    start, end, image = idx.start, idx.end, idx.image
    children, cstarts = idx.children, idx.child_starts
    mults = 0

    v = 0
    while True:
        if start[v] == i and end[v] == j:
            if counter is not None:
                counter[0] += mults
            return image[v]
        cs = cstarts[v]
        a = bisect_right(cs, i) - 1
        b = bisect_right(cs, j - 1) - 1
        if a != b:
            break
        v = children[v][a]

    ch = children[v]
    # suffix of child a from i
    u, pending = ch[a], []
    while start[u] != i:
        c = children[u]
        k = bisect_right(cstarts[u], i) - 1
        if k + 1 < len(c):
            pending.append(image[c[k + 1]])
        u = c[k]
    left = image[u]
    for x in reversed(pending):
        left = table[left][x]
        mults += 1
    # prefix of child b up to j
    u, pending = ch[b], []
    while end[u] != j:
        c = children[u]
        k = bisect_right(cstarts[u], j - 1) - 1
        if k > 0:
            pending.append(image[c[k - 1]])
        u = c[k]
    right = image[u]
    for x in reversed(pending):
        right = table[x][right]
        mults += 1

    result = left
    if b - a >= 2:
        mid = image[ch[a + 1]]
        if len(ch) < 3 or table[mid][mid] != mid:
            raise InternalInvariant("skipped siblings do not share an idempotent image")
        result = table[result][mid]
        mults += 1
    result = table[result][right]
    mults += 1
    if counter is not None:
        counter[0] += mults
    return result
