"""Construction of factorization trees of height at most 3|{x : [w] <=_J x}|.

The construction works one J-class at a time.  A word ``w`` is cut, scanning
from the right, into ``w0 a1w1 ... amwm`` where every block ``ai wi`` is the
shortest suffix (of what remains) whose image is J-equivalent to ``[w]``;
the factors ``wi`` and ``w0`` then lie strictly J-above ``[w]`` and are built
recursively.  Inside the J-class the blocks are arranged according to the
pairs ``(L-class of block i, R-class of block i+1)``:

* every pair occurs at most twice: a comb over the blocks;
* some pair occurs three or more times: the stretches between its
  occurrences all lie in one group H-class, and are arranged by their
  prefix products.  A prefix value seen three or more times cuts out a run
  of stretches whose images are the group identity, which becomes one flat
  node.

Choices left open by the construction are made deterministically: the
repeated pair (resp. prefix value) with the earliest first occurrence wins.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import EmptyWord, InternalInvariant
from .forest import Leaf, Node
from .green import j_upper_set_size


@dataclass(frozen=True)
class JDecomposition:
    """``word == w0 + a1 + w1 + ... + am + wm`` with pairs ``(L_i, R_i)``, i < m."""
    w0: str
    blocks: list
    pair_seq: list

    @property
    def m(self):
        return len(self.blocks)

    def reassemble(self):
        return self.w0 + "".join(a + wi for a, wi in self.blocks)


def _scan(img, table, jc, start, end, target):
    """Right-to-left J-factorization of ``img[start:end]``.

    Returns ``(w0_end, w0_image, blocks)`` with blocks as
    ``(block_start, block_end, image, tail_image)`` in left-to-right order;
    ``tail_image`` is the image of the block minus its first letter, -1 if empty.
    """
    blocks = []
    blk_end = end
    cur = tail = -1
    for pos in range(end - 1, start - 1, -1):
        if pos == blk_end - 1:
            tail = -1
            cur = img[pos]
        else:
            tail = cur
            cur = table[img[pos]][cur]
        if jc[cur] == target:
            blocks.append((pos, blk_end, cur, tail))
            blk_end = pos
    blocks.reverse()
    return blk_end, (cur if blk_end > start else -1), blocks


def j_factorize(phi, green, w):
    if not w:
        raise EmptyWord("cannot factorize the empty word")
    img = phi.images(w)
    table = phi.semigroup.table
    whole = img[0]
    for x in img[1:]:
        whole = table[whole][x]
    w0_end, _, blocks = _scan(img, table, green.j_class, 0, len(w), green.j_class[whole])
    pairs = [(green.l_class[blocks[i][2]], green.r_class[blocks[i + 1][2]])
             for i in range(len(blocks) - 1)]
    return JDecomposition(w[:w0_end], [(w[s], w[s + 1:e]) for s, e, _, _ in blocks], pairs)


def _prefix_values(images, table):
    """Products of the proper prefixes of ``images`` (length k-1)."""
    out = []
    acc = None
    for g in images[:-1]:
        acc = g if acc is None else table[acc][g]
        out.append(acc)
    return out


def prefix_set(phi, green, blocks):
    """``{[b1...bj] : 1 <= j < k}`` for a list of nonempty words ``b1..bk``."""
    s = phi.semigroup
    images = []
    for b in blocks:
        acc = None
        for x in phi.images(b):
            acc = x if acc is None else s.table[acc][x]
        if acc is None:
            raise EmptyWord("blocks must be nonempty")
        images.append(acc)
    return set(_prefix_values(images, s.table))


def height_bound(green, image):
    return 3 * j_upper_set_size(green, image)


class _Builder:
    def __init__(self, phi, green, word, trace=None):
        self.word = word
        self.img = phi.images(word)
        self.table = phi.semigroup.table
        self.green = green
        self.jc = green.j_class
        self.lc = green.l_class
        self.rc = green.r_class
        self.hc = green.h_class
        self.idem = green.idempotent
        self.n_r = max(green.r_class) + 1
        self.trace = trace

    # -- tracing (termination measure) ----------------------------------
    def _enter(self, parent, kind, measure):
        if self.trace is None:
            return None
        self.trace.append((parent, kind, measure))
        return len(self.trace) - 1

    def _up(self, x):
        return int(self.green.leq_j_matrix[x].sum())

    # -- helpers ----------------------------------------------------------
    def join(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        return Node((a, b), self.table[a.image][b.image])

    def mul(self, x, y):
        return self.table[x][y]

    def chain(self, trees):
        """Same shape as :func:`chain`, without a call per multiplication."""
        table = self.table
        acc = trees[-1]
        for t in reversed(trees[:-1]):
            acc = Node((t, acc), table[t.image][acc.image])
        return acc

    # -- one J-class ------------------------------------------------------
    def build(self, start, end, parent=None, whole=None):
        img, table = self.img, self.table
        if end - start == 1:
            return Leaf(self.word[start], img[start], start)
        if whole is None:
            whole = img[start]
            for x in img[start + 1:end]:
                whole = table[whole][x]
        tid = None
        if self.trace is not None:
            tid = self._enter(parent, "word", (self._up(whole), float("inf"), float("inf"), end - start))

        w0_end, w0_img, blocks = _scan(img, table, self.jc, start, end, self.jc[whole])
        trees = []
        word = self.word
        for s, e, image, tail in blocks:
            leaf = Leaf(word[s], img[s], s)
            trees.append(leaf if e - s == 1 else Node((leaf, self.build(s + 1, e, tid, tail)), image))
        w0 = self.build(start, w0_end, tid, w0_img) if w0_end > start else None

        lc, rc, n_r = self.lc, self.rc, self.n_r
        bimg = [b[2] for b in blocks]
        pair = [lc[bimg[i]] * n_r + rc[bimg[i + 1]] for i in range(len(bimg) - 1)]
        level = _Level(self, trees, bimg, pair, tid, self._up(whole) if tid is not None else 0)
        tree = level.solve(0, len(trees), w0, tid)
        if tree.image != whole or tree.start != start or tree.end != end:
            raise InternalInvariant(f"tree for [{start},{end}) does not cover its factor")
        return tree


class _Level:
    """Arrangement of the blocks of one J-factorization."""

    def __init__(self, builder, trees, bimg, pair, tid, up):
        self.b = builder
        self.trees = trees
        self.bimg = bimg
        self.pair = pair
        self.up = up

    def _fold(self, lo, hi):
        t = self.b.table
        acc = self.bimg[lo]
        for i in range(lo + 1, hi):
            acc = t[acc][self.bimg[i]]
        return acc

    def solve(self, lo, hi, w0, parent):
        """Tree for blocks ``lo..hi-1``, preceded by ``w0`` when given."""
        b = self.b
        trees, bimg, pair = self.trees, self.bimg, self.pair
        if hi - lo == 1:
            return b.join(w0, trees[lo])
        tid = None
        npairs = 0
        if b.trace is not None:
            npairs = len(set(pair[lo:hi - 1]))
            tid = b._enter(parent, "blocks", (self.up, npairs, float("inf"), hi - lo))

        e = bimg[lo]
        if hi - lo >= 3 and b.idem[e] and bimg[lo:hi].count(e) == hi - lo:
            # every block carries the same idempotent: one flat node suffices
            return b.join(w0, Node(trees[lo:hi], e))

        chosen = None
        if hi - lo > 4:     # a pair needs 3 occurrences, hence at least 4 blocks
            counts = {}
            for p in pair[lo:hi - 1]:
                counts[p] = counts.get(p, 0) + 1
            if max(counts.values()) >= 3:
                chosen = next(p for p in pair[lo:hi - 1] if counts[p] >= 3)
        if chosen is None:
            if w0 is not None:
                return b.join(b.join(w0, trees[lo]), b.chain(trees[lo + 1:hi]))
            return b.chain(trees[lo:hi])

        occ = [i for i in range(lo, hi - 1) if pair[i] == chosen]
        prefix = self.solve(lo, occ[0] + 1, w0, tid)
        suffix = self.solve(occ[-1] + 1, hi, None, tid)
        items = []
        hc = b.hc
        for j in range(1, len(occ)):
            s, t = occ[j - 1] + 1, occ[j] + 1
            items.append((s, t, bimg[s] if t - s == 1 else self._fold(s, t)))
        h = hc[items[0][2]]
        if any(hc[g] != h for _, _, g in items) or not b.green.group_h[h]:
            raise InternalInvariant("stretches between a repeated pair are not in one group H-class")
        return self.group(prefix, items, suffix, tid, npairs)

    def group(self, left_flank, items, right_flank, parent, npairs=0):
        """Arrange stretches ``items`` (all in one group H-class) between two flanks."""
        b = self.b
        table = b.table
        k = len(items)
        trees = self.trees
        if k == 1 and b.trace is None:
            s, t, _ = items[0]
            mid = trees[s] if t - s == 1 else self.solve(s, t, None, None)
            return b.join(b.join(left_flank, mid), right_flank)
        if k <= 3 and b.trace is None:
            px = ()         # fewer than 3 prefix values: nothing can repeat 3 times
        else:
            px = _prefix_values([g for _, _, g in items], table)
        tid = None
        if b.trace is not None:
            tid = b._enter(parent, "group", (self.up, npairs, len(set(px)), k))

        x = None
        if len(px) >= 3:
            counts = {}
            for v in px:
                counts[v] = counts.get(v, 0) + 1
            if max(counts.values()) >= 3:
                x = next(v for v in px if counts[v] >= 3)
        if x is None:
            ts = [trees[s] if t - s == 1 else self.solve(s, t, None, tid) for s, t, _ in items]
            head = b.join(left_flank, ts[0]) if ts else left_flank
            tail = b.join(b.chain(ts[1:]), right_flank) if k >= 2 else right_flank
            return b.join(head, tail)

        js = [j + 1 for j, v in enumerate(px) if v == x]   # 1-based stretch counts
        left = self.group(left_flank, items[:js[0]], None, tid, npairs)
        vs = []
        for i in range(1, len(js)):
            a, z = js[i - 1], js[i]
            if z - a == 1 and b.trace is None:
                s, t, _ = items[a]
                vs.append(trees[s] if t - s == 1 else self.solve(s, t, None, None))
            else:
                vs.append(self.group(None, items[a:z], None, tid, npairs))
        e = vs[0].image
        if table[e][e] != e or any(v.image != e for v in vs):
            raise InternalInvariant("runs between equal prefix values are not the group identity")
        rest = self.group(None, items[js[-1]:], right_flank, tid, npairs)
        return b.join(left, b.join(Node(vs, e), rest))


def build_forest(phi, green, w, trace=None):
    """Factorization tree for ``w`` with yield ``w``.

    ``trace``, when a list, receives ``(parent_index, kind, measure)`` for each
    recursive step; measures strictly decrease from parent to child.
    """
    if not w:
        raise EmptyWord("cannot build a tree for the empty word")
    builder = _Builder(phi, green, w, trace)
    # nesting depth is bounded by the tree height, at most 3|S| levels
    need = 20 * phi.semigroup.size + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    return builder.build(0, len(w))
