"""Exact minimum-height factorization trees for short words.

Dynamic programming over the intervals of the word, shortest first.  An
interval ``[i, j)`` is either split in two at some cut, or, when its image
``e`` is idempotent, split into three or more consecutive blocks each of
image ``e`` (the only idempotent such a split can use, since ``e^c = e``).
The second case is an inner DP over cut positions that tracks the best
maximum block height for 1, 2 and "3 or more" blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWord, WordTooLong
from .forest import Leaf, Node

DEFAULT_MAX_LEN = 12
INF = float("inf")


@dataclass
class OracleResult:
    min_height: int
    witness: object


def min_height_forest(phi, w, max_len_guard=DEFAULT_MAX_LEN):
    L = len(w)
    if L == 0:
        raise EmptyWord("no tree for the empty word")
    if L > max_len_guard:
        raise WordTooLong(f"word of length {L} exceeds the oracle guard {max_len_guard}")
    table = phi.semigroup.table
    letters = phi.images(w)

    img = [[-1] * (L + 1) for _ in range(L + 1)]
    for i in range(L):
        acc = letters[i]
        img[i][i + 1] = acc
        for j in range(i + 2, L + 1):
            acc = table[acc][letters[j - 1]]
            img[i][j] = acc

    mh = [[0] * (L + 1) for _ in range(L + 1)]
    how = {}
    for length in range(2, L + 1):
        for i in range(L - length + 1):
            j = i + length
            best, choice = INF, None
            for k in range(i + 1, j):
                h = 1 + max(mh[i][k], mh[k][j])
                if h < best:
                    best, choice = h, ("cut", k)
            e = img[i][j]
            if length >= 3 and table[e][e] == e:
                h, cuts = _flat_split(i, j, e, img, mh)
                if h + 1 < best:
                    best, choice = h + 1, ("flat", cuts)
            mh[i][j] = best
            how[i, j] = choice

    return OracleResult(mh[0][L], _witness(w, letters, table, img, how))


def _flat_split(i, j, e, img, mh):
    """Best split of [i, j) into >= 3 blocks of image e: (max block height, cuts)."""
    # best[c][p]: min over splits of [i, p) into c blocks (c = 3 means >= 3)
    best = [[INF] * (j + 1) for _ in range(4)]
    back = [[None] * (j + 1) for _ in range(4)]
    for p in range(i + 1, j):
        if img[i][p] == e:
            best[1][p] = mh[i][p]
    for p in range(i + 2, j + 1):
        for q in range(i + 1, p):
            if img[q][p] != e or (q, p) == (i, j):
                continue
            for c, prev in ((2, (1,)), (3, (2, 3))):
                for pc in prev:
                    v = max(best[pc][q], mh[q][p])
                    if v < best[c][p]:
                        best[c][p] = v
                        back[c][p] = (pc, q)
    if best[3][j] == INF:
        return INF, None
    cuts = [j]
    c, p = 3, j
    while c != 1:
        pc, q = back[c][p]
        cuts.append(q)
        c, p = pc, q
    cuts.append(i)
    return best[3][j], cuts[::-1]


def _witness(w, letters, table, img, how):
    def build(i, j):
        if j - i == 1:
            return Leaf(w[i], letters[i], i)
        kind, arg = how[i, j]
        if kind == "cut":
            parts = [(i, arg), (arg, j)]
        else:
            parts = list(zip(arg, arg[1:]))
        return Node([build(a, b) for a, b in parts], img[i][j])

    return build(0, len(w))
