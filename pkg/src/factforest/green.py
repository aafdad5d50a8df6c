"""Green's relations on a finite semigroup.

The preorders are materialised once as boolean matrices, so every later
query is a table lookup.  ``leq_r[x, y]`` holds iff ``x`` lies in ``y S^1``,
which for a finite table is just ``{y}`` together with row ``y``;
``leq_l`` uses column ``y``; ``x <=_J y`` iff ``x <=_L z <=_R y`` for some z.
The identity adjoined for ``S^1`` is never materialised.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class GreenData:
    size: int
    leq_r_matrix: np.ndarray
    leq_l_matrix: np.ndarray
    leq_j_matrix: np.ndarray
    r_class: tuple
    l_class: tuple
    j_class: tuple
    h_class: tuple
    j_class_hsize: tuple
    group_h: tuple
    idempotent: tuple

    def leq_r(self, x, y):
        return bool(self.leq_r_matrix[x, y])

    def leq_l(self, x, y):
        return bool(self.leq_l_matrix[x, y])

    def leq_j(self, x, y):
        return bool(self.leq_j_matrix[x, y])

    def lt_j(self, x, y):
        return bool(self.leq_j_matrix[x, y] and not self.leq_j_matrix[y, x])

    def members(self, classes, cid):
        return [x for x in range(self.size) if classes[x] == cid]

    @property
    def n_j_classes(self):
        return len(self.j_class_hsize)

    @property
    def n_h_classes(self):
        return len(self.group_h)


def _classes(leq):
    """Class ids of the equivalence ``leq & leq.T``, numbered by least member."""
    eq = leq & leq.T
    n = len(eq)
    ids = [-1] * n
    nxt = 0
    for x in range(n):
        if ids[x] < 0:
            for y in np.flatnonzero(eq[x]):
                ids[y] = nxt
            nxt += 1
    return tuple(ids)


def compute_green(s):
    t = s.as_array()
    n = len(t)
    idx = np.arange(n)

    leq_r = np.zeros((n, n), dtype=bool)
    leq_r[t, idx[:, None]] = True          # y*s <=_R y
    leq_r[idx, idx] = True
    leq_l = np.zeros((n, n), dtype=bool)
    leq_l[t, idx[None, :]] = True          # s*y <=_L y
    leq_l[idx, idx] = True
    leq_j = (leq_l.astype(np.float64) @ leq_r.astype(np.float64)) > 0

    r_class = _classes(leq_r)
    l_class = _classes(leq_l)
    j_class = _classes(leq_j)

    h_ids, h_class = {}, []
    for x in range(n):
        key = (r_class[x], l_class[x])
        if key not in h_ids:
            h_ids[key] = len(h_ids)
        h_class.append(h_ids[key])
    h_class = tuple(h_class)

    idem = tuple(bool(t[x, x] == x) for x in range(n))
    group_h = [False] * len(h_ids)
    for x in range(n):
        if idem[x]:
            group_h[h_class[x]] = True

    hsize = {}
    for x in range(n):
        hsize[h_class[x]] = hsize.get(h_class[x], 0) + 1
    j_hsize = [0] * (max(j_class) + 1)
    for x in range(n):
        j_hsize[j_class[x]] = hsize[h_class[x]]

    return GreenData(n, leq_r, leq_l, leq_j, r_class, l_class, j_class, h_class,
                     tuple(j_hsize), tuple(group_h), idem)


def leq_j(g, x, y):
    return g.leq_j(x, y)


def leq_l(g, x, y):
    return g.leq_l(x, y)


def leq_r(g, x, y):
    return g.leq_r(x, y)


def j_upper_set_size(g, x):
    """Number of elements y with x <=_J y."""
    return int(g.leq_j_matrix[x].sum())


def is_group_h_class(g, h):
    return g.group_h[h]


# -- reports ----------------------------------------------------------------

def eggbox(s, g):
    """JSON-ready eggbox: one entry per J-class, rows are R-classes, columns L-classes."""
    name = s.elements
    out = []
    for j in range(g.n_j_classes):
        xs = g.members(g.j_class, j)
        rs = sorted({g.r_class[x] for x in xs})
        ls = sorted({g.l_class[x] for x in xs})
        cells, flags = [], []
        for r in rs:
            for l in ls:
                cell = [x for x in xs if g.r_class[x] == r and g.l_class[x] == l]
                cells.append([name[x] for x in cell])
                flags.append(g.group_h[g.h_class[cell[0]]])
        out.append({
            "elements": [name[x] for x in xs],
            "r_classes": [[name[x] for x in xs if g.r_class[x] == r] for r in rs],
            "l_classes": [[name[x] for x in xs if g.l_class[x] == l] for l in ls],
            "h_classes": cells,
            "h_size": g.j_class_hsize[j],
            "group_h": flags,
        })
    return {"semigroup": s.name, "size": s.size, "j_classes": out}


def j_order_dot(s, g):
    """Hasse diagram of the J-order on J-classes, in DOT syntax (edges point down)."""
    k = g.n_j_classes
    rep = [g.j_class.index(j) for j in range(k)]
    above = [[j != i and g.leq_j(rep[i], rep[j]) for j in range(k)] for i in range(k)]
    lines = ["digraph jorder {", "  rankdir=TB;"]
    for j in range(k):
        label = " ".join(s.elements[x] for x in g.members(g.j_class, j))
        lines.append(f'  J{j} [shape=box,label="{label}"];')
    for hi in range(k):
        for lo in range(k):
            if above[lo][hi] and not any(above[lo][m] and above[m][hi] for m in range(k)):
                lines.append(f"  J{hi} -> J{lo};")
    lines.append("}")
    return "\n".join(lines) + "\n"
