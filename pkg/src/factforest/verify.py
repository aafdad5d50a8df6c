"""Independent checking of factorization trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FactForestError
from .forest import Leaf, height as tree_height
from .green import j_upper_set_size


@dataclass
class VerifyReport:
    valid: bool
    violations: list = field(default_factory=list)
    height: int = 0
    bound: int = 0
    yield_ok: bool = False
    within_bound: bool = False

    def to_dict(self):
        return {
            "valid": self.valid,
            "yield_ok": self.yield_ok,
            "height": self.height,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "violations": [{"span": list(span), "rule": rule} for span, rule in self.violations],
        }


def verify_valid(tree, phi, green, w):
    """Check ``tree`` against the definition of a factorization tree for ``w``.

    Never raises on malformed trees; problems are listed as ``(span, rule)``.
    Exceeding the height bound is reported through ``within_bound`` only and
    does not make the tree invalid.
    """
    s = phi.semigroup
    table = s.table
    n = s.size
    li = phi.letter_image
    violations = []
    add = violations.append
    letters = []
    h = 0
    nw = len(w)

    # stack of child iterators: leaves are checked in document order, depth = len(stack) - 1
    stack = [iter((tree,))]
    while stack:
        for t in stack[-1]:
            if type(t) is Leaf or isinstance(t, Leaf):
                letters.append(t.letter)
                st = t.start
                if t.end - st != 1:
                    add(((st, t.end), "leaf span must have length 1"))
                if not (0 <= st < nw) or w[st] != t.letter:
                    add(((st, t.end), "leaf letter disagrees with the word"))
                if t.letter not in li:
                    add(((st, t.end), "leaf letter not in the alphabet"))
                elif t.image != li[t.letter]:
                    add(((st, t.end), "leaf image differs from the letter image"))
                continue
            depth = len(stack)
            if depth > h:
                h = depth
            ch = t.children
            if len(ch) < 2:
                add(((t.start, t.end), "node needs at least 2 children"))
                if not ch:
                    continue
            if ch[0].start != t.start or ch[-1].end != t.end:
                add(((t.start, t.end), "children do not tile the node span"))
            e = acc = ch[0].image
            good = type(acc) is int and 0 <= acc < n
            same = True
            prev_end = ch[0].end
            ordered = True
            for c in ch[1:]:
                if c.start != prev_end:
                    ordered = False
                prev_end = c.end
                if good:
                    x = c.image
                    if type(x) is int and 0 <= x < n:
                        if x != e:
                            same = False
                        acc = table[acc][x]
                    else:
                        good = False
            if not ordered:
                add(((t.start, t.end), "children spans are not contiguous and in order"))
            if good:
                if len(ch) >= 3:
                    if not same:
                        add(((t.start, t.end), "children of a node with >= 3 children differ in image"))
                    elif table[e][e] != e:
                        add(((t.start, t.end), "children of a node with >= 3 children are not idempotent"))
                if t.image != acc:
                    add(((t.start, t.end), "node image differs from the product of its children"))
            else:
                add(((t.start, t.end), "child carries an invalid image"))
            stack.append(iter(ch))
            break
        else:
            stack.pop()

    if (tree.start, tree.end) != (0, len(w)):
        add(((tree.start, tree.end), "root span does not cover the word"))

    yield_ok = "".join(letters) == w
    try:
        bound = 3 * j_upper_set_size(green, phi(w))
    except FactForestError:
        bound = 0
    return VerifyReport(valid=not violations and yield_ok, violations=violations, height=h,
                        bound=bound, yield_ok=yield_ok, within_bound=bool(w) and h <= bound)


def height(tree):
    return tree_height(tree)
