"""Factorization trees.

A tree is a :class:`Leaf` (one letter) or a :class:`Node` with ordered
children.  Every tree caches the image of the factor it spans and the span
itself as ``[start, end)`` offsets into the source word.  Traversals here are
iterative so hand-made trees of any depth can be measured and printed.
"""

from __future__ import annotations

import json

from .errors import FormatError


class Leaf:
    __slots__ = ("letter", "image", "start", "end")

    children = ()
    height = 0

    def __init__(self, letter, image, start):
        self.letter = letter
        self.image = image
        self.start = start
        self.end = start + 1

    @property
    def span(self):
        return (self.start, self.start + 1)

    def __repr__(self):
        return f"Leaf({self.letter!r}@{self.start})"


class Node:
    __slots__ = ("children", "image", "start", "end", "height")

    letter = None

    def __init__(self, children, image, span=None):
        self.children = ch = tuple(children)
        self.image = image
        if span is None:
            if ch:
                self.start = ch[0].start
                self.end = ch[-1].end
            else:
                self.start = self.end = 0
        else:
            self.start, self.end = span
        h = 0
        for c in ch:
            if c.height > h:
                h = c.height
        self.height = h + 1

    @property
    def span(self):
        return (self.start, self.end)

    def __repr__(self):
        return f"Node[{self.start}:{self.end}]({len(self.children)} children)"


def iter_nodes(tree):
    """Pre-order traversal."""
    stack = [tree]
    while stack:
        t = stack.pop()
        yield t
        stack.extend(reversed(t.children))


def height(tree):
    """Recomputed height: 0 for a leaf, 1 + max over children otherwise."""
    best = 0
    stack = [(tree, 0)]
    while stack:
        t, d = stack.pop()
        if t.children:
            stack.extend((c, d + 1) for c in t.children)
        elif isinstance(t, Node):
            best = max(best, d + 1)
        else:
            best = max(best, d)
    return best


def tree_yield(tree):
    return "".join(t.letter for t in iter_nodes(tree) if isinstance(t, Leaf))


def chain(trees, mul):
    """Right-leaning comb ``(t1, (t2, (... , tn)))``; a single tree is returned as is.

    ``mul`` multiplies two element indices.
    """
    trees = list(trees)
    if not trees:
        raise ValueError("chain of no trees")
    acc = trees[-1]
    for t in reversed(trees[:-1]):
        acc = Node((t, acc), mul(t.image, acc.image))
    return acc


def is_idempotent_node(tree, table):
    """All children share one image and that image is idempotent."""
    ch = tree.children
    if not ch:
        return False
    e = ch[0].image
    return table[e][e] == e and all(c.image == e for c in ch)


# -- JSON / DOT -------------------------------------------------------------

def tree_to_dict(tree, semigroup):
    """Forest JSON for one tree (no top-level metadata)."""
    names = semigroup.elements
    table = semigroup.table

    def convert(t):
        if isinstance(t, Leaf):
            return {"letter": t.letter, "image": names[t.image]}
        return {"image": names[t.image], "idempotent": is_idempotent_node(t, table),
                "children": [convert(c) for c in t.children]}

    return convert(tree)


def forest_document(tree, phi, word, bound, seed=None):
    from . import __version__
    doc = {"tool_version": __version__, "seed": seed, "word": word,
           "height": height(tree), "bound": bound}
    doc.update(tree_to_dict(tree, phi.semigroup))
    return doc


def tree_from_dict(doc, phi):
    """Rebuild a tree from forest JSON.  Spans are assigned from leaf order.

    Structural problems (wrong arity, bad images) are kept so the verifier
    can report them; only undecodable documents raise FormatError.
    """
    s = phi.semigroup

    def image_of(d):
        name = d.get("image")
        if name is None:
            return None
        if name not in s.elements:
            raise FormatError(f"unknown element name {name!r}")
        return s.elements.index(name)

    pos = 0
    meta = {"word", "height", "bound", "tool_version", "seed"}
    if isinstance(doc, dict):
        doc = {k: v for k, v in doc.items() if k not in meta}

    def convert(d):
        nonlocal pos
        if not isinstance(d, dict):
            raise FormatError("tree entries must be JSON objects")
        if "letter" in d:
            extra = set(d) - {"letter", "image"}
            if extra:
                raise FormatError(f"unknown keys in leaf: {sorted(extra)}")
            letter = d["letter"]
            if not isinstance(letter, str) or len(letter) != 1:
                raise FormatError(f"leaf letter must be one character, got {letter!r}")
            img = image_of(d)
            if img is None:
                img = phi.letter_image.get(letter, -1)
            leaf = Leaf(letter, img, pos)
            pos += 1
            return leaf
        extra = set(d) - {"image", "idempotent", "children"}
        if extra:
            raise FormatError(f"unknown keys in node: {sorted(extra)}")
        start = pos
        children = [convert(c) for c in d.get("children", [])]
        img = image_of(d)
        if img is None:
            img = -1
        return Node(children, img, (start, pos))

    return convert(doc)


def tree_to_dot(tree, semigroup, word=None):
    names = semigroup.elements
    table = semigroup.table
    lines = ["digraph forest {", "  node [fontname=monospace];"]
    ids = {}
    for k, t in enumerate(iter_nodes(tree)):
        ids[id(t)] = k
        if isinstance(t, Leaf):
            lines.append(f'  n{k} [shape=plaintext,label="{t.letter}"];')
        else:
            shape = "doublecircle" if len(t.children) >= 3 and is_idempotent_node(t, table) else "circle"
            lines.append(f'  n{k} [shape={shape},label="{names[t.image]}"];')
    for t in iter_nodes(tree):
        for c in t.children:
            lines.append(f"  n{ids[id(t)]} -> n{ids[id(c)]};")
    if word is not None:
        lines.append(f'  label="{word}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_text(tree, semigroup):
    """Bracketed one-line rendering, e.g. ``((a b) c)``; flat nodes use ``[...]``."""
    table = semigroup.table
    out = []
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, str):
            out.append(t)
        elif isinstance(t, Leaf):
            out.append(t.letter)
        else:
            flat = len(t.children) >= 3 and is_idempotent_node(t, table)
            open_, close = ("[", "]") if flat else ("(", ")")
            parts = [open_]
            for i, c in enumerate(t.children):
                if i:
                    parts.append(" ")
                parts.append(c)
            parts.append(close)
            stack.extend(reversed(parts))
    return "".join(out)


def dumps(doc):
    return json.dumps(doc, indent=None, separators=(",", ":"))
