"""Finite semigroups given by multiplication tables, and homomorphisms into them.

Elements are always handled by index; names are for display only.

Transformation semigroups use the left-to-right convention: the product
``f * g`` of two maps on ``{0..n-1}`` is "apply f, then g", i.e. the function
composition ``g o f``.  Reading a word left to right thus applies its letters
in reading order.
"""

from __future__ import annotations

import json
import os
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyGeneratorSet,
    EmptySequence,
    EmptyWord,
    FormatError,
    IndexOutOfRange,
    NonAssociative,
    UnknownLetter,
    ZeroDimension,
    ZeroOrder,
)


@dataclass(frozen=True)
class Semigroup:
    name: str
    elements: tuple
    table: tuple
    identity: int | None = None

    def __len__(self):
        return len(self.elements)

    @property
    def size(self):
        return len(self.elements)

    def mul(self, x, y):
        return self.table[x][y]

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise FormatError(f"unknown element {name!r} in semigroup {self.name!r}") from None

    def as_array(self):
        return np.asarray(self.table, dtype=np.int64)

    def to_dict(self):
        return {"name": self.name, "elements": list(self.elements),
                "table": [list(row) for row in self.table]}


def _check_associative(table):
    t = np.asarray(table, dtype=np.int64)
    n = len(t)
    for i in range(n):
        # left[j, k] = (i*j)*k, right[j, k] = i*(j*k)
        left = t[t[i]]
        right = t[i][t]
        bad = np.argwhere(left != right)
        if len(bad):
            j, k = bad[0]
            raise NonAssociative(i, int(j), int(k))


def find_identity(table):
    n = len(table)
    for u in range(n):
        if all(table[u][x] == x and table[x][u] == x for x in range(n)):
            return u
    return None


def new_semigroup(elements, table, name="S"):
    """Validate a multiplication table and wrap it as a :class:`Semigroup`.

    Raises DimensionMismatch, IndexOutOfRange or NonAssociative (with the
    lexicographically first failing triple as witness).
    """
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n == 0:
        raise DimensionMismatch("a semigroup needs at least one element")
    if len(set(elements)) != n:
        raise DimensionMismatch("element names must be distinct")
    if len(table) != n or any(len(row) != n for row in table):
        raise DimensionMismatch(f"table must be {n}x{n}")
    for r, row in enumerate(table):
        for c, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise IndexOutOfRange(r, c, v)
    rows = tuple(tuple(int(v) for v in row) for row in table)
    _check_associative(rows)
    return Semigroup(name, elements, rows, find_identity(rows))


def product(s, xs):
    """Left fold of a nonempty sequence of element indices."""
    it = iter(xs)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptySequence("product of an empty sequence") from None
    t = s.table
    for x in it:
        acc = t[acc][x]
    return acc


def is_idempotent(s, x):
    return s.table[x][x] == x


def idempotents(s):
    return {x for x in range(s.size) if s.table[x][x] == x}


# -- standard constructions -------------------------------------------------

def rectangular_band(p, q):
    if p < 1 or q < 1:
        raise ZeroDimension(f"rectangular band needs p, q >= 1 (got {p}, {q})")
    pairs = [(i, j) for i in range(p) for j in range(q)]
    idx = {pq: k for k, pq in enumerate(pairs)}
    table = [[idx[(a[0], b[1])] for b in pairs] for a in pairs]
    return new_semigroup([f"({i},{j})" for i, j in pairs], table, name=f"B({p},{q})")


def cyclic_group(n):
    if n < 1:
        raise ZeroOrder("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return new_semigroup([str(i) for i in range(n)], table, name=f"Z{n}")


def transformation_closure(n, generators, name=None, names=None):
    """Semigroup generated by maps on ``{0..n-1}`` under left-to-right composition.

    Elements are numbered in BFS discovery order (generators first, then
    right multiples by generators).  Returns the semigroup together with the
    element index of each generator.
    """
    gens = [tuple(int(v) for v in g) for g in generators]
    if not gens:
        raise EmptyGeneratorSet("transformation_closure needs at least one generator")
    for g in gens:
        if len(g) != n or any(not 0 <= v < n for v in g):
            raise DimensionMismatch(f"generator {g} is not a total map on {n} points")

    order, seen = [], {}
    for g in gens:
        if g not in seen:
            seen[g] = len(order)
            order.append(g)
    head = 0
    while head < len(order):
        f = order[head]
        head += 1
        for g in gens:
            h = tuple(g[f[i]] for i in range(n))
            if h not in seen:
                seen[h] = len(order)
                order.append(h)

    table = [[seen[tuple(g[f[i]] for i in range(n))] for g in order] for f in order]
    if names is None:
        names = [f"t{k}" for k in range(len(order))]
    s = new_semigroup(names, table, name=name or f"T{n}<{len(gens)} gens>")
    return s, [seen[g] for g in gens]


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    semigroup: Semigroup
    alphabet: tuple
    letter_image: Mapping = field(hash=False)

    def images(self, w):
        """Letter images of ``w`` as a list, raising UnknownLetter."""
        li = self.letter_image
        try:
            return [li[a] for a in w]
        except KeyError:
            for pos, a in enumerate(w):
                if a not in li:
                    raise UnknownLetter(pos, a) from None
            raise

    def __call__(self, w):
        return hom_image(self, w)


def homomorphism(s, letter_image):
    """Build a homomorphism from a ``letter -> element`` mapping.

    Targets may be indices or element names.  Letters are single characters.
    """
    mapping = {}
    for a, x in letter_image.items():
        if not isinstance(a, str) or len(a) != 1:
            raise FormatError(f"letters must be single characters, got {a!r}")
        if isinstance(x, str):
            x = s.index(x)
        if not 0 <= x < s.size:
            raise FormatError(f"letter {a!r} maps outside the semigroup")
        mapping[a] = int(x)
    if not mapping:
        raise FormatError("alphabet is empty")
    return Homomorphism(s, tuple(mapping), mapping)


def hom_image(phi, w):
    if len(w) == 0:
        raise EmptyWord("the image of the empty word is undefined in a semigroup")
    return product(phi.semigroup, phi.images(w))


# -- file formats -----------------------------------------------------------

def _reject_unknown(doc, allowed, what):
    if not isinstance(doc, dict):
        raise FormatError(f"{what} must be a JSON object")
    extra = set(doc) - set(allowed)
    if extra:
        raise FormatError(f"unknown keys in {what}: {sorted(extra)}")
    missing = [k for k in allowed if k not in doc and k != "name"]
    if missing:
        raise FormatError(f"missing keys in {what}: {missing}")


def semigroup_from_dict(doc):
    _reject_unknown(doc, ("name", "elements", "table"), "semigroup document")
    return new_semigroup(doc["elements"], doc["table"], name=doc.get("name", "S"))


def homomorphism_from_dict(doc, base_dir="."):
    _reject_unknown(doc, ("semigroup", "alphabet"), "homomorphism document")
    sg = doc["semigroup"]
    if isinstance(sg, str):
        s = load_semigroup(os.path.join(base_dir, sg))
    else:
        s = semigroup_from_dict(sg)
    if not isinstance(doc["alphabet"], dict):
        raise FormatError("alphabet must map letters to element names")
    return homomorphism(s, doc["alphabet"])


def homomorphism_to_dict(phi):
    s = phi.semigroup
    return {"semigroup": s.to_dict(),
            "alphabet": {a: s.elements[phi.letter_image[a]] for a in phi.alphabet}}


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def load_semigroup(path):
    return semigroup_from_dict(_load_json(path))


def load_homomorphism(path):
    return homomorphism_from_dict(_load_json(path), os.path.dirname(os.path.abspath(path)))


def words(alphabet: Sequence, max_len, min_len=1):
    """All words over ``alphabet`` of length min_len..max_len, shortest first."""
    from itertools import product as cartesian
    for n in range(min_len, max_len + 1):
        for letters in cartesian(alphabet, repeat=n):
            yield "".join(letters)
