import pytest

from factforest.errors import EmptyRange, RangeOutOfBounds
from factforest.range_product import preprocess, query
from factforest.rng import SplitMix64
from factforest.semigroup import hom_image

from conftest import GREEN, ZOO


def fold(table, imgs, i, j):
    acc = imgs[i]
    for x in imgs[i + 1:j]:
        acc = table[acc][x]
    return acc


def test_single_letter():
    idx = preprocess(ZOO["Z2"], GREEN["Z2"], "g")
    assert len(idx.start) == 1 and query(idx, 0, 1) == 1


def test_trivial_flat():
    idx = preprocess(ZOO["trivial"], GREEN["trivial"], "x" * 100)
    assert len(idx.children[0]) == 100 and idx.height == 1
    assert query(idx, 3, 97) == 0


def test_flip_flop_abab():
    phi = ZOO["flip-flop"]
    idx = preprocess(phi, GREEN["flip-flop"], "abab")
    assert phi.semigroup.elements[query(idx, 1, 3)] == "a"
    assert query(idx, 0, 4) == hom_image(phi, "abab")
    for k, a in enumerate("abab"):
        assert query(idx, k, k + 1) == phi.letter_image[a]


def test_errors():
    idx = preprocess(ZOO["Z3"], GREEN["Z3"], "ggeg")
    with pytest.raises(EmptyRange):
        query(idx, 2, 2)
    with pytest.raises(RangeOutOfBounds):
        query(idx, 0, 5)
    with pytest.raises(RangeOutOfBounds):
        query(idx, -1, 2)


def test_navigation_consistent(zoo_entry):
    name, phi, g = zoo_entry
    w = SplitMix64(4).word(phi.alphabet, 1000)
    idx = preprocess(phi, g, w)
    t = phi.semigroup.table
    assert idx.parent[0] == -1
    for k, ch in enumerate(idx.children):
        for c in ch:
            assert idx.parent[c] == k
        if ch:
            assert idx.image[k] == fold(t, [idx.image[c] for c in ch], 0, len(ch))
            assert idx.child_starts[k] == [idx.start[c] for c in ch]
        else:
            assert idx.end[k] - idx.start[k] == 1
            assert idx.image[k] == phi.letter_image[w[idx.start[k]]]


def test_random_ranges(zoo_entry):
    name, phi, g = zoo_entry
    rng = SplitMix64(21)
    w = rng.word(phi.alphabet, 3000)
    idx = preprocess(phi, g, w)
    imgs = phi.images(w)
    t = phi.semigroup.table
    prefix = [imgs[0]]
    for x in imgs[1:]:
        prefix.append(t[prefix[-1]][x])
    for _ in range(300):
        i, j = rng.range(len(w))
        counter = [0]
        got = query(idx, i, j, counter)
        assert got == fold(t, imgs, i, j)
        assert counter[0] <= 4 * (idx.height + 1)
        if i == 0:
            assert got == prefix[j - 1]
