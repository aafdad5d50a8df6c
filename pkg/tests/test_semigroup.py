import json

import pytest
from hypothesis import given, settings, strategies as st

from factforest.errors import (
    DimensionMismatch,
    EmptySequence,
    EmptyWord,
    FormatError,
    IndexOutOfRange,
    NonAssociative,
    UnknownLetter,
)
from factforest.semigroup import (
    cyclic_group,
    hom_image,
    homomorphism,
    homomorphism_from_dict,
    homomorphism_to_dict,
    idempotents,
    is_idempotent,
    new_semigroup,
    product,
    rectangular_band,
    semigroup_from_dict,
    transformation_closure,
    words,
)
from factforest.zoo import flip_flop, zoo

from conftest import ZOO


def brute_associative(table):
    n = len(table)
    return all(table[table[i][j]][k] == table[i][table[j][k]]
               for i in range(n) for j in range(n) for k in range(n))


def test_trivial_table():
    s = new_semigroup(["e"], [[0]])
    assert s.size == 1 and s.identity == 0


def test_z2_table():
    s = new_semigroup(["e", "g"], [[0, 1], [1, 0]])
    assert s.identity == 0
    assert brute_associative(s.table)


def test_non_associative_witness():
    table = [[1, 0], [0, 0]]
    assert not brute_associative(table)
    with pytest.raises(NonAssociative) as exc:
        new_semigroup(["a", "b"], table)
    i, j, k = exc.value.witness
    assert table[table[i][j]][k] != table[i][table[j][k]]


def test_validation_order():
    with pytest.raises(DimensionMismatch):
        new_semigroup(["a", "b"], [[0, 1]])
    with pytest.raises(IndexOutOfRange):
        new_semigroup(["a"], [[3]])


def test_product_examples():
    z2 = cyclic_group(2)
    assert product(z2, [1, 1]) == 0
    assert product(z2, [1]) == 1
    b = rectangular_band(2, 2)
    assert product(b, [b.index("(0,1)"), b.index("(1,0)")]) == b.index("(0,0)")
    with pytest.raises(EmptySequence):
        product(z2, [])


def test_idempotents():
    assert is_idempotent(new_semigroup(["e"], [[0]]), 0)
    assert not is_idempotent(cyclic_group(2), 1)
    b22 = rectangular_band(2, 2)
    assert all(is_idempotent(b22, x) for x in range(4))
    assert set(idempotents(cyclic_group(4))) == {0}
    assert set(idempotents(rectangular_band(2, 3))) == set(range(6))
    assert set(idempotents(flip_flop())) == {0, 1, 2}
    assert set(idempotents(cyclic_group(3))) == {0}


def test_rectangular_band_shapes():
    assert rectangular_band(1, 1).size == 1
    b = rectangular_band(2, 3)
    assert b.size == 6 and b.identity is None


def test_hom_image_examples():
    z2 = cyclic_group(2)
    phi = homomorphism(z2, {"g": 1})
    assert hom_image(phi, "gg") == 0
    assert hom_image(phi, "g") == 1
    ff = homomorphism(flip_flop(), {"a": "a", "b": "b"})
    assert ff.semigroup.elements[hom_image(ff, "ab")] == "b"
    with pytest.raises(EmptyWord):
        hom_image(phi, "")
    with pytest.raises(UnknownLetter) as exc:
        hom_image(phi, "gxg")
    assert exc.value.position == 1


def test_closure_examples():
    s, gens = transformation_closure(2, [(1, 0)])
    assert s.size == 2 and s.identity is not None
    assert s.table[gens[0]][gens[0]] == s.identity
    rz, gens = transformation_closure(2, [(0, 0), (1, 1)])
    assert rz.size == 2
    # right-zero: x*y = y
    assert all(rz.table[x][y] == y for x in range(2) for y in range(2))
    t, _ = transformation_closure(1, [(0,)])
    assert t.size == 1


def test_composition_convention():
    # x*y applies x first: swap then const0 is const0, const0 then swap is const1
    s, (sw, c0) = transformation_closure(2, [(1, 0), (0, 0)])
    assert s.table[sw][c0] == c0
    assert s.table[c0][sw] != c0
    assert s.size == 4


def test_json_roundtrip_and_unknown_keys(tmp_path):
    phi = ZOO["flip-flop"]
    doc = homomorphism_to_dict(phi)
    back = homomorphism_from_dict(json.loads(json.dumps(doc)))
    assert back.letter_image == phi.letter_image
    assert back.semigroup.table == phi.semigroup.table
    bad = dict(doc["semigroup"], colour="red")
    with pytest.raises(FormatError):
        semigroup_from_dict(bad)
    (tmp_path / "s.json").write_text(json.dumps(doc["semigroup"]))
    ref = dict(doc, semigroup="s.json")
    assert homomorphism_from_dict(ref, str(tmp_path)).semigroup.table == phi.semigroup.table


def test_words_enumeration():
    assert list(words("ab", 2)) == ["a", "b", "aa", "ab", "ba", "bb"]


def test_every_zoo_table_associative():
    for phi in zoo().values():
        assert brute_associative(phi.semigroup.table)
        n = phi.semigroup.size
        assert all(0 <= v < n for row in phi.semigroup.table for v in row)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(ZOO)), st.data())
def test_homomorphy(name, data):
    phi = ZOO[name]
    letters = st.sampled_from(list(phi.alphabet))
    u = "".join(data.draw(st.lists(letters, min_size=1, max_size=30)))
    v = "".join(data.draw(st.lists(letters, min_size=1, max_size=30)))
    t = phi.semigroup.table
    assert hom_image(phi, u + v) == t[hom_image(phi, u)][hom_image(phi, v)]
    xs, ys = phi.images(u), phi.images(v)
    s = phi.semigroup
    assert product(s, xs + ys) == t[product(s, xs)][product(s, ys)]
