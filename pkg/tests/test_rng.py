from factforest.rng import SplitMix64


def test_reference_vectors():
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423]
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_word_matches_below():
    a, b = SplitMix64(42), SplitMix64(42)
    assert a.word("xyz", 500) == "".join("xyz"[b.below(3)] for _ in range(500))


def test_range_bounds():
    r = SplitMix64(8)
    for _ in range(1000):
        i, j = r.range(17)
        assert 0 <= i < j <= 17
