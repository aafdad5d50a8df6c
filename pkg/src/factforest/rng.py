"""SplitMix64: a tiny, fully specified PRNG so seeded fixtures are portable."""

import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform integer in ``[0, n)`` (Lemire-style multiply-shift, slight bias is fine here)."""
        return (self.next_u64() * n) >> 64

    def word(self, alphabet, length):
        """``length`` letters, letter ``i`` drawn as ``alphabet[below(len(alphabet))]``."""
        alphabet = list(alphabet)
        k = len(alphabet)
        if length <= 0:
            return ""
        # the i-th state is seed + i*GAMMA, so the stream vectorizes (uint64 wraps mod 2**64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + np.arange(1, length + 1, dtype=np.uint64) * np.uint64(GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z ^= z >> np.uint64(31)
            # (z * k) >> 64 for k < 2**32, split into 32-bit halves
            hi = z >> np.uint64(32)
            lo = z & np.uint64(0xFFFFFFFF)
            pick = (hi * np.uint64(k) + ((lo * np.uint64(k)) >> np.uint64(32))) >> np.uint64(32)
        self.state = (self.state + length * GAMMA) & MASK
        letters = np.array(alphabet, dtype=object)
        return "".join(letters[pick.astype(np.intp)])

    def range(self, n):
        """Random nonempty ``(i, j)`` with ``0 <= i < j <= n``."""
        i = self.below(n)
        j = self.below(n)
        if i > j:
            i, j = j, i
        return i, j + 1
