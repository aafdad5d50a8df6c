"""Exception hierarchy shared by every module of the package."""


class FactForestError(ValueError):
    """Base class for all errors raised by factforest."""


class DimensionMismatch(FactForestError):
    pass


class IndexOutOfRange(FactForestError):
    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"table[{row}][{col}] = {value} is not a valid element index")


class NonAssociative(FactForestError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(f"(x{i}*x{j})*x{k} != x{i}*(x{j}*x{k})")


class EmptySequence(FactForestError):
    pass


class EmptyWord(FactForestError):
    pass


class UnknownLetter(FactForestError):
    def __init__(self, position, letter):
        self.position, self.letter = position, letter
        super().__init__(f"letter {letter!r} at position {position} is not in the alphabet")


class ZeroDimension(FactForestError):
    pass


class ZeroOrder(FactForestError):
    pass


class EmptyGeneratorSet(FactForestError):
    pass


class InternalInvariant(FactForestError):
    """An internal consistency check failed; this indicates a bug."""


class WordTooLong(FactForestError):
    pass


class RangeOutOfBounds(FactForestError):
    pass


class EmptyRange(FactForestError):
    pass


class FormatError(FactForestError):
    """Malformed semigroup, homomorphism or forest document."""
