"""Exception types shared across the package."""


class RookLabError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyInputError(RookLabError):
    """The input describes no cells at all."""


class BadCharacterError(RookLabError):
    """An ASCII grid contains a character other than '#', '.' or a newline.

    Carries 1-based ``line`` and ``column`` attributes.
    """

    def __init__(self, line: int, column: int, char: str):
        self.line = line
        self.column = column
        self.char = char
        super().__init__(f"bad character {char!r} at line {line}, column {column}")


class DuplicateCellError(RookLabError):
    """A coordinate list names the same cell twice."""


class NotConnectedError(RookLabError):
    """The cell set is not edge-connected.

    ``witness`` is a pair of cells lying in different components.
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"cells {witness[0]} and {witness[1]} are not edge-connected")


class CellNotInPolyominoError(RookLabError):
    """A cell argument is not a cell of the polyomino."""


class IntervalNotInPolyominoError(RookLabError):
    """An interval argument is not a maximal interval of the polyomino."""


class RankTooSmallError(RookLabError):
    """The operation needs rank >= 2; the monomino is a documented trivial case."""


class RankOutOfRangeError(RookLabError):
    """Requested rank is outside 1..configured maximum."""


class LengthMismatchError(RookLabError):
    """A face-count or h-vector has the wrong length for the stated dimension."""


class IndexOutOfRangeError(RookLabError, IndexError):
    """A symmetric-polynomial index k is outside 0..d."""


class NotPureError(RookLabError):
    """Vertex decomposability is defined here only for pure complexes."""


class NotSimpleThinError(RookLabError):
    """Brush recognition needs a simple thin polyomino."""


class NotApplicableError(RookLabError):
    """The combinatorial regularity formula is licensed only for pure,
    simple, thin polyominoes."""


class NotPureBrushError(RookLabError):
    """The regularity/matching comparison is stated for pure brush
    polyominoes only."""


class UnknownCheckError(RookLabError):
    """A census check name is not in the registry."""
