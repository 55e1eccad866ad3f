"""Exception types shared across the package."""


class QOddtownError(Exception):
    pass


class NotPrimePower(QOddtownError, ValueError):
    pass


class UnsupportedField(QOddtownError, ValueError):
    """Field order above the configured cap."""


class DivisionByZero(QOddtownError, ZeroDivisionError):
    pass


class OutOfRange(QOddtownError, ValueError):
    pass


class AmbientMismatch(QOddtownError, ValueError):
    """Operands live in different fields or ambient dimensions."""


class LengthMismatch(QOddtownError, ValueError):
    pass


class ParityMismatch(QOddtownError, ValueError):
    pass


class NoTheoremBound(QOddtownError):
    """No proven bound applies to the requested (kind, n, q)."""

    def __init__(self, message, reference_bound=None):
        super().__init__(message)
        self.reference_bound = reference_bound


class EvenQUnproven(NoTheoremBound):
    """The parity theorems need q odd; for even q the question is open.

    ``reference_bound`` holds the value the odd-q formula would give, so
    callers can report whether it happens to hold.
    """


class TooLarge(QOddtownError, ValueError):
    def __init__(self, count, limit):
        super().__init__(f"{count} candidate vertices exceeds the limit of {limit}")
        self.count = count
        self.limit = limit


class InternalInconsistency(QOddtownError, RuntimeError):
    """A search witness contradicts a proven theorem: an implementation bug."""


class ParseError(QOddtownError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotCanonical(ParseError):
    def __init__(self, block, line=None):
        super().__init__(f"block {block} is not in reduced row echelon form", line)
        self.block = block


class DuplicateMember(QOddtownError, ValueError):
    def __init__(self, first, second):
        super().__init__(f"members {first} and {second} are the same subspace")
        self.indices = (first, second)
