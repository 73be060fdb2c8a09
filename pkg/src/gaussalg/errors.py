"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An operation was applied outside the set of inputs it is defined on."""


class DivergentIntegralError(DomainError):
    """A convolution, Fourier transform or norm integral does not converge."""


class UnsupportedDomainError(DomainError):
    """The integral exists but is not representable in the function class."""


class GenerationExhaustedError(RuntimeError):
    """Random input generation could not satisfy a law's applicability."""


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column
