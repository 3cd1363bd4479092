"""Exception hierarchy.

Every error raised on bad data derives from :class:`WindtalkError`.  Errors
that mean "the key material does not match the ciphertext" derive from
:class:`VerificationError` so callers (and the CLI) can tell them apart.
"""


class WindtalkError(Exception):
    pass


class VerificationError(WindtalkError):
    pass


# bitio
class NonZeroPadding(VerificationError):
    pass


class FrameError(WindtalkError):
    pass


# numerals
class LengthMismatch(WindtalkError):
    pass


class RepresentationOverflow(WindtalkError):
    pass


class NotInteger(WindtalkError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"value {pair[0]} + {pair[1]}*phi is not an integer")


class Unrepresentable(WindtalkError):
    pass


class DigitOutOfRange(WindtalkError):
    pass


class Ambiguous(WindtalkError):
    def __init__(self, parses):
        self.parses = parses
        super().__init__(f"{len(parses)} parses: {parses}")


class NoParse(WindtalkError):
    pass


# codebook / pipeline
class CapacityExceeded(WindtalkError):
    pass


class UnknownSymbol(WindtalkError):
    pass


class UnalignedLength(WindtalkError):
    pass


class UnknownCodeword(VerificationError):
    pass


class FormatError(WindtalkError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# freq / homophones / cryptanalysis
class EmptyInput(WindtalkError):
    pass


class UnknownLetter(WindtalkError):
    pass


class CorpusTooSmall(WindtalkError):
    pass


# transforms
class BadLength(WindtalkError):
    pass


class KeystreamMismatch(VerificationError):
    pass
