"""Exception types shared across the package."""


class InfodistError(Exception):
    """Base class for all errors raised by infodist."""


class LengthMismatch(InfodistError, ValueError):
    pass


class NoWitness(InfodistError):
    """No accepted program within the search cap and time bound outputs the target."""


class Infeasible(InfodistError):
    """The requested enumeration exceeds the configured limit."""


class MalformedTrace(InfodistError, ValueError):
    pass


class CompressorInsane(InfodistError):
    """A compressor produced an NCD value above the sanity ceiling."""


class DuplicateLabel(InfodistError, ValueError):
    pass
