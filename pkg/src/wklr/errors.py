"""Exception types raised by the library."""


class WklrError(Exception):
    """Base class for domain errors (mapped to exit code 1 by the CLI)."""


class DegenerateWeighting(WklrError):
    """Two positions that must be distinct coincide under the weighting."""


class PeelFailure(WklrError):
    """Canonical-basis peeling met a negative or non-unital coefficient."""


class DivisionFailure(WklrError):
    """A Laurent polynomial was not exactly divisible."""


class MutationFailure(WklrError):
    """A triangular solve for a basis mutation was inconsistent."""
