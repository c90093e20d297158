"""Exception types shared across the pipeline."""


class ArithkleinError(Exception):
    """Base class for all pipeline errors."""


class NoPowerBasisFound(ArithkleinError):
    """No conductor gives a power integral basis holding both beta values."""


class CertificationFailed(ArithkleinError):
    """A rounded value could not be confirmed exactly at working precision."""


class IllConditioned(ArithkleinError):
    """Linear solve residual exceeded the certification budget; raise precision."""


class SearchSpaceOverflow(ArithkleinError):
    """Estimated enumeration volume exceeds the configured cap."""


class DegenerateGamma(ArithkleinError):
    """The commutator trace parameter is zero (reducible generator pair)."""


class ParabolicFixedForm(ArithkleinError):
    """Matrix has zero lower-left entry, so no isometric circle exists."""


class OutOfRange(ArithkleinError):
    """Argument outside the tabulated or supported range."""
