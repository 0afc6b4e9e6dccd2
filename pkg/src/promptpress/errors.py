"""Exception types shared across the harness."""


class HarnessError(Exception):
    """Base class for every error raised by this package."""


# -- metric preconditions ---------------------------------------------------

class EmptyInput(HarnessError):
    """A byte sequence or length that must be non-empty was empty."""


class DimensionMismatch(HarnessError):
    """Two vectors that must share a dimension do not."""


class ZeroVector(HarnessError):
    """A vector with zero magnitude cannot be angle-compared."""


class DegenerateCohort(HarnessError):
    """Cohort normalization is undefined for these raw scores."""


class InvalidRatio(HarnessError):
    """Average compression ratio outside [0, 1)."""


# -- codec ------------------------------------------------------------------

class CorruptStream(HarnessError):
    """Compressed stream is malformed or fails its checksum."""


# -- prompt catalog ---------------------------------------------------------

class UnknownTemplate(HarnessError):
    """No template registered under the requested id."""


class EmptyPayload(HarnessError):
    """A prompt payload or embedding input was empty."""


# -- gateway ----------------------------------------------------------------

class AuthMissing(HarnessError):
    """The configured API-key environment variable is not set."""


class TransportFailure(HarnessError):
    """The endpoint could not be reached after all retries."""


class RateLimited(TransportFailure):
    """The endpoint kept rate-limiting after backoff was exhausted."""


class ReplayMiss(HarnessError):
    """The replay transcript holds no record for this request digest."""


class IoFailure(HarnessError):
    """A file could not be written (or would have leaked a secret)."""


# -- corpus / config --------------------------------------------------------

class ManifestInvalid(HarnessError):
    """A corpus or transcript manifest failed validation."""


class MissingFile(HarnessError):
    """A file referenced by a manifest does not exist."""


class NotUtf8(HarnessError):
    """A corpus file is not valid UTF-8."""


class ConfigInvalid(HarnessError):
    """A run configuration document failed validation."""


# -- codegen ----------------------------------------------------------------

class UnparseableVerdict(HarnessError):
    """The judge response did not contain a recognized verdict token."""
