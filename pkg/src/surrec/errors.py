"""Exception types shared across the package."""


class SurrecError(Exception):
    """Base class for package errors."""


class InputError(SurrecError, ValueError):
    """A rejected input: unknown id, empty mask, bad shape, bad argument."""


class InvariantViolation(SurrecError, ValueError):
    """A loaded or constructed object fails one of its declared invariants."""


class MissingArtifactError(SurrecError, FileNotFoundError):
    """A required file (raster, meta, manifest, checkpoint) is absent."""


class CorruptArtifactError(SurrecError, ValueError):
    """A file exists but cannot be decoded into the expected shape."""


class ConfigError(SurrecError, ValueError):
    """A config file or override is malformed (unknown key, bad value)."""


class TrainingAborted(SurrecError, RuntimeError):
    """Training hit a non-finite loss; the last good checkpoint is kept."""
