"""Exception hierarchy shared across the package."""


class SkatEloError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(SkatEloError, ValueError):
    """A value or combination of values is outside an operation's domain."""


class IngestError(SkatEloError, ValueError):
    """A game log is structurally unusable (bad header, broken grouping)."""


class ConfigError(SkatEloError, ValueError):
    """A configuration file is malformed or names unknown settings."""
