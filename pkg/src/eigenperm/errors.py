class ConfigError(ValueError):
    """Invalid parameters or experiment configuration (CLI exit code 2)."""


class BoundError(ValueError):
    """A computation would exceed a configured size bound (CLI exit code 3)."""
