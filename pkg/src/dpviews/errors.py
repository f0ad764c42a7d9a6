"""Exception bases shared across the pipeline.

Two families, matching the CLI exit-code contract: InputError covers bad or
inconsistent data files (exit 1), ConfigError covers bad parameters or run
configuration (exit 2).
"""


class PipelineError(Exception):
    exit_code = 1


class InputError(PipelineError):
    """Malformed or inconsistent input data."""

    exit_code = 1


class ConfigError(PipelineError):
    """Invalid parameter value or run configuration."""

    exit_code = 2
