"""Exception types shared across the package."""


class ClimvarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(ClimvarError):
    """An argument violates a documented precondition."""


class DegenerateRange(ClimvarError):
    """A normalization range has max <= min."""


class GridMismatch(ClimvarError):
    """Two histograms do not share the same bin grid."""


class FormatError(ClimvarError):
    """A dataset or checkpoint file is malformed.

    Carries the byte offset at which the problem was detected.
    """

    def __init__(self, message, byte_offset=None):
        if byte_offset is not None:
            message = f"{message} (byte offset {byte_offset})"
        super().__init__(message)
        self.byte_offset = byte_offset


class SchemaMismatch(ClimvarError):
    """Datasets with incompatible layouts were combined."""


class ConfigError(ClimvarError):
    """A configuration is inconsistent with the data or statistics."""


class ShapeError(ClimvarError):
    """Array dimensions do not match the model or operation."""


class ContractError(ClimvarError):
    """An API contract was violated (e.g. train mode without an RNG)."""


class TrainingDiverged(ClimvarError):
    """The training loss became non-finite."""

    def __init__(self, epoch, batch, message=None):
        message = message or f"non-finite loss at epoch {epoch}, batch {batch}"
        super().__init__(message)
        self.epoch = epoch
        self.batch = batch


class SingularSystem(ClimvarError):
    """A weighted least-squares system could not be solved."""


class StageError(ClimvarError):
    """A stage of the experiment workflow failed."""

    def __init__(self, stage, cause):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
