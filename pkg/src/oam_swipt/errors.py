"""Exception types shared across the simulator."""


class SimulationError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidInputError(SimulationError, ValueError):
    """An argument is outside its documented domain."""


class DegenerateGeometryError(SimulationError):
    """A transmit and a receive element coincide; the link gain is undefined."""


class StructureViolationError(SimulationError):
    """A matrix lacks the structure the operation requires (e.g. not circulant)."""


class IllConditionedChannelError(SimulationError):
    """The channel is too close to singular for zero-forcing reception."""

    def __init__(self, message: str, condition_number: float):
        super().__init__(f"{message} (condition number {condition_number:.3e})")
        self.condition_number = condition_number


class UnsupportedModelError(SimulationError):
    """The requested method does not apply to the given model."""


class ConfigError(SimulationError):
    """A scenario configuration is invalid; ``key`` names the offending entry."""

    def __init__(self, message: str, key: str | None = None):
        super().__init__(f"{key}: {message}" if key else message)
        self.key = key


class OutputError(SimulationError):
    """Writing a result file failed; carries the path and the OS-level cause."""

    def __init__(self, message: str, path):
        super().__init__(f"{path}: {message}")
        self.path = path
