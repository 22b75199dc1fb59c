"""Exception hierarchy. Domain errors derive from QmpError so the CLI can map
them to exit code 1; programming-contract violations raise ValueError."""


class QmpError(Exception):
    """Base class for domain errors raised by this package."""


class QasmError(QmpError):
    """QASM parse failure with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class UnsupportedGateError(QasmError):
    """A gate outside the supported QASM subset."""

    def __init__(self, gate: str, line: int, col: int):
        super().__init__(f"unsupported gate '{gate}'", line, col)
        self.gate = gate


class DeviceConfigError(QmpError):
    """Malformed or out-of-range device configuration document."""


class AllocationError(QmpError):
    """No legal qubit partition exists for the requested programs."""


class RoutingError(QmpError):
    """Embedding cannot be routed on the device coupling graph."""


class SimulationError(QmpError):
    """Simulation request violates a simulator contract (caps, mismatches)."""


class MetricsError(QmpError):
    """Metric computation failed (e.g. no outcome reaches the correct-answer
    threshold)."""


class ConfigError(QmpError):
    """Invalid campaign configuration."""
