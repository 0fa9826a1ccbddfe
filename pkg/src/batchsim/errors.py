"""Exception types shared across the engine."""


class BatchSimError(Exception):
    """Base class for all engine errors."""


class DimensionError(BatchSimError, ValueError):
    """Incompatible batch or array dimensions."""


class AssetParseError(BatchSimError, ValueError):
    """Malformed robot-description XML (carries a line number when known)."""


class SchemaError(BatchSimError, ValueError):
    """Well-formed XML that violates the supported description subset."""


class TopologyError(BatchSimError, ValueError):
    """Link/joint graph is not a tree."""


class SceneBuildError(BatchSimError, ValueError):
    """A scene descriptor could not be instantiated."""


class ViewLookupError(BatchSimError, KeyError):
    """A scene path did not resolve to an entity."""


class LayoutMismatchError(BatchSimError, ValueError):
    """State snapshot does not match the scene layout."""


class DivergenceError(BatchSimError, RuntimeError):
    """Simulation state became non-finite in one or more environments."""


class ModelError(BatchSimError, ValueError):
    """A physical model is invalid (e.g. massless dynamic link)."""


class InputError(BatchSimError, ValueError):
    """Caller-provided runtime input is invalid (non-finite action, bad shape)."""
