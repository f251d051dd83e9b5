"""Exception types raised across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable error records.
"""


class TubePoseError(Exception):
    """Base class for all package errors."""

    code = "E_ERROR"


class InvalidParameter(TubePoseError):
    """A parameter is outside its documented domain."""

    code = "E_INVALID_PARAMETER"


class DegenerateInput(TubePoseError):
    """Input geometry is too degenerate for the operation (e.g. collinear)."""

    code = "E_DEGENERATE_INPUT"


class EmptyCloud(TubePoseError):
    """A point cloud required to be non-empty is empty."""

    code = "E_EMPTY_CLOUD"


class NoCorrespondences(TubePoseError):
    """No point pair falls within the correspondence gate."""

    code = "E_NO_CORRESPONDENCES"


class NoOverlap(TubePoseError):
    """A projected hull overlaps none of the rack slots."""

    code = "E_NO_OVERLAP"


class IndexOutOfRange(TubePoseError):
    """A slot or point index is out of range."""

    code = "E_INDEX_RANGE"


class InfeasibleConfig(TubePoseError):
    """A scene configuration places a tube in a physically impossible pose."""

    code = "E_INFEASIBLE_CONFIG"


class ParseError(TubePoseError):
    """A file could not be parsed; the message locates the failure."""

    code = "E_PARSE"


class UnsupportedFormat(TubePoseError):
    """A file uses a format variant the reader does not support."""

    code = "E_UNSUPPORTED_FORMAT"


class SchemaError(TubePoseError):
    """A JSON document does not validate against its schema."""

    code = "E_SCHEMA"


class IdentityMismatch(TubePoseError):
    """Estimates and ground truth do not describe the same set of tubes."""

    code = "E_IDENTITY_MISMATCH"
