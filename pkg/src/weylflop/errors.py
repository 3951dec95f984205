"""Exception types shared across the package.

Every domain error carries a short machine-readable ``code`` which the CLI
reports verbatim (exit status 3).
"""


class WeylflopError(Exception):
    code = "domain-error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class InvalidTypeRank(WeylflopError):
    code = "invalid-type-rank"


class ExcludedCase(WeylflopError):
    code = "excluded-case"


class NotClosed(WeylflopError):
    code = "not-closed"


class NotLabelPreserving(WeylflopError):
    code = "not-label-preserving"


class ClosureOverflow(WeylflopError):
    code = "closure-overflow"


class DegenerateEigenspace(WeylflopError):
    code = "degenerate-eigenspace"


class NonIntegralMultiplicity(WeylflopError):
    code = "non-integral-multiplicity"


class UnrecognizedGraph(WeylflopError):
    code = "unrecognized-graph"


class DiagramMismatch(WeylflopError):
    code = "diagram-mismatch"


class DegreeTooSmall(WeylflopError):
    code = "degree-too-small"


class NotAReflection(WeylflopError):
    code = "not-a-reflection"


class InsufficientlyGeneral(WeylflopError):
    code = "insufficiently-general"


class InvalidSection(WeylflopError):
    code = "invalid-section"
