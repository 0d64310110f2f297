"""Exception hierarchy shared across fullab modules."""


class FullabError(Exception):
    """Base class for all fullab errors."""


class ValidationError(FullabError):
    """Input does not describe the requested kind of graph."""


class NotSymmetric(ValidationError):
    pass


class NotSphere(ValidationError):
    pass


class NonTriangleFace(ValidationError):
    pass


class BadDegreeProfile(ValidationError):
    pass


class N22Forbidden(ValidationError):
    pass


class InfeasibleN(ValidationError):
    pass


class GluingFailed(ValidationError):
    pass


class PatchAmbiguous(ValidationError):
    pass


class InvalidPath(ValidationError):
    pass


class MultiEdge(ValidationError):
    pass


class DegreeUnderflow(ValidationError):
    pass


class SpiralStuck(FullabError):
    pass


class NoSpiralExists(FullabError):
    pass


class WindupFailed(FullabError):
    pass


class DegreeOverflow(WindupFailed):
    pass


class BudgetExceeded(FullabError):
    pass


class OutOfRange(FullabError):
    pass


class EmptyInput(FullabError):
    pass


class NotFound(FullabError):
    pass


class FormatError(FullabError):
    """Malformed file content."""


class BadHeader(FormatError):
    pass


class TruncatedRecord(FormatError):
    pass


class RecordValidationFailed(FormatError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"record {index}: {cause}")
        self.index = index
        self.cause = cause
