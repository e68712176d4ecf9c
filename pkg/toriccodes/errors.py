"""Exception hierarchy shared by the library and the command line.

Every error carries a machine-readable ``code`` and the process ``exit_code``
the command line reports for it: 2 for violated preconditions and caps, 3 for
mathematical discrepancies.
"""
from typing import Any, Optional

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_DISCREPANCY = 3


class ToricCodesError(Exception):
    code = "TORIC_CODES_ERROR"
    exit_code = EXIT_PRECONDITION

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details


class PreconditionError(ToricCodesError, ValueError):
    code = "PRECONDITION_FAILED"


class CapExceededError(PreconditionError):
    code = "CAP_EXCEEDED"

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(
            f"{what} needs {required} items, above the configured cap of {cap}",
            {"what": what, "required": required, "cap": cap},
        )
        self.required = required
        self.cap = cap


class FieldMismatchError(PreconditionError):
    code = "FIELD_MISMATCH"


class ClutterError(PreconditionError):
    code = "INVALID_CLUTTER"


class DiscrepancyError(ToricCodesError):
    code = "DISCREPANCY"
    exit_code = EXIT_DISCREPANCY


class BoundViolationError(DiscrepancyError):
    code = "BOUND_VIOLATION"


def check_cap(what: str, required: int, cap: int) -> None:
    if required > cap:
        raise CapExceededError(what, required, cap)
