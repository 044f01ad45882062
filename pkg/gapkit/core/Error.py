"""
-------------------------------------------------
gapkit - Error Classes
-------------------------------------------------

Every error carries the process exit code the
CLI reports for it: 2 for input / validation
problems, 3 for numeric failures.
-------------------------------------------------
"""

from typing import Any, Dict, Optional


class GapError(Exception):
    """Base class for exceptions in this package."""
    exit_code: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'error': {
                'type': self.__class__.__name__,
                'message': str(self),
                'exit_code': self.exit_code,
            }
        }


class GapDataError(GapError):
    exit_code = 2


class GapFormatError(GapDataError):
    """Malformed file content. `row` is the 1-based data row (CSV) or None."""

    def __init__(self, message: str, path: Optional[str] = None, row: Optional[int] = None) -> None:
        self.path = path
        self.row = row
        prefix = ''
        if path is not None:
            prefix += f"{path}: "
        if row is not None:
            prefix += f"row {row}: "
        super().__init__(prefix + message)


class GapDimensionError(GapDataError):
    pass


class GapUnknownIdError(GapDataError):

    def __init__(self, id: str, where: str = 'pool') -> None:
        self.id = id
        super().__init__(f"unknown id '{id}' (not present in {where})")


class GapSchemeError(GapDataError):
    pass


class GapNumericError(GapError):
    exit_code = 3


class GapFactorizationError(GapNumericError):

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        self.diagnostics = diagnostics if diagnostics is not None else {}
        if self.diagnostics:
            details = ", ".join(f"{k}={v}" for k, v in self.diagnostics.items())
            message = f"{message} ({details})"
        super().__init__(message)
