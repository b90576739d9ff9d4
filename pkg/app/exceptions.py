"""
Custom exception classes for the monadal application.
"""

class MonadalError(Exception):
    """Base exception class for monadal-related errors."""
    pass

class ScalarError(MonadalError):
    """Exception raised for scalar arithmetic errors."""
    pass

class FieldMismatchError(ScalarError):
    """Exception raised when scalars from different fields are combined."""
    pass

class DivisionByZeroError(ScalarError):
    """Exception raised when attempting to divide by zero."""
    pass

class SpecParseError(ScalarError):
    """Exception raised for malformed scalar, category or Hopf data text."""
    pass

class CategoryError(MonadalError):
    """Exception raised for category-level errors."""
    pass

class ShapeError(CategoryError):
    """Exception raised when source, target or grading of a morphism do not fit."""
    pass

class NotBraidedError(CategoryError):
    """Exception raised when a braiding is required but the instance has none."""
    pass

class ModuleValidationError(CategoryError):
    """Exception raised when a module or half-braiding fails its axioms."""
    pass

class FalsificationError(MonadalError):
    """Exception raised when two routes to one morphism disagree."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report

class ConfigurationError(MonadalError):
    """Exception raised for configuration-related errors."""
    pass

class FileOperationError(MonadalError):
    """Exception raised for file operation errors."""
    pass
