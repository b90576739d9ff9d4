"""
Tests for custom exceptions
"""
import pytest
from app.exceptions import (
    CategoryError,
    ConfigurationError,
    DivisionByZeroError,
    FalsificationError,
    FieldMismatchError,
    FileOperationError,
    ModuleValidationError,
    MonadalError,
    NotBraidedError,
    ScalarError,
    ShapeError,
    SpecParseError,
)
from app.report import Report


class TestExceptions:
    """Test cases for custom exception classes"""

    def test_monadal_error_inheritance(self):
        """Test MonadalError inherits from Exception"""
        error = MonadalError("Test error")
        assert isinstance(error, Exception)
        assert str(error) == "Test error"

    @pytest.mark.parametrize("cls", [FieldMismatchError, DivisionByZeroError, SpecParseError])
    def test_scalar_errors(self, cls):
        """Test scalar-level errors derive from ScalarError"""
        error = cls("bad scalar")
        assert isinstance(error, ScalarError)
        assert isinstance(error, MonadalError)

    @pytest.mark.parametrize("cls", [ShapeError, NotBraidedError, ModuleValidationError])
    def test_category_errors(self, cls):
        """Test category-level errors derive from CategoryError"""
        error = cls("bad morphism")
        assert isinstance(error, CategoryError)
        assert not isinstance(error, ScalarError)

    @pytest.mark.parametrize("cls", [ConfigurationError, FileOperationError])
    def test_infrastructure_errors(self, cls):
        """Test configuration and file errors derive from MonadalError"""
        assert isinstance(cls("oops"), MonadalError)

    def test_falsification_carries_report(self):
        """Test FalsificationError keeps the failing report"""
        report = Report("consistency")
        report.expect("double_dimension", "all", False, "9 != 16")
        with pytest.raises(FalsificationError) as exc_info:
            report.raise_if_failed("routes disagree")
        assert exc_info.value.report is report
        assert "double_dimension" in str(exc_info.value)

    def test_falsification_without_report(self):
        """Test FalsificationError defaults to no report"""
        assert FalsificationError("mismatch").report is None
