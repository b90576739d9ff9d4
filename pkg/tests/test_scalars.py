"""
Tests for exact field arithmetic
"""
import pytest
from fractions import Fraction
from hypothesis import given, strategies as st
from app.exceptions import DivisionByZeroError, FieldMismatchError, ScalarError, SpecParseError
from app.scalars import FieldSpec, Scalar, scalar_arith, scalar_parse, scalar_render

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10 ** 6)
residues = st.integers(min_value=0, max_value=4)


class TestFieldSpec:
    """Tests for FieldSpec"""

    def test_parse_spec_rationals(self):
        """Test 'Q' parses to the rationals"""
        assert FieldSpec.parse_spec("Q") == Q

    def test_parse_spec_prime(self):
        """Test 'Fp:7' parses to F_7"""
        assert FieldSpec.parse_spec("Fp:7") == FieldSpec.prime(7)

    def test_parse_spec_malformed(self):
        """Test malformed field specs raise SpecParseError"""
        with pytest.raises(SpecParseError):
            FieldSpec.parse_spec("R")
        with pytest.raises(SpecParseError):
            FieldSpec.parse_spec("Fp:x")

    def test_composite_modulus_rejected(self):
        """Test a composite modulus is rejected"""
        with pytest.raises(ScalarError):
            FieldSpec.prime(6)

    def test_label(self):
        """Test field labels match the JSON field grammar"""
        assert Q.label == "Q"
        assert F5.label == "Fp:5"


class TestScalarArith:
    """Tests for scalar_arith"""

    def test_add_rationals(self):
        """Test 1/2 + 1/3 = 5/6"""
        a, b = scalar_parse("1/2", Q), scalar_parse("1/3", Q)
        assert scalar_arith(a, b, "add") == scalar_parse("5/6", Q)

    def test_div_prime_field(self):
        """Test 3 / 4 = 2 in F_5"""
        assert scalar_arith(Scalar.of(F5, 3), Scalar.of(F5, 4), "div").value == 2

    def test_division_by_zero(self):
        """Test division by zero raises"""
        with pytest.raises(DivisionByZeroError):
            scalar_arith(Scalar.of(Q, 1), Scalar.of(Q, 0), "div")

    def test_field_mismatch(self):
        """Test mixing fields raises FieldMismatchError"""
        with pytest.raises(FieldMismatchError):
            scalar_arith(Scalar.of(Q, 1), Scalar.of(F5, 1), "add")

    def test_unknown_operation(self):
        """Test an unknown operation raises ScalarError"""
        with pytest.raises(ScalarError):
            scalar_arith(Scalar.of(Q, 1), Scalar.of(Q, 1), "pow")

    @given(rationals)
    def test_multiplicative_identity(self, x):
        """Test x * 1 = x for random rationals"""
        a = Scalar.of(Q, x)
        assert scalar_arith(a, Scalar.of(Q, 1), "mul") == a

    @given(rationals, rationals, rationals)
    def test_rational_field_axioms(self, x, y, z):
        """Test associativity and distributivity over Q"""
        a, b, c = Scalar.of(Q, x), Scalar.of(Q, y), Scalar.of(Q, z)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert (a / b) * b == a

    @given(residues, residues, residues)
    def test_prime_field_axioms(self, x, y, z):
        """Test associativity, distributivity and inverses over F_5"""
        a, b, c = Scalar.of(F5, x), Scalar.of(F5, y), Scalar.of(F5, z)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        if not a.is_zero():
            assert (a / a).value == 1


class TestScalarParse:
    """Tests for scalar_parse and scalar_render"""

    def test_reduces_rationals(self):
        """Test '-3/6' parses to -1/2"""
        assert scalar_parse("-3/6", Q).value == Fraction(-1, 2)

    def test_reduces_mod_p(self):
        """Test '7' parses to 2 in F_5"""
        assert scalar_parse("7", F5).value == 2

    def test_zero(self):
        """Test '0/1' parses to zero"""
        assert scalar_parse("0/1", Q).is_zero()

    def test_zero_denominator(self):
        """Test a zero denominator raises"""
        with pytest.raises(SpecParseError):
            scalar_parse("1/0", Q)

    def test_malformed(self):
        """Test malformed text raises"""
        with pytest.raises(SpecParseError):
            scalar_parse("1.5", Q)
        with pytest.raises(SpecParseError):
            scalar_parse("1/2", F5)

    def test_render_canonical(self):
        """Test rendering of canonical forms"""
        assert scalar_render(scalar_parse("4/2", Q)) == "2"
        assert scalar_render(scalar_parse("-2/4", Q)) == "-1/2"
        assert scalar_render(scalar_parse("-1", F5)) == "4"

    @given(rationals)
    def test_parse_render_rationals(self, x):
        """Test parse after render is the identity on Q"""
        a = Scalar.of(Q, x)
        assert scalar_parse(scalar_render(a), Q) == a

    @given(residues)
    def test_parse_render_prime(self, x):
        """Test parse after render is the identity on F_5"""
        a = Scalar.of(F5, x)
        assert scalar_parse(scalar_render(a), F5) == a
