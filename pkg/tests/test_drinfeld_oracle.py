"""
Tests for the textbook double of a group algebra
"""
from fractions import Fraction
import numpy as np
import pytest
from app.braided_double import double_algebra
from app.drinfeld_oracle import dense, drinfeld_double_oracle, oracle_axioms
from app.pipelines import compare_with_oracle
from app.report import Report
from app.semicat import Mor
from tests.conftest import S3, Z2, Z3


class TestOracle:
    """Tests for drinfeld_double_oracle"""

    @pytest.mark.parametrize("cayley", [Z2, Z3])
    def test_axioms_hold(self, cayley):
        """Test the textbook double satisfies the Hopf and R-matrix identities"""
        checks = oracle_axioms(drinfeld_double_oracle(cayley))
        assert all(checks.values()), checks

    def test_shapes(self):
        """Test the array shapes for S3"""
        oracle = drinfeld_double_oracle(S3)
        assert oracle.dim == 36
        assert oracle.m.shape == (36, 36 * 36)
        assert oracle.r.shape == (36 * 36, 1)
        assert oracle.eps.sum() == 6

    def test_unit_sums_projections(self):
        """Test the unit is e ⊗ Σ_k δ_k"""
        oracle = drinfeld_double_oracle(Z3)
        assert [int(x) for x in oracle.u[:, 0]] == [1, 1, 1, 0, 0, 0, 0, 0, 0]

    def test_dense(self, vec):
        """Test a sparse morphism becomes a dense Fraction array"""
        f = Mor(vec, (0, 0), (0,), {(0, 1): Fraction(1, 2)})
        assert np.array_equal(dense(f), np.array([[Fraction(0), Fraction(1, 2)]], dtype=object))


class TestAgainstComputedDouble:
    """Tests for compare_with_oracle"""

    def test_kz2(self, kz2):
        """Test the computed D(kZ2) equals the textbook double entry by entry"""
        bd, _ = double_algebra(kz2)
        report = compare_with_oracle(bd, Z2, Report("oracle"))
        assert report.passed, report.to_text()
        assert report.operations["drinfeld_oracle"] == 1
