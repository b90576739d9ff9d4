"""
Tests for coends of braided instances, Z(A) and the double D(A)
"""
import pytest
from app.braided_double import (
    canonical_law_algebra,
    centralizer_algebra,
    check_coaction_naturality,
    check_coend,
    check_double_of_unit,
    check_yang_baxter,
    coend,
    coend_hopf_of_monad,
    consistency_double,
    decode_rmatrix,
    double_algebra,
    encode_rmatrix,
    law_inverse_formula,
)
from app.exceptions import CategoryError, NotBraidedError
from app.hopfalg import check_hopf_algebra, unit_algebra
from app.hopfmonad import hopf_monad_from_algebra, identity_monad
from app.linalg import inverse
from app.report import Report
from app.semicat import identity, tensor


@pytest.fixture
def double_kz2(kz2):
    bd, _ = double_algebra(kz2)
    return bd


class TestCoend:
    """Tests for the coend of a braided instance"""

    @pytest.mark.parametrize("name,dim", [("vec", 1), ("vec_z2_sign", 2), ("vec_klein", 4)])
    def test_coend_passes(self, name, dim, request):
        """Test the coend structure, representation and pairing"""
        data = coend(request.getfixturevalue(name))
        assert len(data.C) == dim
        report = check_coend(data)
        assert report.passed, report.to_text()
        assert report.operations["coend"] == 1

    def test_coend_with_report(self, vec_z2_sign):
        """Test passing a report runs the checks"""
        report = Report("coend")
        coend(vec_z2_sign, report)
        assert len(report) > 0 and report.passed

    def test_pairing_of_symmetric_instance(self, vec_z2_sign):
        """Test ω = ε ⊗ ε over a symmetric instance"""
        data = coend(vec_z2_sign)
        H = data.hopf
        assert vec_z2_sign.is_symmetric()
        assert data.omega == H.eps @ tensor(H.eps, H.A, vec_z2_sign)

    def test_pairing_of_klein_instance(self, vec_klein):
        """Test ω differs from ε ⊗ ε when the double braiding is nontrivial"""
        data = coend(vec_klein)
        H = data.hopf
        assert not vec_klein.is_symmetric()
        assert data.omega != H.eps @ tensor(H.eps, H.A, vec_klein)

    def test_unbraided_instance(self, vec_s3):
        """Test the coend of an unbraided instance raises"""
        with pytest.raises(NotBraidedError):
            coend(vec_s3)

    def test_coaction_naturality(self, vec_klein, rng):
        """Test the universal coaction is natural"""
        report = check_coaction_naturality(coend(vec_klein), rng, samples=3)
        assert report.passed, report.to_text()
        assert len(report) == 3

    def test_representation_of_identity_monad(self, vec_z2_sign):
        """Test Z of the identity monad is represented by a Hopf algebra"""
        CT, report = coend_hopf_of_monad(identity_monad(vec_z2_sign))
        assert CT.dim == 2
        assert report.passed, report.to_text()


class TestCentralizerAlgebra:
    """Tests for Z(A) and the canonical law of an algebra"""

    @pytest.mark.parametrize("name", ["kz2", "sweedler"])
    def test_matches_classical_dual(self, name, request):
        """Test Z(A) agrees with (A*)^cop over Vec"""
        H = request.getfixturevalue(name)
        report = Report("centralizer")
        zc = centralizer_algebra(H, report=report)
        assert zc.ZA.dim == H.dim
        assert report.passed, report.to_text()
        assert "classical_dual_cop" in {r.check_id for r in report}

    def test_canonical_law(self, kz2):
        """Test the canonical law of kZ2 and its inverse"""
        report = Report("law")
        law = canonical_law_algebra(kz2, report=report)
        assert report.passed, report.to_text()
        assert law.Omega_inv @ law.Omega == identity(kz2.cat, law.Omega.src)
        assert report.operations["canonical_law_algebra"] == 1

    @pytest.mark.parametrize("name", ["kz2", "sweedler"])
    def test_law_inverse_from_antipodes(self, name, request):
        """Test the antipode formula for the inverse law equals the matrix inverse"""
        H = request.getfixturevalue(name)
        report = Report("law")
        law = canonical_law_algebra(H, report=report)
        assert "law_inverse_hopf_formula" in {r.check_id for r in report}
        assert report.passed, report.to_text()
        ZA = law.centralizer.ZA
        assert law_inverse_formula(law.Omega, ZA, H) == inverse(law.Omega)

    def test_law_inverse_over_braided_base(self, vec_klein):
        """Test the antipode formula for the inverse law over a non-symmetric braiding"""
        H = unit_algebra(vec_klein)
        report = Report("law")
        law = canonical_law_algebra(H, report=report)
        assert report.passed, report.to_text()
        assert law_inverse_formula(law.Omega, law.centralizer.ZA, H) == inverse(law.Omega)


class TestDoubleAlgebra:
    """Tests for D(A), its R-matrix and the monad double"""

    def test_double_of_kz2(self, kz2):
        """Test D(kZ2) is a four-dimensional quasitriangular Hopf algebra"""
        bd, report = double_algebra(kz2)
        assert bd.DA.dim == 4
        assert report.passed, report.to_text()
        assert "yang_baxter" in {r.check_id for r in report}
        assert check_hopf_algebra(bd.DA).passed

    def test_consistency_with_monad_double(self, double_kz2):
        """Test ? ⊗ D(kZ2) agrees with the double of ? ⊗ kZ2"""
        report = consistency_double(double_kz2)
        assert report.passed, report.to_text()
        assert report.operations["consistency_double"] == 1

    def test_rmatrix_round_trip(self, double_kz2):
        """Test decoding the encoded R-matrix of D(kZ2)"""
        bd = double_kz2
        M = hopf_monad_from_algebra(bd.DA, "right")
        R = encode_rmatrix(bd.DA, bd.r, bd.coend, M)
        assert decode_rmatrix(bd.DA, R, bd.coend) == bd.r

    def test_yang_baxter_needs_vec(self, vec_z2_sign):
        """Test the Yang-Baxter check is refused outside Vec"""
        H = unit_algebra(vec_z2_sign)
        with pytest.raises(CategoryError):
            check_yang_baxter(H, tensor(H.u, H.u))

    def test_double_of_unit(self, vec_z2_sign):
        """Test D(1) is the coend with r = u ε ⊗ id"""
        report = check_double_of_unit(vec_z2_sign)
        assert report.passed, report.to_text()
        assert report.operations["double_of_unit"] == 1
