"""
Tests for centralizers, the canonical law, the double and the centre
"""
from dataclasses import replace
import pytest
from app.centralizer import (
    canonical_law,
    centralize,
    check_center_object,
    check_coaction,
    check_coend_universal,
    check_E,
    check_nonrepresentability,
    check_z_contravariant,
    check_z_on_monad_morphism,
    coend_of_center,
    coend_of_module_category,
    coend_hopf,
    double,
    half_braiding_E,
    half_braiding_E_inv,
)
from app.hopfalg import group_algebra
from app.hopfmonad import (
    algebra_map_morphism,
    check_hopf_monad,
    check_monad_rmatrix,
    check_tmodule,
    free_tmodule,
    hopf_monad_from_algebra,
    identity_monad,
    monad_morphism,
    unit_morphism,
)
from app.semicat import identity
from tests.conftest import TRANSPOSITIONS, Z2


@pytest.fixture
def cent_z2(vec_z2):
    return centralize(identity_monad(vec_z2))


@pytest.fixture
def law_z2(cent_z2):
    Omega, _ = canonical_law(cent_z2)
    return Omega


class TestCentralizer:
    """Tests for centralize and the coaction"""

    @pytest.mark.parametrize("name,order", [("vec", 1), ("vec_z2", 2), ("vec_z3", 3), ("vec_s3", 6)])
    def test_z_of_unit(self, name, order, request):
        """Test Z(1) of the identity monad on Vec_G has dimension |G|"""
        cent = centralize(identity_monad(request.getfixturevalue(name)))
        assert cent.functor.obj((0,)) == (0,) * order

    def test_z_of_transposition(self, vec_s3):
        """Test Z of a transposition is its conjugacy class, each twice"""
        cent = centralize(identity_monad(vec_s3))
        for x in TRANSPOSITIONS:
            assert sorted(cent.functor.obj((x,))) == [1, 1, 2, 2, 3, 3]

    @pytest.mark.parametrize("x", range(6))
    def test_nonrepresentability(self, vec_s3, x):
        """Test Z(x) is a power of x exactly for central x"""
        report = check_nonrepresentability(vec_s3, x)
        assert report.passed, report.to_text()

    def test_coaction_identity_monad(self, cent_z2):
        """Test the coaction identities of Z for the identity monad"""
        report = check_coaction(cent_z2)
        assert report.passed, report.to_text()
        assert report.operations["check_coaction"] == 1

    def test_coaction_of_algebra_monad(self, kz2):
        """Test the coaction identities of Z for ? ⊗ kZ2"""
        cent = centralize(hopf_monad_from_algebra(kz2, "right"))
        assert len(cent.functor.obj((0,))) == 2
        assert check_coaction(cent).passed

    def test_z_is_hopf_monad(self, cent_z2, rng):
        """Test Z_T passes the Hopf monad axioms"""
        report = check_hopf_monad(cent_z2.Z, rng, samples=2)
        assert report.passed, report.to_text()

    def test_iota_and_projection(self, cent_z2):
        """Test the summand projection splits the injection"""
        for j in range(2):
            inj = cent_z2.iota(1, j)
            assert cent_z2.projection(1, j) @ inj == identity(cent_z2.cat, inj.src)


class TestCanonicalLaw:
    """Tests for canonical_law and the double"""

    def test_certificate_passes(self, cent_z2):
        """Test the canonical law of Vec_Z2 carries a passing certificate"""
        _, report = canonical_law(cent_z2)
        assert report.passed, report.to_text()
        assert report.operations["check_distributive_law"] == 1
        assert report.operations["invert_law"] == 1

    def test_double_is_quasitriangular(self, cent_z2, law_z2, rng):
        """Test D = Z ∘_Ω 1 is a Hopf monad with an R-matrix"""
        D, R = double(cent_z2, law_z2)
        assert len(D.obj((0,))) == 2
        assert check_hopf_monad(D, rng, samples=1).passed
        report = check_monad_rmatrix(D, R)
        assert report.passed, report.to_text()

    def test_double_of_algebra_monad(self, kz2):
        """Test the double of ? ⊗ kZ2 over Vec has dimension four"""
        cent = centralize(hopf_monad_from_algebra(kz2, "right"))
        Omega, _ = canonical_law(cent)
        D, R = double(cent, Omega)
        assert len(D.obj((0,))) == 4
        assert check_monad_rmatrix(D, R).passed


class TestCenter:
    """Tests for half-braidings and centre objects"""

    def test_E_on_free_modules(self, cent_z2):
        """Test E on two free Z-modules"""
        Z = cent_z2.Z
        report = check_E(cent_z2, free_tmodule(Z, (0,)), free_tmodule(Z, (1,)))
        assert report.passed, report.to_text()

    def test_E_round_trip(self, cent_z2):
        """Test E⁻¹ recovers the Z-action"""
        mod = free_tmodule(cent_z2.Z, (1,))
        back = half_braiding_E_inv(cent_z2, half_braiding_E(cent_z2, mod))
        assert back.action == mod.action

    @pytest.mark.parametrize("x", [(0,), (1,), (1, 0)])
    def test_center_objects(self, cent_z2, law_z2, x):
        """Test I on free modules of the double"""
        D, _ = double(cent_z2, law_z2)
        report = check_center_object(cent_z2, D, free_tmodule(D, x))
        assert report.passed, report.to_text()

    def test_coend_of_module_category(self, cent_z2, law_z2):
        """Test the coend module (Z(1), α) of T-modules"""
        module = coend_of_module_category(cent_z2, law_z2)
        assert len(module.M) == 2
        assert check_tmodule(cent_z2.T, module).passed


class TestMonadMorphismsOnZ:
    """Tests for Z on morphisms of Hopf monads"""

    def test_unit_morphism(self, vec):
        """Test Z of the unit of ? ⊗ kZ2 and its contravariance"""
        H = group_algebra(vec, Z2)
        T, base = hopf_monad_from_algebra(H, "right"), identity_monad(vec)
        f = unit_morphism(T)
        g = algebra_map_morphism(T, T, identity(vec, H.A), "id")
        gf = monad_morphism(base, T, lambda i: g.at(i) @ f.at(i), "id∘eta")
        first, last = centralize(base), centralize(T)
        report = check_z_on_monad_morphism(first, last, f)
        assert report.passed, report.to_text()
        report = check_z_contravariant(first, last, last, f, g, gf)
        assert report.passed, report.to_text()


class TestCoends:
    """Tests for coend_hopf and coend_of_center"""

    def test_coend_of_center(self, vec_z2):
        """Test the coend of Z(Vec_Z2) has dimension |G|² and both routes agree"""
        coend, report = coend_of_center(vec_z2)
        assert report.passed, report.to_text()
        assert len(coend.C) == 4
        assert report.operations["coend_of_center"] == 1

    def test_coend_of_braided_identity(self, vec_z2_sign):
        """Test the coend of a braided instance through its braiding R-matrix"""
        T = identity_monad(vec_z2_sign)
        cent = centralize(T)
        Omega, _ = canonical_law(cent)
        D, R = double(cent, Omega)
        coend, report = coend_hopf(D, R)
        assert report.passed, report.to_text()
        assert len(coend.C) == 4

    def test_center_coend_product_and_pairing_checked(self, vec_z2):
        """Test the centre coend records the universal and closed-form checks"""
        _, report = coend_of_center(vec_z2)
        ids = {r.check_id for r in report}
        assert {"coend_product_universal", "coend_pairing_universal",
                "coend_pairing_closed_form"} <= ids
        assert report.passed, report.to_text()

    def test_wrong_pairing_is_caught(self, vec_z2):
        """Test a rescaled pairing fails the closed form and the universal identity"""
        cent = centralize(identity_monad(vec_z2))
        Omega, _ = canonical_law(cent)
        D, R = double(cent, Omega)
        coend, _ = coend_hopf(D, R)
        assert check_coend_universal(coend.centralizer, coend, R).passed
        broken = replace(coend, omega=coend.omega.scale(2))
        failed = check_coend_universal(coend.centralizer, broken, R).failed_checks()
        assert "coend_pairing_closed_form" in failed
        assert "coend_pairing_universal" in failed
        assert "coend_product_universal" not in failed
