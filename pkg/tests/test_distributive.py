"""
Tests for comonoidal distributive laws and composite Hopf monads
"""
import pytest
from app.distributive import (
    K,
    K_inv,
    check_composite_modules,
    check_distributive_law,
    check_law_inverse,
    check_lift,
    check_middle_unit,
    compose_with_law,
    invert_law,
    law_transformation,
    lift_module,
)
from app.functors import nat_component
from app.hopfmonad import check_hopf_monad, check_tmodule, free_tmodule, hopf_monad_from_algebra
from app.semicat import braid, tensor


@pytest.fixture
def pair(sweedler, kz2):
    """P = ? ⊗ H4 and T = ? ⊗ kZ2 over Vec"""
    return hopf_monad_from_algebra(sweedler, "right"), hopf_monad_from_algebra(kz2, "right")


def flip_law(P, T, B, A, factor=1):
    """Ω_X = id_X ⊗ (flip: B ⊗ A → A ⊗ B) from X ⊗ B ⊗ A to X ⊗ A ⊗ B"""
    cat = P.cat
    return law_transformation(
        P, T, lambda i: tensor((i,), braid(cat, B, A), cat).scale(factor), "flip")


class TestDistributiveLaw:
    """Tests for check_distributive_law and compose_with_law"""

    def test_flip_is_a_law(self, pair, sweedler, kz2):
        """Test the flip of tensor factors is a comonoidal law"""
        P, T = pair
        report = check_distributive_law(flip_law(P, T, sweedler.A, kz2.A), P, T)
        assert report.passed, report.to_text()
        assert report.operations["check_distributive_law"] == 1

    def test_scaled_flip_fails(self, pair, sweedler, kz2):
        """Test twice the flip breaks the unit identities"""
        P, T = pair
        failed = check_distributive_law(flip_law(P, T, sweedler.A, kz2.A, 2), P, T).failed_checks()
        assert "law_unit_outer" in failed and "law_unit_inner" in failed

    def test_composite_is_hopf_monad(self, pair, sweedler, kz2, rng):
        """Test P ∘_Ω T is a Hopf monad of dimension eight"""
        P, T = pair
        PT = compose_with_law(P, T, flip_law(P, T, sweedler.A, kz2.A))
        assert len(PT.obj((0,))) == 8
        report = check_hopf_monad(PT, rng, samples=1)
        assert report.passed, report.to_text()

    def test_middle_unit(self, pair, sweedler, kz2):
        """Test p_X P(η u) is the identity"""
        P, T = pair
        PT = compose_with_law(P, T, flip_law(P, T, sweedler.A, kz2.A))
        report = check_middle_unit(P, T, PT)
        assert report.passed, report.to_text()


class TestInverseLaw:
    """Tests for invert_law"""

    def test_antipode_formula_inverts(self, pair, sweedler, kz2):
        """Test the antipode formula agrees with the matrix inverse"""
        P, T = pair
        Omega = flip_law(P, T, sweedler.A, kz2.A)
        report = check_law_inverse(P, T, Omega)
        assert report.passed, report.to_text()
        assert report.operations["invert_law"] == 1

    def test_inverse_is_back_flip(self, pair, sweedler, kz2, vec):
        """Test Ω⁻¹ of the flip is the opposite flip"""
        P, T = pair
        inv = invert_law(P, T, flip_law(P, T, sweedler.A, kz2.A))
        assert nat_component(inv, (0,)) == tensor((0,), braid(vec, kz2.A, sweedler.A), vec)


class TestModulesOfComposite:
    """Tests for lifted modules and composite modules"""

    def test_lift_of_free_module(self, pair, sweedler, kz2):
        """Test the lift of a free T-module"""
        P, T = pair
        Omega = flip_law(P, T, sweedler.A, kz2.A)
        mod = free_tmodule(T, (0,))
        lifted = lift_module(P, Omega, mod)
        assert len(lifted.M) == 8
        report = check_lift(P, T, Omega, mod)
        assert report.passed, report.to_text()

    def test_composite_modules(self, pair, sweedler, kz2):
        """Test K and K⁻¹ are mutually inverse on a free module"""
        P, T = pair
        PT = compose_with_law(P, T, flip_law(P, T, sweedler.A, kz2.A))
        report = check_composite_modules(P, T, PT, (0,))
        assert report.passed, report.to_text()
        assert report.operations["composite_modules"] == 1

    def test_k_inverse_parts(self, pair, sweedler, kz2):
        """Test K⁻¹ of a free composite module restricts to a T-module"""
        P, T = pair
        PT = compose_with_law(P, T, flip_law(P, T, sweedler.A, kz2.A))
        free = free_tmodule(PT, (0,))
        split = K_inv(P, T, free)
        assert check_tmodule(T, split.module).passed
        assert split.module.M == free.M
        assert K(P, split).action == free.action
