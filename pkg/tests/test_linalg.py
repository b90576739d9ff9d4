"""
Tests for exact inversion, solving and bending of graded morphisms
"""
import pytest
from app.exceptions import CategoryError, ShapeError
from app.linalg import (
    bend,
    direct_sum,
    factor_through,
    hconcat,
    inverse,
    is_invertible,
    solve_left,
    solve_linear_map,
    unbend,
    vconcat,
)
from app.semicat import Mor, compose, identity, random_morphism, tensor, tensor_obj


class TestConcatenation:
    """Tests for direct sums and block matrices"""

    def test_direct_sum(self):
        """Test direct sums concatenate summands"""
        assert direct_sum((0, 1), (1,), ()) == (0, 1, 1)

    def test_hconcat_restricts(self, vec_z2):
        """Test hconcat restricts to each block"""
        f = identity(vec_z2, (0, 1))
        g = Mor(vec_z2, (1,), (0, 1), {(1, 0): 3})
        h = hconcat([f, g])
        assert h.src == (0, 1, 1)
        assert h.entry(1, 2).value == 3

    def test_hconcat_mismatch(self, vec_z2):
        """Test hconcat rejects different targets"""
        with pytest.raises(ShapeError):
            hconcat([identity(vec_z2, (0,)), identity(vec_z2, (1,))])

    def test_vconcat_empty(self):
        """Test vconcat rejects an empty family"""
        with pytest.raises(ShapeError):
            vconcat([])


class TestInverse:
    """Tests for inverse and is_invertible"""

    def test_inverse_of_block(self, vec_z2):
        """Test inverting a non-monomial block"""
        f = Mor(vec_z2, (0, 0, 1), (0, 0, 1), {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): 2})
        assert compose(inverse(f), f) == identity(vec_z2, f.src)
        assert compose(f, inverse(f)) == identity(vec_z2, f.src)

    def test_inverse_of_permutation(self, vec_z3):
        """Test the monomial fast path"""
        f = Mor(vec_z3, (1, 1), (1, 1), {(0, 1): 2, (1, 0): -1})
        assert compose(f, inverse(f)) == identity(vec_z3, (1, 1))

    def test_singular(self, vec_z2):
        """Test a singular block is reported"""
        f = Mor(vec_z2, (0, 0), (0, 0), {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1})
        assert not is_invertible(f)
        with pytest.raises(CategoryError):
            inverse(f)

    def test_non_square_labels(self, vec_z2):
        """Test unequal label multiplicities are not invertible"""
        assert not is_invertible(Mor(vec_z2, (0, 0), (0, 1), {(0, 0): 1}))


class TestSolving:
    """Tests for solve_left, solve_linear_map and factor_through"""

    def test_solve_left_recovers(self, vec_z2, rng):
        """Test g is recovered from g ∘ lhs"""
        lhs = Mor(vec_z2, (0, 0, 1), (0, 1), {(0, 0): 1, (0, 1): 1, (1, 2): 1})
        g = random_morphism(vec_z2, rng, (0, 1), (0, 1, 0))
        assert solve_left(lhs, compose(g, lhs)) == g

    def test_solve_left_not_surjective(self, vec_z2):
        """Test a non-surjective left factor raises"""
        lhs = Mor(vec_z2, (0,), (0, 0), {(0, 0): 1})
        with pytest.raises(CategoryError):
            solve_left(lhs, identity(vec_z2, (0,)))

    def test_solve_left_inconsistent(self, vec_z2):
        """Test an inconsistent system raises"""
        lhs = Mor(vec_z2, (0, 0), (0,), {(0, 0): 1, (0, 1): 1})
        rhs = Mor(vec_z2, (0, 0), (0,), {(0, 0): 1})
        with pytest.raises(CategoryError):
            solve_left(lhs, rhs)

    def test_solve_linear_map(self, vec_z2):
        """Test solving g ⊗ id = target for g"""
        g = Mor(vec_z2, (0, 1), (1, 0), {(0, 1): 5, (1, 0): -2})
        target = tensor(g, (1,), vec_z2)
        solved = solve_linear_map((0, 1), (1, 0), lambda h: tensor(h, (1,), vec_z2), target)
        assert solved == g

    def test_bend_unbend(self, vec_z3, rng):
        """Test unbend inverts bend"""
        U, W, A = (1,), (2, 0), (0, 2, 1)
        f = random_morphism(vec_z3, rng, A, tensor_obj(vec_z3, U, W))
        assert unbend(bend(f, U, W), U, A) == f

    def test_factor_through_identity_family(self, vec_z3, rng):
        """Test factoring through the coevaluation family of the unit"""
        Z = (0, 1)
        g = random_morphism(vec_z3, rng, Z, Z)
        dels = [identity(vec_z3, Z)]
        xis = [g]
        assert factor_through(dels, xis, [(0,)], Z, Z) == g
