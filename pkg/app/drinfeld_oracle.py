"""
Textbook Drinfeld double ``D(kG)`` written directly from its structure
constants, for comparison with the computed double of a group algebra.

Basis vector ``g ⊗ δ_k`` sits at index ``g * n + (n - 1 - k)``. All arrays
are dense numpy arrays of ``Fraction`` with columns indexing sources.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence
import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class DoubleOracle:
    """Dense structure constants of ``D(kG)``."""

    n: int
    m: np.ndarray
    u: np.ndarray
    delta: np.ndarray
    eps: np.ndarray
    S: np.ndarray
    r: np.ndarray

    @property
    def dim(self) -> int:
        return self.n * self.n

    def arrays(self) -> Dict[str, np.ndarray]:
        return {"m": self.m, "u": self.u, "delta": self.delta, "eps": self.eps,
                "S": self.S, "r": self.r}


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.full((rows, cols), ZERO, dtype=object)


def drinfeld_double_oracle(cayley: Sequence[Sequence[int]]) -> DoubleOracle:
    """
    ``(a⊗δ_k)(b⊗δ_l) = [b⁻¹kb = l] ab⊗δ_l``, unit ``e ⊗ Σ_k δ_k``,
    ``Δ(g⊗δ_k) = Σ_x (g⊗δ_x) ⊗ (g⊗δ_{kx⁻¹})``, ``ε(g⊗δ_k) = [k = e]``,
    ``S(g⊗δ_k) = g⁻¹ ⊗ δ_{gk⁻¹g⁻¹}`` and ``r = Σ_k (k⊗1) ⊗ (e⊗δ_k)``.
    """
    n = len(cayley)
    mul = [list(row) for row in cayley]
    inv = [next(h for h in range(n) if mul[g][h] == 0) for g in range(n)]
    N = n * n

    def idx(g: int, k: int) -> int:
        return g * n + (n - 1 - k)

    m = _zeros(N, N * N)
    for a in range(n):
        for k in range(n):
            for b in range(n):
                l = mul[mul[inv[b]][k]][b]
                m[idx(mul[a][b], l), idx(a, k) * N + idx(b, l)] = ONE
    u = _zeros(N, 1)
    for k in range(n):
        u[idx(0, k), 0] = ONE
    delta = _zeros(N * N, N)
    eps = _zeros(1, N)
    S = _zeros(N, N)
    for g in range(n):
        for k in range(n):
            for x in range(n):
                delta[idx(g, x) * N + idx(g, mul[k][inv[x]]), idx(g, k)] = ONE
            if k == 0:
                eps[0, idx(g, k)] = ONE
            S[idx(inv[g], mul[mul[g][inv[k]]][inv[g]]), idx(g, k)] = ONE
    r = _zeros(N * N, 1)
    for k in range(n):
        for l in range(n):
            r[idx(k, l) * N + idx(0, k), 0] = ONE
    return DoubleOracle(n, m, u, delta, eps, S, r)


def dense(f) -> np.ndarray:
    """A sparse morphism as a dense ``Fraction`` array."""
    out = _zeros(len(f.dst), len(f.src))
    for (row, col), value in f.entries.items():
        out[row, col] = Fraction(value)
    return out


def _product_in_square(M: np.ndarray, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """``Σ M[p,a,c] M[q,b,d] X[a,b] Y[c,d]``: the product of two elements of ``D ⊗ D``."""
    T = np.tensordot(M, X, axes=([1], [0]))
    T = np.tensordot(T, Y, axes=([1], [0]))
    return np.tensordot(T, M, axes=([1, 2], [1, 2]))


def oracle_axioms(oracle: DoubleOracle) -> Dict[str, bool]:
    """
    The Hopf identities of the oracle and ``r Δ = Δ^cop r``, by dense tensor
    contraction. Intended for small groups.
    """
    N = oracle.dim
    I = np.identity(N, dtype=object)
    M = oracle.m.reshape(N, N, N)
    D = oracle.delta.reshape(N, N, N)
    u = oracle.u[:, 0]
    e = oracle.eps[0, :]
    R = oracle.r.reshape(N, N)

    left = np.tensordot(M, M, axes=([1], [0])).transpose(0, 2, 3, 1)
    right = np.tensordot(M, M, axes=([2], [0]))
    co_left = np.tensordot(D, D, axes=([2], [0]))
    co_right = np.tensordot(D, D, axes=([1], [2])).transpose(0, 2, 3, 1)
    through = np.tensordot(D, M, axes=([2], [0]))
    T = np.tensordot(M, D, axes=([1], [0]))
    T = np.tensordot(T, D, axes=([1], [0]))
    split = np.tensordot(T, M, axes=([1, 3], [1, 2])).transpose(0, 3, 1, 2)
    SD = np.tensordot(oracle.S, D, axes=([1], [0]))
    antipode = np.tensordot(M, SD, axes=([1, 2], [0, 1]))

    checks = {
        "associativity": np.array_equal(left, right),
        "unit": (np.array_equal(np.tensordot(M, u, axes=([1], [0])), I)
                 and np.array_equal(np.tensordot(M, u, axes=([2], [0])), I)),
        "coassociativity": np.array_equal(co_left, co_right),
        "counit": (np.array_equal(np.tensordot(e, D, axes=([0], [0])), I)
                   and np.array_equal(np.tensordot(D, e, axes=([1], [0])), I)),
        "bialgebra": np.array_equal(through, split),
        "antipode": np.array_equal(antipode, np.multiply.outer(u, e)),
        "rmatrix_intertwines": all(
            np.array_equal(_product_in_square(M, R, D[:, :, x]),
                           _product_in_square(M, D[:, :, x].T, R))
            for x in range(N)
        ),
    }
    return checks
