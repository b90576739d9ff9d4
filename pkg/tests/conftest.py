"""
Pytest configuration and shared fixtures
"""
import pytest
import numpy as np
from pathlib import Path
from app.hopfalg import group_algebra, sweedler_algebra
from app.semicat import vec_category, vec_g_category

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

Z2 = [[0, 1], [1, 0]]
Z3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
KLEIN = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
S3 = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 5, 4, 3, 2],
    [2, 4, 0, 5, 1, 3],
    [3, 5, 4, 0, 2, 1],
    [4, 2, 3, 1, 5, 0],
    [5, 3, 1, 2, 0, 4],
]
# transpositions of S3 in the table above
TRANSPOSITIONS = (1, 2, 3)


def trivial_bicharacter(n):
    return [[1] * n for _ in range(n)]


def klein_bicharacter():
    """(-1)^{a1 b2} with g = 2 a1 + a2."""
    return [[-1 if (a >> 1) & 1 and b & 1 else 1 for b in range(4)] for a in range(4)]


@pytest.fixture
def vec():
    return vec_category()


@pytest.fixture
def vec_z2():
    return vec_g_category(Z2, bicharacter=trivial_bicharacter(2), name="vec_z2")


@pytest.fixture
def vec_z2_sign():
    return vec_g_category(Z2, bicharacter=[[1, 1], [1, -1]], name="vec_z2_sign")


@pytest.fixture
def vec_z3():
    return vec_g_category(Z3, bicharacter=trivial_bicharacter(3), name="vec_z3")


@pytest.fixture
def vec_s3():
    return vec_g_category(S3, name="vec_s3")


@pytest.fixture
def vec_klein():
    return vec_g_category(KLEIN, bicharacter=klein_bicharacter(), name="vec_klein")


@pytest.fixture
def kz2(vec):
    return group_algebra(vec, Z2, name="kZ2")


@pytest.fixture
def kz3(vec):
    return group_algebra(vec, Z3, name="kZ3")


@pytest.fixture
def ks3(vec):
    return group_algebra(vec, S3, name="kS3")


@pytest.fixture
def sweedler(vec):
    return sweedler_algebra(vec)


@pytest.fixture
def rng():
    """Seeded generator for randomized checks"""
    return np.random.default_rng(20240917)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def clean_environment(monkeypatch):
    """Fixture to provide clean environment variables"""
    env_vars = [
        'MONADAL_LOG_DIR',
        'MONADAL_OUTPUT_DIR',
        'MONADAL_THREADS',
        'MONADAL_SEED',
        'MONADAL_SAMPLES',
        'MONADAL_MAX_TUPLES',
        'MONADAL_DEFAULT_ENCODING',
    ]
    for var in env_vars:
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def output_dir(tmp_path):
    """Fixture to provide a temporary output directory"""
    out = tmp_path / "output"
    out.mkdir()
    return out
