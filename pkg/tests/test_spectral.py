import pytest
from gmpy2 import mpq

from gdinv.ensembles import EnsembleSpec, feasible_specs, make_rng, random_matrix_with_index
from gdinv.fixtures import A1, A2
from gdinv.matrix import Matrix
from gdinv.spectral import core_nilpotent, full_rank_factorization, matrix_index

N2 = Matrix([[0, 1], [0, 0]])


@pytest.mark.parametrize(
    "A,k,chain",
    [
        (A1, 2, (4, 2, 1, 1)),
        (A2, 2, (4, 3, 2, 2)),
        (Matrix.identity(3), 0, (3, 3)),
        (Matrix.zeros(3, 3), 1, (3, 0, 0)),
    ],
)
def test_index_and_rank_chain(A, k, chain):
    idx = matrix_index(A)
    assert idx.k == k
    assert idx.rank_chain == chain


def test_index_rejects_rectangular():
    with pytest.raises(ValueError):
        matrix_index(Matrix.zeros(2, 3))


class TestFullRankFactorization:
    def test_identity(self):
        F, G = full_rank_factorization(Matrix.identity(2))
        assert F == Matrix.identity(2) and G == Matrix.identity(2)

    def test_rank_one(self):
        F, G = full_rank_factorization(Matrix([[1, 2], [2, 4]]))
        assert F == Matrix([[1], [2]]) and G == Matrix([[1, 2]])

    def test_zero(self):
        F, G = full_rank_factorization(Matrix.zeros(2, 2))
        assert F.shape == (2, 0) and G.shape == (0, 2)


class TestCoreNilpotent:
    def test_invertible(self):
        A = Matrix([[2, 1], [1, 1]])
        cnd = core_nilpotent(A)
        assert cnd.s == 2 and cnd.k == 0 and cnd.N.shape == (0, 0)
        assert cnd.reassemble() == A

    def test_pure_nilpotent(self):
        cnd = core_nilpotent(N2)
        assert cnd.s == 0 and cnd.N == N2 and cnd.P == Matrix.identity(2)

    def test_A1(self):
        cnd = core_nilpotent(A1)
        assert cnd.s == 1 and cnd.k == 2
        assert cnd.C == Matrix([[1]])
        assert cnd.N @ cnd.N == Matrix.zeros(3, 3) and not cnd.N.is_zero()
        assert cnd.reassemble() == A1

    def test_blocks_roundtrip(self):
        cnd = core_nilpotent(A2)
        X = Matrix([[1, 2, 3, 4], [0, mpq(1, 2), 0, 1], [5, 0, 0, 0], [1, 1, 1, 1]])
        assert cnd.assemble(*cnd.blocks_of(X)) == X

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_random_ensemble(self, n):
        for t, (r, k) in enumerate(feasible_specs(n)):
            A = random_matrix_with_index(EnsembleSpec(n, r, k, 0), make_rng(3, n, t))
            cnd = core_nilpotent(A)
            assert cnd.reassemble() == A
            assert cnd.P @ cnd.Pinv == Matrix.identity(n)
            assert cnd.s == r and cnd.k == k
            m = n - r
            assert (cnd.N ** k).is_zero() if m else True
            if k >= 1 and m:
                assert not (cnd.N ** (k - 1)).is_zero()
