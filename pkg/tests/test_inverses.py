import pytest
from gmpy2 import mpq

from gdinv.errors import AuxMissing, AuxNotInner, AuxNotOuter, NotAGDrazinInverse, NotAnInnerInverse
from gdinv.fixtures import A1, A1_DRAZIN, A1_MP, A2, D1, D2, G1, G2, X1
from gdinv.inverses import (
    CompositeKind,
    GDrazinParam,
    Gd1BlockParam,
    InnerParam,
    composite_inverse,
    drazin,
    g_drazin,
    gd1,
    gd1_from_decomposition,
    inner_inverse,
    is_g_drazin,
    moore_penrose,
    one_gd,
    one_gd_from_decomposition,
)
from gdinv.linalg import inverse
from gdinv.matrix import Matrix
from gdinv.spectral import core_nilpotent

N2 = Matrix([[0, 1], [0, 0]])
N2m = Matrix([[0, 0], [1, 0]])
I3 = Matrix.identity(3)
I4 = Matrix.identity(4)
INV = Matrix([[2, 1, 0], [1, 1, 0], [0, 3, 1]])


class TestMoorePenrose:
    def test_worked_example(self):
        assert moore_penrose(A1) == A1_MP

    def test_identity(self):
        assert moore_penrose(I3) == I3

    def test_rank_one_symmetric(self):
        A = Matrix([[1, 2], [2, 4]])
        assert moore_penrose(A) == A.scale(mpq(1, 25))

    def test_zero(self):
        assert moore_penrose(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)


class TestInnerFamily:
    def test_invertible_singleton(self):
        Z = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert inner_inverse(INV, InnerParam(Z)) == inverse(INV)

    def test_zero_matrix(self):
        Z = Matrix([[1, 2], [3, 4]])
        assert inner_inverse(Matrix.zeros(2, 2), InnerParam(Z)) == Z

    def test_reaches_G1(self):
        # the family is onto A{1}: Z = G1 reproduces G1
        assert A1 @ G1 @ A1 == A1
        assert inner_inverse(A1, InnerParam(G1)) == G1

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            inner_inverse(A1, InnerParam(Matrix.zeros(3, 4)))


class TestDrazin:
    def test_worked_example(self):
        assert drazin(A1) == A1_DRAZIN

    def test_nilpotent(self):
        assert drazin(N2) == Matrix.zeros(2, 2)

    def test_invertible(self):
        assert drazin(INV) == inverse(INV)


class TestGDrazin:
    def test_invertible(self):
        assert g_drazin(INV) == inverse(INV)

    def test_nilpotent_member(self):
        cnd = core_nilpotent(N2)
        assert g_drazin(N2, GDrazinParam(cnd, InnerParam(N2m))) == N2m

    def test_nilpotent_set_is_x21_equal_one(self):
        for x11, x12, x21, x22 in [(0, 0, 1, 0), (3, -1, 1, 2), (0, 0, 0, 0), (1, 1, 2, 1)]:
            X = Matrix([[x11, x12], [x21, x22]])
            assert is_g_drazin(N2, X) == ((x21 == 1),) * 2

    def test_worked_fixtures(self):
        assert is_g_drazin(A1, D1) == (True, True)
        assert is_g_drazin(A2, D2) == (True, True)
        assert is_g_drazin(I3, I3) == (True, True)

    def test_mp_of_A1_is_also_g_drazin(self):
        # A1^2 = A1^3 = E11, so A1† satisfies every G-Drazin equation
        assert is_g_drazin(A1, moore_penrose(A1)) == (True, True)

    def test_non_member(self):
        assert is_g_drazin(A1, G1) == (False, False)


class TestGD1:
    def test_worked_example(self):
        assert gd1(A1, D1, G1) == X1

    def test_identity(self):
        assert gd1(I3, I3, I3) == I3
        assert one_gd(I3, I3, I3) == I3

    def test_nilpotent(self):
        assert gd1(N2, N2m, N2m) == N2m
        assert one_gd(N2, N2m, N2m) == N2m

    def test_second_example_computed_value(self):
        # the product G2 A2 D2 equals D2; it differs from the printed 1GD matrix in entry (4,4)
        assert one_gd(A2, G2, D2) == D2

    def test_validation(self):
        with pytest.raises(NotAnInnerInverse):
            gd1(A1, D1, Matrix.zeros(4, 4))
        with pytest.raises(NotAGDrazinInverse):
            gd1(A1, G1, G1)
        with pytest.raises(NotAGDrazinInverse):
            one_gd(A2, G2, G2)


class TestComposite:
    @pytest.mark.parametrize("kind", ["dmp", "mpd", "cmp"])
    def test_worked_example(self, kind):
        assert composite_inverse(A1, kind) == A1_DRAZIN

    def test_identity(self):
        assert composite_inverse(I3, CompositeKind.CMP) == I3

    def test_d1_by_hand(self):
        expected = Matrix([[1, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
        assert composite_inverse(A1, CompositeKind.D1, G1) == expected

    def test_aux_checks(self):
        with pytest.raises(AuxMissing):
            composite_inverse(A1, "1mp")
        with pytest.raises(AuxNotInner):
            composite_inverse(A1, "d1", Matrix.zeros(4, 4))
        with pytest.raises(AuxNotOuter):
            composite_inverse(A1, "2mp", I4)

    def test_outer_kinds(self):
        outer = G1 @ A1 @ G1
        for kind in ("2mp", "mp2", "c2mp"):
            Y = composite_inverse(A1, kind, outer)
            assert Y @ A1 @ Y == Y


class TestDecompositionFormulas:
    def test_zero_params_gd1(self):
        cnd = core_nilpotent(A1)
        X = gd1_from_decomposition(cnd, Gd1BlockParam.zero(cnd, "gd1"))
        Nm = inner_inverse(cnd.N)
        assert X == cnd.assemble(inverse(cnd.C), bottom_right=Nm @ cnd.N @ Nm)
        assert A1 @ X @ A1 == A1 and X @ A1 @ X == X

    def test_zero_params_1gd(self):
        cnd = core_nilpotent(A2)
        X = one_gd_from_decomposition(cnd, Gd1BlockParam.zero(cnd, "1gd"))
        Nm = inner_inverse(cnd.N)
        assert X == cnd.assemble(inverse(cnd.C), bottom_right=Nm @ cnd.N @ Nm)

    def test_invertible(self):
        cnd = core_nilpotent(INV)
        for side, f in (("gd1", gd1_from_decomposition), ("1gd", one_gd_from_decomposition)):
            assert f(cnd, Gd1BlockParam.zero(cnd, side)) == inverse(INV)

    def test_reproduces_worked_gd1(self):
        # blocks of X1 in the core-nilpotent basis recover (V, L) that rebuild X1
        cnd = core_nilpotent(A1)
        _, Y, _, Z = cnd.blocks_of(X1)
        _, _, _, Nm = cnd.blocks_of(D1)
        p = Gd1BlockParam(Y, Z, InnerParam(Nm))
        assert gd1_from_decomposition(cnd, p) == X1

    def test_param_shape_check(self):
        cnd = core_nilpotent(A1)
        with pytest.raises(ValueError):
            gd1_from_decomposition(cnd, Gd1BlockParam.zero(cnd, "1gd"))
