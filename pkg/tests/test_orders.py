import pytest

from gdinv.ensembles import make_rng, random_ordered_pair_sharp
from gdinv.errors import IndexTooLarge, WitnessRequired
from gdinv.fixtures import A1
from gdinv.inverses import g_drazin, moore_penrose
from gdinv.matrix import Matrix
from gdinv.orders import (
    OrderKind,
    OrderWitness,
    b_block_criterion,
    order_characterization_report,
    relation_holds,
    sharp_to_gd1_witness,
)

E11 = Matrix([[1, 0], [0, 0]])
E12 = Matrix([[0, 1], [0, 0]])
I2 = Matrix.identity(2)


def test_reflexive_every_kind():
    A = Matrix([[2, 1], [0, 0]])
    w = OrderWitness(moore_penrose(A), g_drazin(A))
    for kind in OrderKind:
        assert relation_holds(A, A, kind, w)


def test_right_sharp_examples():
    assert relation_holds(E11, I2, OrderKind.RIGHT_SHARP)
    assert not relation_holds(E11, E12, OrderKind.RIGHT_SHARP)


def test_sharp_needs_index_one():
    with pytest.raises(IndexTooLarge):
        relation_holds(A1, A1, OrderKind.LEFT_SHARP)


def test_witness_required():
    with pytest.raises(WitnessRequired):
        relation_holds(E11, I2, OrderKind.GD1)


def test_statement_ii_false_for_unrelated_pair():
    rep = order_characterization_report(E11, E12, "gd1", OrderWitness(E11, E11))
    assert rep.statements["gd1.order.ii"] is False
    assert rep.all_agree


def test_reflexive_report_all_true():
    w = OrderWitness(E11, E11)
    rep = order_characterization_report(E11, E11, "gd1", w)
    assert all(rep.statements.values()) and all(rep.clauses.values())


class TestWitness:
    def test_equal_pair(self):
        w = sharp_to_gd1_witness(E11, E11)
        assert w is not None and relation_holds(E11, E11, OrderKind.GD1, w)

    def test_E11_below_identity(self):
        w = sharp_to_gd1_witness(E11, I2)
        assert w.Ainner == E11
        assert relation_holds(E11, I2, OrderKind.GD1, w)

    def test_infeasible(self):
        assert sharp_to_gd1_witness(I2, E11) is None

    @pytest.mark.parametrize("side,kind,oside", [("right", OrderKind.GD1, "gd1"), ("left", OrderKind.ONE_GD, "1gd")])
    @pytest.mark.parametrize("seed", range(5))
    def test_generated_pairs(self, side, kind, oside, seed):
        A, B = random_ordered_pair_sharp(3, side, make_rng(seed))
        w = sharp_to_gd1_witness(A, B)
        assert w is not None
        assert relation_holds(A, B, kind, w)
        rep = order_characterization_report(A, B, oside, w)
        assert all(rep.statements.values())
        assert b_block_criterion(A, B, oside, w)


def test_gd1_implies_d_minus():
    A, B = random_ordered_pair_sharp(4, "right", make_rng(5))
    w = sharp_to_gd1_witness(A, B)
    assert relation_holds(A, B, OrderKind.GD1, w)
    assert relation_holds(A, B, OrderKind.D_MINUS, w)


def test_one_gd_implies_minus_d():
    A, B = random_ordered_pair_sharp(4, "left", make_rng(5))
    w = sharp_to_gd1_witness(A, B)
    assert relation_holds(A, B, OrderKind.ONE_GD, w)
    assert relation_holds(A, B, OrderKind.MINUS_D, w)
