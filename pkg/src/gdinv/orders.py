"""Matrix relations induced by the GD1 / 1GD inverses and the sharp orders."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import IndexTooLarge, NoSolution, WitnessRequired
from .inverses import drazin, g_drazin, gd1, one_gd
from .linalg import (
    MatrixEquationSystem,
    column_space_basis,
    is_subspace,
    nullspace_basis,
    oblique_projector,
    same_subspace,
    solve_matrix_equations,
)
from .matrix import Matrix
from .oracles import GD1, Side
from .spectral import core_nilpotent, matrix_index

__all__ = [
    "OrderKind",
    "OrderWitness",
    "OrderReport",
    "relation_holds",
    "order_characterization_report",
    "sharp_to_gd1_witness",
    "b_block_criterion",
]


class OrderKind(str, Enum):
    GD1 = "gd1"
    ONE_GD = "1gd"
    D_MINUS = "d-minus"
    MINUS_D = "minus-d"
    LEFT_SHARP = "left-sharp"
    RIGHT_SHARP = "right-sharp"


@dataclass(frozen=True)
class OrderWitness:
    """The inner and G-Drazin inverses pinning a witness-dependent relation."""

    Ainner: Matrix
    Agd: Matrix
    P: Matrix | None = None
    Q: Matrix | None = None


def _check_index_le1(M: Matrix, name: str) -> None:
    if matrix_index(M).k > 1:
        raise IndexTooLarge(f"sharp orders need ind({name}) <= 1")


def relation_holds(A: Matrix, B: Matrix, kind: OrderKind | str, witness: OrderWitness | None = None) -> bool:
    kind = OrderKind(kind)
    if A.shape != B.shape or not A.is_square:
        raise ValueError("relations compare square matrices of equal size")
    if kind in (OrderKind.LEFT_SHARP, OrderKind.RIGHT_SHARP):
        _check_index_le1(A, "A")
        A2 = A @ A
        if kind is OrderKind.LEFT_SHARP:
            return A2 == A @ B and is_subspace(column_space_basis(A), column_space_basis(B))
        return A2 == B @ A and is_subspace(column_space_basis(A.H), column_space_basis(B.H))
    if witness is None:
        raise WitnessRequired(f"{kind.value} needs an explicit inverse witness")
    Am, Agd = witness.Ainner, witness.Agd
    if kind is OrderKind.GD1:
        X = gd1(A, Agd, Am)
    elif kind is OrderKind.ONE_GD:
        X = one_gd(A, Am, Agd)
    elif kind is OrderKind.D_MINUS:
        X = drazin(A) @ A @ Am
    else:
        X = Am @ A @ drazin(A)
    return A @ X == B @ X and X @ A == X @ B


@dataclass(frozen=True)
class OrderReport:
    side: str
    statements: dict[str, bool]
    clauses: dict[str, bool]

    @property
    def all_agree(self) -> bool:
        return len(set(self.statements.values())) <= 1


def order_characterization_report(A: Matrix, B: Matrix, side: str, witness: OrderWitness) -> OrderReport:
    """Statements (i)-(v) of the idempotent characterization, for one fixed witness.

    The existential idempotents of (iv)/(v) are realized as ``P = AX`` and
    ``Q = XA``; their range/nullspace clauses and the equality with the
    oblique projector on the prescribed subspaces are checked as well.
    """
    side = Side.normalize(side)
    Am, Agd = witness.Ainner, witness.Agd
    p = side
    if side == GD1:
        X = gd1(A, Agd, Am)
        rel = relation_holds(A, B, OrderKind.GD1, witness)
        ii = A == A @ Am @ B and A == B @ Agd @ A
        iii = A == A @ X @ B and A == B @ X @ A
        p_null_ref, q_range_ref = A @ Am, Agd @ A
    else:
        X = one_gd(A, Am, Agd)
        rel = relation_holds(A, B, OrderKind.ONE_GD, witness)
        ii = A == B @ Am @ A and A == A @ Agd @ B
        iii = A == B @ X @ A and A == A @ X @ B
        p_null_ref, q_range_ref = A @ Agd, Am @ A
    P = A @ X
    Q = X @ A
    RA, NA = column_space_basis(A), nullspace_basis(A)
    RP, NP = column_space_basis(P), nullspace_basis(P)
    RQ, NQ = column_space_basis(Q), nullspace_basis(Q)
    c: dict[str, bool] = {
        f"{p}.order.P.idempotent": P @ P == P,
        f"{p}.order.Q.idempotent": Q @ Q == Q,
        f"{p}.order.P.range": same_subspace(RP, RA),
        f"{p}.order.Q.null": same_subspace(NQ, NA),
        f"{p}.order.iv.P.null": same_subspace(NP, nullspace_basis(p_null_ref)),
        f"{p}.order.iv.Q.range": same_subspace(RQ, column_space_basis(q_range_ref)),
        f"{p}.order.v.P.null": same_subspace(NP, nullspace_basis(X)),
        f"{p}.order.v.Q.range": same_subspace(RQ, column_space_basis(X)),
        f"{p}.order.P.oblique": P == oblique_projector(RA, nullspace_basis(p_null_ref)),
        f"{p}.order.Q.oblique": Q == oblique_projector(column_space_basis(q_range_ref), NA),
    }
    factor = A == P @ B and A == B @ Q
    shape_ok = (c[f"{p}.order.P.idempotent"] and c[f"{p}.order.Q.idempotent"]
                and c[f"{p}.order.P.range"] and c[f"{p}.order.Q.null"])
    iv = factor and shape_ok and c[f"{p}.order.iv.P.null"] and c[f"{p}.order.iv.Q.range"]
    v = factor and shape_ok and c[f"{p}.order.v.P.null"] and c[f"{p}.order.v.Q.range"]
    s = {f"{p}.order.i": rel, f"{p}.order.ii": ii, f"{p}.order.iii": iii,
         f"{p}.order.iv": iv, f"{p}.order.v": v}
    return OrderReport(side, s, c)


def sharp_to_gd1_witness(A: Matrix, B: Matrix) -> OrderWitness | None:
    """Solve ``{A X A = A, (A - B) X = 0, X (A - B) = 0}`` for the inner inverse.

    The G-Drazin partner is the canonical member from the core-nilpotent
    decomposition. ``None`` means the system is infeasible.
    """
    _check_index_le1(A, "A")
    n = A.rows
    I = Matrix.identity(n)
    Z = Matrix.zeros(n, n)
    D = A - B
    system = MatrixEquationSystem.of((n, n), (A, A, A), (D, I, Z), (I, D, Z))
    try:
        sol = solve_matrix_equations(system)
    except NoSolution:
        return None
    return OrderWitness(sol.particular, g_drazin(A))


def b_block_criterion(A: Matrix, B: Matrix, side: str, witness: OrderWitness) -> bool:
    """Block form of ``B`` in the core-nilpotent coordinates of ``A``.

    GD1: ``B ~ [[C, -C Y B4], [0, B4]]`` with ``Z B4 = N⁻N`` and ``B4 Z = N Z``,
    where ``[[C^-1, Y], [0, Z]]`` are the blocks of the GD1 inverse.
    1GD: ``B ~ [[C, 0], [-B4 T C, B4]]`` with ``B4 Z = NN⁻`` and ``Z B4 = Z N``,
    where ``[[C^-1, 0], [T, Z]]`` are the blocks of the 1GD inverse.
    ``N⁻`` is read off the G-Drazin witness in the same coordinates.
    """
    side = Side.normalize(side)
    cnd = core_nilpotent(A)
    C, N = cnd.C, cnd.N
    _, _, _, Nm = cnd.blocks_of(witness.Agd)
    X = gd1(A, witness.Agd, witness.Ainner) if side == GD1 else one_gd(A, witness.Ainner, witness.Agd)
    _, Y, T, Z = cnd.blocks_of(X)
    B1, B2, B3, B4 = cnd.blocks_of(B)
    if B1 != C:
        return False
    if side == GD1:
        return (B3.is_zero() and B2 == -(C @ Y @ B4)
                and Z @ B4 == Nm @ N and B4 @ Z == N @ Z)
    return (B2.is_zero() and B3 == -(B4 @ T @ C)
            and B4 @ Z == N @ Nm and Z @ B4 == Z @ N)
