"""Per-clause checkers for the GD1 / 1GD characterization theorems.

Every report keeps fine-grained ``clauses`` (single identities or subspace
tests) and coarser ``statements`` (the conjunction each theorem item
asserts). Clause names are stable and documented in the README; the
prefix ``gd1.`` or ``1gd.`` marks the side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InternalInconsistency, NoSolution, NonUniqueSolution
from .inverses import gd1, one_gd
from .linalg import (
    MatrixEquationSystem,
    column_space_basis,
    is_subspace,
    nullspace_basis,
    oblique_projector,
    rank,
    same_subspace,
    solve_matrix_equations,
)
from .matrix import Matrix, block
from .spectral import matrix_index

__all__ = [
    "Side",
    "Report",
    "CharacterizationReport",
    "RankEquationWitness",
    "BCSpec",
    "check_gd1_basic",
    "gd1_geometric_solve",
    "characterization_report",
    "rank_equation_witness",
    "is_bc_inverse",
    "bc_inverse_solve",
    "side_inverse",
]

GD1 = "gd1"
ONE_GD = "1gd"


class Side:
    GD1 = GD1
    ONE_GD = ONE_GD

    @staticmethod
    def normalize(side: str) -> str:
        s = str(side).lower().replace("_", "").replace("-", "")
        if s in ("gd1",):
            return GD1
        if s in ("1gd", "onegd"):
            return ONE_GD
        raise ValueError(f"unknown side {side!r}; expected 'gd1' or '1gd'")


def side_inverse(A: Matrix, Ainner: Matrix, Agd: Matrix, side: str = GD1) -> Matrix:
    side = Side.normalize(side)
    return gd1(A, Agd, Ainner) if side == GD1 else one_gd(A, Ainner, Agd)


@dataclass(frozen=True)
class Report:
    """Named boolean clauses; ``passed`` means every clause holds."""

    name: str
    clauses: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]

    def to_dict(self) -> dict:
        return dict(self.clauses)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _range(M: Matrix):
    return column_space_basis(M)


def _null(M: Matrix):
    return nullspace_basis(M)


def check_gd1_basic(A: Matrix, Ainner: Matrix, Agd: Matrix, side: str = GD1) -> Report:
    """{1,2}-membership, power shifts (m = 1, 2, 3) and both projector identities."""
    side = Side.normalize(side)
    X = side_inverse(A, Ainner, Agd, side)
    c: dict[str, bool] = {}
    p = side
    c[f"{p}.thm1.i.inner"] = A @ X @ A == A
    c[f"{p}.thm1.i.outer"] = X @ A @ X == X
    # the inverse whose left (right) power-shift X inherits
    left_partner, right_partner = (Ainner, Agd) if side == GD1 else (Agd, Ainner)
    Am = A
    for m in (1, 2, 3):
        c[f"{p}.thm1.ii.left.m{m}"] = Am @ X == Am @ left_partner
        c[f"{p}.thm1.ii.right.m{m}"] = X @ Am == right_partner @ Am
        Am = Am @ A
    if side == GD1:
        P = oblique_projector(_range(A), _null(A @ Ainner))
        Q = oblique_projector(_range(Agd @ A), _null(A))
    else:
        P = oblique_projector(_range(A), _null(A @ Agd))
        Q = oblique_projector(_range(Ainner @ A), _null(A))
    c[f"{p}.thm1.iii.projector"] = A @ X == P
    c[f"{p}.thm1.iv.projector"] = X @ A == Q
    return Report(f"{p}-basic", c)


def _geometric_system(A: Matrix, Ainner: Matrix, Agd: Matrix, side: str) -> MatrixEquationSystem:
    n = A.rows
    I = Matrix.identity(n)
    if side == GD1:
        P = oblique_projector(_range(A), _null(A @ Ainner))
        Q = oblique_projector(_range(Agd @ A), _null(A))
    else:
        P = oblique_projector(_range(A), _null(A @ Agd))
        Q = oblique_projector(_range(Ainner @ A), _null(A))
    # A X = P and R(X) ⊆ R(Q)  <=>  (I - Q) X = 0
    return MatrixEquationSystem.of((n, n), (A, I, P), (I - Q, I, Matrix.zeros(n, n)))


def gd1_geometric_solve(A: Matrix, Ainner: Matrix, Agd: Matrix, side: str = GD1) -> Matrix:
    """The unique ``X`` with ``AX`` the prescribed projector and ``R(X)`` inside the prescribed range."""
    side = Side.normalize(side)
    sol = solve_matrix_equations(_geometric_system(A, Ainner, Agd, side))
    if not sol.unique:
        raise NonUniqueSolution(f"{len(sol.homogeneous)} free directions in the geometric system")
    return sol.particular


@dataclass(frozen=True)
class CharacterizationReport:
    side: str
    clauses: dict[str, bool]
    statements: dict[str, bool]

    @property
    def all_equivalent(self) -> bool:
        return len(set(self.statements.values())) <= 1

    @property
    def all_true(self) -> bool:
        return all(self.statements.values()) and all(self.clauses.values())

    def to_dict(self) -> dict:
        """Flat ``{name: bool}`` map of clauses and statements."""
        out = dict(self.clauses)
        out.update(self.statements)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def characterization_report(
    A: Matrix, X: Matrix, Ainner: Matrix, Agd: Matrix, side: str = GD1
) -> CharacterizationReport:
    """Evaluate every item of the characterization theorems for candidate ``X``."""
    side = Side.normalize(side)
    p = side
    if side == GD1:
        target = gd1(A, Agd, Ainner)
        rng_ref = Agd @ A        # R(X) should equal R(Agd A)
        null_ref = A @ Ainner    # N(X) should equal N(A Ainner)
        ax_ref = A @ Ainner
        xa_ref = Agd @ A
        absorb_left = Agd @ A    # (Agd A) X = X
        absorb_right = A @ Ainner
        # thm2.iii / thm3.iii
        t2iii = (Ainner @ A @ X, Ainner @ A @ Ainner)
        t3iii = (X @ A @ Agd, Agd @ A @ Agd)
    else:
        target = one_gd(A, Ainner, Agd)
        rng_ref = Ainner @ A
        null_ref = A @ Agd
        ax_ref = A @ Agd
        xa_ref = Ainner @ A
        absorb_left = Ainner @ A
        absorb_right = A @ Agd
        t2iii = (Agd @ A @ X, Agd @ A @ Agd)
        t3iii = (X @ A @ Ainner, Ainner @ A @ Ainner)

    RX, NX = _range(X), _null(X)
    R_ref, N_ref = _range(rng_ref), _null(null_ref)
    c: dict[str, bool] = {}
    c[f"{p}.i.equals"] = X == target
    c[f"{p}.ax"] = A @ X == ax_ref
    c[f"{p}.xa"] = X @ A == xa_ref
    c[f"{p}.outer"] = X @ A @ X == X
    c[f"{p}.inner"] = A @ X @ A == A
    c[f"{p}.range"] = same_subspace(RX, R_ref)
    c[f"{p}.null"] = same_subspace(NX, N_ref)
    c[f"{p}.range.sub"] = is_subspace(RX, R_ref)
    c[f"{p}.thm2.iii.absorb"] = t2iii[0] == t2iii[1]
    c[f"{p}.thm3.iii.absorb"] = t3iii[0] == t3iii[1]
    c[f"{p}.thm5.iv.leftabsorb"] = absorb_left @ X == X
    c[f"{p}.thm5.iv.rightabsorb"] = X @ absorb_right == X
    P = oblique_projector(_range(A), _null(ax_ref))
    c[f"{p}.eq2.projector"] = A @ X == P

    s: dict[str, bool] = {}
    s[f"{p}.i"] = c[f"{p}.i.equals"]
    s[f"{p}.thm2.ii"] = c[f"{p}.ax"] and c[f"{p}.range"]
    s[f"{p}.thm2.iii"] = c[f"{p}.thm2.iii.absorb"] and c[f"{p}.range"]
    s[f"{p}.thm3.ii"] = c[f"{p}.xa"] and c[f"{p}.null"]
    s[f"{p}.thm3.iii"] = c[f"{p}.thm3.iii.absorb"] and c[f"{p}.null"]
    s[f"{p}.thm4.ii"] = c[f"{p}.outer"] and c[f"{p}.range"] and c[f"{p}.null"]
    s[f"{p}.thm4.iii"] = c[f"{p}.outer"] and c[f"{p}.xa"] and c[f"{p}.ax"]
    s[f"{p}.thm5.ii"] = s[f"{p}.thm4.iii"] and c[f"{p}.inner"]
    s[f"{p}.thm5.iii"] = s[f"{p}.thm4.iii"]
    s[f"{p}.thm5.iv"] = (c[f"{p}.thm5.iv.leftabsorb"] and c[f"{p}.xa"] and c[f"{p}.ax"]
                         and c[f"{p}.thm5.iv.rightabsorb"])
    s[f"{p}.eq2"] = c[f"{p}.eq2.projector"] and c[f"{p}.range.sub"]
    return CharacterizationReport(side, c, s)


@dataclass(frozen=True)
class RankEquationWitness:
    M: Matrix
    N: Matrix
    X: Matrix
    block_rank: int
    rank_A: int
    clauses: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())


def rank_equation_witness(A: Matrix, Ainner: Matrix, Agd: Matrix, side: str = GD1) -> RankEquationWitness:
    """``M = I - AX``, ``N = I - XA`` with the annihilation identities and the block-rank equation."""
    side = Side.normalize(side)
    p = side
    n = A.rows
    k = matrix_index(A).k
    X = side_inverse(A, Ainner, Agd, side)
    I = Matrix.identity(n)
    Z = Matrix.zeros(n, n)
    M = I - A @ X
    N = I - X @ A
    Ak = A ** k
    c: dict[str, bool] = {}
    c[f"{p}.rank.M.idempotent"] = M @ M == M
    c[f"{p}.rank.N.idempotent"] = N @ N == N
    if side == GD1:
        c[f"{p}.rank.AkAmM"] = Ak @ Ainner @ M == Z
        c[f"{p}.rank.NAkAm"] = N @ Ak @ Ainner == Z
    else:
        c[f"{p}.rank.AmAkM"] = Ainner @ Ak @ M == Z
        c[f"{p}.rank.NAmAk"] = N @ Ainner @ Ak == Z
    c[f"{p}.rank.MAk"] = M @ Ak == Z
    c[f"{p}.rank.AkN"] = Ak @ N == Z
    big = block([[A, I - M], [I - N, X]])
    block_rank = rank(big)
    rank_A = rank(A)
    c[f"{p}.rank.block"] = block_rank == rank_A
    return RankEquationWitness(M, N, X, block_rank, rank_A, c)


@dataclass(frozen=True)
class BCSpec:
    B: Matrix
    C: Matrix


def is_bc_inverse(A: Matrix, spec: BCSpec, X: Matrix) -> bool:
    B, C = spec.B, spec.C
    return (
        X @ A @ B == B
        and C @ A @ X == C
        and is_subspace(_null(C), _null(X))
        and is_subspace(_range(X), _range(B))
    )


def bc_inverse_solve(A: Matrix, spec: BCSpec) -> Matrix | None:
    """The (B, C)-inverse of ``A`` as the solution of a linear system, or ``None``.

    ``R(X) ⊆ R(B)`` is encoded as ``(I - Q_B) X = 0`` with ``Q_B`` a
    projector onto ``R(B)``; ``N(C) ⊆ N(X)`` as ``X (I - Q_C) = 0`` with
    ``Q_C`` a projector whose nullspace is ``N(C)``.
    """
    B, C = spec.B, spec.C
    n = A.rows
    I = Matrix.identity(n)
    Zn = Matrix.zeros(n, n)
    # N(B*) is the orthogonal complement of R(B), hence a direct-sum partner
    QB = oblique_projector(_range(B), _null(B.H))
    NC = _null(C)
    QC = oblique_projector(_range(C.H), NC)
    system = MatrixEquationSystem.of(
        (n, n),
        (I, A @ B, B),
        (C @ A, I, C),
        (I - QB, I, Zn),
        (I, I - QC, Zn),
    )
    try:
        sol = solve_matrix_equations(system)
    except NoSolution:
        return None
    if not sol.unique:
        raise NonUniqueSolution("(B, C)-inverse system has free directions; uniqueness violated")
    X = sol.particular
    if not is_bc_inverse(A, spec, X):
        raise InternalInconsistency("solver output fails the (B, C) conditions")
    return X
