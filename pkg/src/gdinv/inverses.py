"""Generalized inverses of square matrices.

Moore-Penrose and Drazin inverses are unique; inner inverses and G-Drazin
inverses form families selected by a free parameter. The GD1 inverse
``Agd @ A @ Ainner`` and its dual 1GD inverse ``Ainner @ A @ Agd`` are
built from one member of each family.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AuxMissing, AuxNotInner, AuxNotOuter, NotAGDrazinInverse, NotAnInnerInverse
from .linalg import inverse
from .matrix import Matrix
from .spectral import CoreNilpotentDecomposition, core_nilpotent, full_rank_factorization, matrix_index

__all__ = [
    "InnerParam",
    "GDrazinParam",
    "Gd1BlockParam",
    "CompositeKind",
    "moore_penrose",
    "inner_inverse",
    "drazin",
    "g_drazin",
    "is_g_drazin",
    "is_inner",
    "is_outer",
    "gd1",
    "one_gd",
    "composite_inverse",
    "gd1_from_decomposition",
    "one_gd_from_decomposition",
    "nilpotent_block_inverse",
]


def is_inner(A: Matrix, X: Matrix) -> bool:
    return A @ X @ A == A


def is_outer(A: Matrix, X: Matrix) -> bool:
    return X @ A @ X == X


def moore_penrose(A: Matrix) -> Matrix:
    """``G* (G G*)^-1 (F* F)^-1 F*`` from the full-rank factorization ``A = F G``."""
    F, G = full_rank_factorization(A)
    if F.cols == 0:
        return Matrix.zeros(A.cols, A.rows)
    Gh, Fh = G.H, F.H
    return Gh @ inverse(G @ Gh) @ inverse(Fh @ F) @ Fh


@dataclass(frozen=True)
class InnerParam:
    """Selects ``A† + Z - A† A Z A A†`` from ``A{1}``; ``Z = 0`` gives ``A†``."""

    Z: Matrix

    @classmethod
    def zero(cls, A: Matrix) -> "InnerParam":
        return cls(Matrix.zeros(A.cols, A.rows))


def inner_inverse(A: Matrix, p: InnerParam | None = None) -> Matrix:
    G = moore_penrose(A)
    if p is None:
        return G
    Z = p.Z
    if Z.shape != (A.cols, A.rows):
        raise ValueError(f"inner parameter must be {A.cols}x{A.rows}, got {Z.shape}")
    return G + Z - G @ A @ Z @ A @ G


def drazin(A: Matrix, cnd: CoreNilpotentDecomposition | None = None) -> Matrix:
    """``P blockdiag(C^-1, 0) P^-1``."""
    cnd = cnd or core_nilpotent(A)
    return cnd.assemble(inverse(cnd.C))


@dataclass(frozen=True)
class GDrazinParam:
    """Core-nilpotent decomposition plus the inner parameter selecting ``N⁻``."""

    cnd: CoreNilpotentDecomposition
    Zn: InnerParam

    @classmethod
    def canonical(cls, A: Matrix) -> "GDrazinParam":
        cnd = core_nilpotent(A)
        return cls(cnd, InnerParam.zero(cnd.N))


def nilpotent_block_inverse(cnd: CoreNilpotentDecomposition, Zn: InnerParam) -> Matrix:
    return inner_inverse(cnd.N, Zn)


def g_drazin(A: Matrix, p: GDrazinParam | None = None) -> Matrix:
    """``P blockdiag(C^-1, N⁻) P^-1``."""
    p = p or GDrazinParam.canonical(A)
    cnd = p.cnd
    return cnd.assemble(inverse(cnd.C), bottom_right=nilpotent_block_inverse(cnd, p.Zn))


def is_g_drazin(A: Matrix, X: Matrix, k: int | None = None) -> tuple[bool, bool]:
    """Membership in ``A{GD}`` by the three-equation and the two-equation definitions.

    Returns ``(three_eq, two_eq)``; the two should always agree.
    """
    if not (A.is_square and X.shape == A.shape):
        raise ValueError("is_g_drazin needs square matrices of equal size")
    if k is None:
        k = matrix_index(A).k
    inner = is_inner(A, X)
    Ak = A ** k
    Ak1 = Ak @ A
    three = inner and X @ Ak1 == Ak and Ak1 @ X == Ak
    two = inner and Ak @ X == X @ Ak
    return three, two


def _validate(A: Matrix, Agd: Matrix, Ainner: Matrix) -> None:
    if not is_inner(A, Ainner):
        raise NotAnInnerInverse("A @ Ainner @ A != A")
    three, _ = is_g_drazin(A, Agd)
    if not three:
        raise NotAGDrazinInverse("Agd is not a G-Drazin inverse of A")


def gd1(A: Matrix, Agd: Matrix, Ainner: Matrix) -> Matrix:
    """GD1 inverse ``Agd @ A @ Ainner`` (arguments are validated)."""
    _validate(A, Agd, Ainner)
    return Agd @ A @ Ainner


def one_gd(A: Matrix, Ainner: Matrix, Agd: Matrix) -> Matrix:
    """1GD inverse ``Ainner @ A @ Agd`` (arguments are validated)."""
    _validate(A, Agd, Ainner)
    return Ainner @ A @ Agd


class CompositeKind(str, Enum):
    DMP = "dmp"
    MPD = "mpd"
    D1 = "d1"
    ONE_D = "1d"
    ONE_MP = "1mp"
    MP1 = "mp1"
    CMP = "cmp"
    TWO_MP = "2mp"
    MP2 = "mp2"
    C2MP = "c2mp"


_NEEDS_INNER = {CompositeKind.D1, CompositeKind.ONE_D, CompositeKind.ONE_MP, CompositeKind.MP1}
_NEEDS_OUTER = {CompositeKind.TWO_MP, CompositeKind.MP2, CompositeKind.C2MP}


def composite_inverse(A: Matrix, kind: CompositeKind | str, aux: Matrix | None = None) -> Matrix:
    """Defining product of one of the composite inverses.

    ``aux`` is an inner inverse for D1/1D/1MP/MP1 and an outer inverse
    for 2MP/MP2/C2MP; it is ignored for DMP, MPD and CMP.
    """
    kind = CompositeKind(kind)
    if kind in _NEEDS_INNER | _NEEDS_OUTER:
        if aux is None:
            raise AuxMissing(f"{kind.value} needs an auxiliary inverse")
        if kind in _NEEDS_INNER and not is_inner(A, aux):
            raise AuxNotInner(f"aux is not an inner inverse, required by {kind.value}")
        if kind in _NEEDS_OUTER and not is_outer(A, aux):
            raise AuxNotOuter(f"aux is not an outer inverse, required by {kind.value}")
    mp = moore_penrose(A)
    needs_drazin = kind in (CompositeKind.DMP, CompositeKind.MPD, CompositeKind.D1,
                            CompositeKind.ONE_D, CompositeKind.CMP)
    D = drazin(A) if needs_drazin else None
    if kind is CompositeKind.DMP:
        return D @ A @ mp
    if kind is CompositeKind.MPD:
        return mp @ A @ D
    if kind is CompositeKind.D1:
        return D @ A @ aux
    if kind is CompositeKind.ONE_D:
        return aux @ A @ D
    if kind is CompositeKind.ONE_MP:
        return aux @ A @ mp
    if kind is CompositeKind.MP1:
        return mp @ A @ aux
    if kind is CompositeKind.CMP:
        return mp @ A @ D @ A @ mp
    if kind is CompositeKind.TWO_MP:
        return aux @ A @ mp
    if kind is CompositeKind.MP2:
        return mp @ A @ aux
    return mp @ A @ aux @ A @ mp


@dataclass(frozen=True)
class Gd1BlockParam:
    """Free blocks of the decomposition formulas.

    ``V`` is ``s x (n-s)`` for GD1 and ``(n-s) x s`` for 1GD; ``L`` is
    ``(n-s) x (n-s)``; ``Zn`` selects ``N⁻``.
    """

    V: Matrix
    L: Matrix
    Zn: InnerParam

    @classmethod
    def zero(cls, cnd: CoreNilpotentDecomposition, side: str = "gd1") -> "Gd1BlockParam":
        s, m = cnd.s, cnd.n - cnd.s
        V = Matrix.zeros(s, m) if side == "gd1" else Matrix.zeros(m, s)
        return cls(V, Matrix.zeros(m, m), InnerParam.zero(cnd.N))


def _nilpotent_pieces(cnd: CoreNilpotentDecomposition, Zn: InnerParam):
    N = cnd.N
    Nm = inner_inverse(N, Zn)
    I = Matrix.identity(N.rows)
    left = I - Nm @ N    # I - N⁻N
    right = I - N @ Nm   # I - NN⁻
    return N, Nm, left, right


def _check_param(cnd, p: Gd1BlockParam, vshape):
    m = cnd.n - cnd.s
    if p.V.shape != vshape or p.L.shape != (m, m) or p.Zn.Z.shape != (m, m):
        raise ValueError(
            f"block parameters must be V{vshape}, L({m},{m}), Zn({m},{m}); "
            f"got V{p.V.shape}, L{p.L.shape}, Zn{p.Zn.Z.shape}"
        )


def gd1_from_decomposition(cnd: CoreNilpotentDecomposition, p: Gd1BlockParam) -> Matrix:
    """``P [[C^-1, V(I-NN⁻)], [0, N⁻NN⁻ + W(I-NN⁻)]] P^-1``

    with ``W = L - (I-N⁻N) L (I-NN⁻)``.
    """
    _check_param(cnd, p, (cnd.s, cnd.n - cnd.s))
    N, Nm, left, right = _nilpotent_pieces(cnd, p.Zn)
    W = p.L - left @ p.L @ right
    Y = p.V @ right
    Z = Nm @ N @ Nm + W @ right
    return cnd.assemble(inverse(cnd.C), top_right=Y, bottom_right=Z)


def one_gd_from_decomposition(cnd: CoreNilpotentDecomposition, p: Gd1BlockParam) -> Matrix:
    """``P [[C^-1, 0], [(I-N⁻N)V, N⁻NN⁻ + (I-N⁻N)W]] P^-1``

    with ``W = L - (I-N⁻N) L (I-NN⁻)``, i.e. ``Z = N⁻NN⁻ + (I-N⁻N) L NN⁻``.
    """
    _check_param(cnd, p, (cnd.n - cnd.s, cnd.s))
    N, Nm, left, right = _nilpotent_pieces(cnd, p.Zn)
    W = p.L - left @ p.L @ right
    T = left @ p.V
    Z = Nm @ N @ Nm + left @ W
    return cnd.assemble(inverse(cnd.C), bottom_left=T, bottom_right=Z)
