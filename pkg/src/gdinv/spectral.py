"""Index, full-rank factorization and the core-nilpotent decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency
from .linalg import column_space_basis, inverse, nullspace_basis, rank, rref
from .matrix import Matrix, blockdiag

__all__ = [
    "IndexedMatrix",
    "CoreNilpotentDecomposition",
    "matrix_index",
    "full_rank_factorization",
    "core_nilpotent",
]


@dataclass(frozen=True)
class IndexedMatrix:
    A: Matrix
    k: int
    rank_chain: tuple[int, ...]  # rank(A^0), ..., rank(A^(k+1))

    @property
    def core_rank(self) -> int:
        return self.rank_chain[self.k]


def matrix_index(A: Matrix) -> IndexedMatrix:
    """Least ``k >= 0`` with ``rank(A^k) == rank(A^(k+1))``."""
    if not A.is_square:
        raise ValueError("index is defined for square matrices")
    chain = [A.rows]
    power = Matrix.identity(A.rows)
    while True:
        power = power @ A
        chain.append(rank(power))
        if chain[-1] == chain[-2]:
            return IndexedMatrix(A, len(chain) - 2, tuple(chain))


def full_rank_factorization(A: Matrix) -> tuple[Matrix, Matrix]:
    """``A = F @ G`` with ``F`` the pivot columns of ``A`` and ``G`` the nonzero rows of RREF(A)."""
    res = rref(A)
    r = res.rank
    F = Matrix._raw(tuple(tuple(row[j] for j in res.pivots) for row in A.data), A.rows, r)
    G = res.R.submatrix(slice(0, r), slice(0, A.cols))
    return F, G


@dataclass(frozen=True)
class CoreNilpotentDecomposition:
    """``A = P @ blockdiag(C, N) @ Pinv`` with ``C`` invertible and ``N`` nilpotent."""

    P: Matrix
    Pinv: Matrix
    C: Matrix
    N: Matrix
    s: int
    k: int

    @property
    def n(self) -> int:
        return self.P.rows

    def assemble(self, top_left: Matrix, top_right: Matrix | None = None,
                 bottom_left: Matrix | None = None, bottom_right: Matrix | None = None) -> Matrix:
        """``P @ [[TL, TR], [BL, BR]] @ Pinv``; omitted blocks are zero."""
        s, m = self.s, self.n - self.s
        tr = top_right if top_right is not None else Matrix.zeros(s, m)
        bl = bottom_left if bottom_left is not None else Matrix.zeros(m, s)
        br = bottom_right if bottom_right is not None else Matrix.zeros(m, m)
        core = top_left.hstack(tr).vstack(bl.hstack(br))
        return self.P @ core @ self.Pinv

    def blocks_of(self, X: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        """Blocks of ``Pinv @ X @ P`` in the decomposition's coordinates."""
        Y = self.Pinv @ X @ self.P
        s, n = self.s, self.n
        return (
            Y.submatrix(slice(0, s), slice(0, s)),
            Y.submatrix(slice(0, s), slice(s, n)),
            Y.submatrix(slice(s, n), slice(0, s)),
            Y.submatrix(slice(s, n), slice(s, n)),
        )

    def reassemble(self) -> Matrix:
        return self.P @ blockdiag(self.C, self.N) @ self.Pinv


def core_nilpotent(A: Matrix) -> CoreNilpotentDecomposition:
    """Columns of ``P``: pivot basis of ``R(A^k)`` then nullspace basis of ``N(A^k)``."""
    idx = matrix_index(A)
    n, k = A.rows, idx.k
    Ak = A ** k
    rng = column_space_basis(Ak)
    ker = nullspace_basis(Ak)
    s = len(rng)
    P = Matrix._raw(
        tuple(tuple(v[i] for v in rng.vectors + ker.vectors) for i in range(n)), n, n
    )
    Pinv = inverse(P)
    M = Pinv @ A @ P
    C = M.submatrix(slice(0, s), slice(0, s))
    N = M.submatrix(slice(s, n), slice(s, n))
    if not (M.submatrix(slice(0, s), slice(s, n)).is_zero() and M.submatrix(slice(s, n), slice(0, s)).is_zero()):
        raise InternalInconsistency("core-nilpotent off-diagonal blocks are nonzero")
    return CoreNilpotentDecomposition(P, Pinv, C, N, s, k)
