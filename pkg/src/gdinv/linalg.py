"""Exact kernels: RREF, subspaces, inversion, projectors, matrix equations.

Elimination runs on sparse dict rows. Pivots are chosen as the first row
holding a nonzero entry in the current column, which (over an exact field)
makes every result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import NoSolution, NotComplementary, SingularMatrix
from .matrix import Matrix
from .scalar import ONE, ZERO

__all__ = [
    "RREFResult",
    "SubspaceBasis",
    "Relation",
    "Constraint",
    "MatrixEquationSystem",
    "SolutionSpace",
    "rref",
    "rank",
    "nullspace_basis",
    "column_space_basis",
    "subspace_relation",
    "same_subspace",
    "is_subspace",
    "inverse",
    "solve_matrix_equations",
    "oblique_projector",
]


def _gauss_jordan(rows: list[dict], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to RREF over the first ``ncols`` columns.

    Rows are dicts ``{col: nonzero}``; keys beyond ``ncols`` ride along
    (augmented columns). Returns pivot columns; pivot rows are moved to
    the front in pivot order.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if c in rows[i]:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        p = prow[c]
        if p != ONE:
            inv = ONE / p
            prow = {k: v * inv for k, v in prow.items()}
            rows[r] = prow
        items = list(prow.items())
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row.get(c)
            if f is None:
                continue
            for k, v in items:
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    del row[k]
        pivots.append(c)
        r += 1
    return pivots


def _dict_rows(m: Matrix) -> list[dict]:
    return [{j: x for j, x in enumerate(row) if x} for row in m.data]


def _dense(rows: Sequence[dict], lo: int, hi: int) -> tuple:
    return tuple(tuple(row.get(j, ZERO) for j in range(lo, hi)) for row in rows)


@dataclass(frozen=True)
class RREFResult:
    R: Matrix
    pivots: tuple[int, ...]
    rank: int
    T: Matrix  # invertible, T @ M == R


def rref(m: Matrix) -> RREFResult:
    """Reduced row echelon form with a transform ``T`` such that ``T @ m == R``."""
    n, c = m.rows, m.cols
    rows = _dict_rows(m)
    for i, row in enumerate(rows):
        row[c + i] = ONE
    pivots = _gauss_jordan(rows, c)
    R = Matrix._raw(_dense(rows, 0, c), n, c)
    T = Matrix._raw(_dense(rows, c, c + n), n, n)
    return RREFResult(R, tuple(pivots), len(pivots), T)


def _pivots(m: Matrix) -> tuple[list[dict], list[int]]:
    rows = _dict_rows(m)
    return rows, _gauss_jordan(rows, m.cols)


def rank(m: Matrix) -> int:
    return len(_pivots(m)[1])


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent spanning vectors of a subspace of ``K^ambient_dim``."""

    ambient_dim: int
    vectors: tuple[tuple, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def as_matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return Matrix._raw(
            tuple(tuple(v[i] for v in self.vectors) for i in range(self.ambient_dim)),
            self.ambient_dim,
            len(self.vectors),
        )

    @classmethod
    def from_matrix_columns(cls, m: Matrix) -> "SubspaceBasis":
        """Span of the columns of ``m``, reduced to an independent subset."""
        return column_space_basis(m)


def nullspace_basis(m: Matrix) -> SubspaceBasis:
    """Basis of ``{x : m x = 0}``: one vector per free column, ascending."""
    rows, pivots = _pivots(m)
    pivot_set = set(pivots)
    vectors = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            x = rows[r].get(f)
            if x is not None:
                v[p] = -x
        vectors.append(tuple(v))
    return SubspaceBasis(m.cols, tuple(vectors))


def column_space_basis(m: Matrix) -> SubspaceBasis:
    """Pivot columns of ``m`` in pivot order."""
    _, pivots = _pivots(m)
    return SubspaceBasis(m.rows, tuple(m.column(j) for j in pivots))


class Relation(Enum):
    EQUAL = "Equal"
    FIRST_IN_SECOND = "FirstInSecond"
    SECOND_IN_FIRST = "SecondInFirst"
    INCOMPARABLE = "Incomparable"


def _contained(u: SubspaceBasis, v: SubspaceBasis) -> bool:
    if not u.vectors:
        return True
    if not v.vectors:
        return False
    vm = v.as_matrix()
    return rank(vm.hstack(u.as_matrix())) == len(v.vectors)


def subspace_relation(u: SubspaceBasis, v: SubspaceBasis) -> Relation:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")
    uv = _contained(u, v)
    vu = _contained(v, u)
    if uv and vu:
        return Relation.EQUAL
    if uv:
        return Relation.FIRST_IN_SECOND
    if vu:
        return Relation.SECOND_IN_FIRST
    return Relation.INCOMPARABLE


def is_subspace(u: SubspaceBasis, v: SubspaceBasis) -> bool:
    """``u ⊆ v``."""
    return subspace_relation(u, v) in (Relation.EQUAL, Relation.FIRST_IN_SECOND)


def same_subspace(u: SubspaceBasis, v: SubspaceBasis) -> bool:
    return subspace_relation(u, v) is Relation.EQUAL


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ValueError("inverse needs a square matrix")
    res = rref(m)
    if res.rank < m.rows:
        raise SingularMatrix(f"matrix has rank {res.rank} < {m.rows}")
    return res.T


# -- linear matrix equations -------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """``sum(L @ X @ R for L, R in terms) == rhs``."""

    terms: tuple[tuple[Matrix, Matrix], ...]
    rhs: Matrix

    @classmethod
    def simple(cls, L: Matrix, R: Matrix, rhs: Matrix) -> "Constraint":
        return cls(((L, R),), rhs)

    def residual(self, X: Matrix) -> Matrix:
        acc = self.terms[0][0] @ X @ self.terms[0][1]
        for L, R in self.terms[1:]:
            acc = acc + L @ X @ R
        return acc - self.rhs

    def holds(self, X: Matrix) -> bool:
        return self.residual(X).is_zero()


@dataclass(frozen=True)
class MatrixEquationSystem:
    shape: tuple[int, int]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        p, q = self.shape
        for con in self.constraints:
            out = con.rhs.shape
            for L, R in con.terms:
                if L.cols != p or R.rows != q or (L.rows, R.cols) != out:
                    raise ValueError(
                        f"constraint term {L.shape}·X{self.shape}·{R.shape} does not produce {out}"
                    )

    @classmethod
    def of(cls, shape, *constraints) -> "MatrixEquationSystem":
        """Build from ``Constraint`` objects or plain ``(L, R, C)`` triples."""
        cons = tuple(c if isinstance(c, Constraint) else Constraint.simple(*c) for c in constraints)
        return cls(tuple(shape), cons)

    def satisfied_by(self, X: Matrix) -> bool:
        return all(c.holds(X) for c in self.constraints)


@dataclass(frozen=True)
class SolutionSpace:
    particular: Matrix
    homogeneous: tuple[Matrix, ...]

    @property
    def unique(self) -> bool:
        return not self.homogeneous

    def member(self, coeffs: Sequence) -> Matrix:
        X = self.particular
        for c, H in zip(coeffs, self.homogeneous):
            X = X + H.scale(c)
        return X


def _vectorized_rows(system: MatrixEquationSystem) -> list[dict]:
    # vec is row-major: X[a, b] -> a*q + b; entry (i, j) of L X R has
    # coefficient L[i, a] * R[b, j] on X[a, b].
    p, q = system.shape
    rhs_col = p * q
    rows = []
    for con in system.constraints:
        out_r, out_c = con.rhs.shape
        nz_terms = []
        for L, R in con.terms:
            Lnz = [[(a, x) for a, x in enumerate(L.data[i]) if x] for i in range(L.rows)]
            Rnz = [[(b, R.data[b][j]) for b in range(R.rows) if R.data[b][j]] for j in range(R.cols)]
            nz_terms.append((Lnz, Rnz))
        for i in range(out_r):
            for j in range(out_c):
                row: dict = {}
                for Lnz, Rnz in nz_terms:
                    for a, x in Lnz[i]:
                        base = a * q
                        for b, y in Rnz[j]:
                            k = base + b
                            v = row.get(k, ZERO) + x * y
                            if v:
                                row[k] = v
                            else:
                                del row[k]
                c = con.rhs.data[i][j]
                if c:
                    row[rhs_col] = c
                if row:
                    rows.append(row)
    return rows


def solve_matrix_equations(system: MatrixEquationSystem) -> SolutionSpace:
    """All ``X`` satisfying every constraint, as particular + homogeneous span.

    The particular solution sets every free unknown to zero; the homogeneous
    basis has one member per free unknown (ascending row-major position).
    Raises :class:`NoSolution` when the stacked system is inconsistent.
    """
    p, q = system.shape
    nvars = p * q
    rows = _vectorized_rows(system)
    pivots = _gauss_jordan(rows, nvars)
    for row in rows[len(pivots):]:
        if row:
            raise NoSolution("matrix equation system is inconsistent")

    def as_matrix(vec):
        return Matrix._raw(tuple(tuple(vec[a * q + b] for b in range(q)) for a in range(p)), p, q)

    part = [ZERO] * nvars
    for r, pc in enumerate(pivots):
        part[pc] = rows[r].get(nvars, ZERO)
    pivot_set = set(pivots)
    homog = []
    for f in range(nvars):
        if f in pivot_set:
            continue
        v = [ZERO] * nvars
        v[f] = ONE
        for r, pc in enumerate(pivots):
            x = rows[r].get(f)
            if x is not None:
                v[pc] = -x
        homog.append(as_matrix(v))
    return SolutionSpace(as_matrix(part), tuple(homog))


def oblique_projector(range_basis: SubspaceBasis, null_basis: SubspaceBasis) -> Matrix:
    """The idempotent with the given range and nullspace.

    ``P = [U|W] diag(I, 0) [U|W]^{-1}`` for basis matrices ``U``, ``W``.
    """
    n = range_basis.ambient_dim
    if null_basis.ambient_dim != n:
        raise ValueError("range and nullspace live in different ambient spaces")
    r = len(range_basis)
    if r + len(null_basis) != n:
        raise NotComplementary(f"dimensions {r} + {len(null_basis)} != {n}")
    if n == 0:
        return Matrix.zeros(0, 0)
    if r == 0:
        return Matrix.zeros(n, n)
    if r == n:
        return Matrix.identity(n)
    S = range_basis.as_matrix().hstack(null_basis.as_matrix())
    try:
        Sinv = inverse(S)
    except SingularMatrix as exc:
        raise NotComplementary("subspaces intersect nontrivially") from exc
    U = range_basis.as_matrix()
    return U @ Sinv.submatrix(slice(0, r), slice(0, n))
