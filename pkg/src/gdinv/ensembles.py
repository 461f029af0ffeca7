"""Seeded generators for test matrices with prescribed rank and index.

Streams come from numpy's PCG64 seeded through ``SeedSequence([seed, *keys])``,
so ``(seed, trial)`` always yields the same numbers on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleSpec, InternalInconsistency
from .inverses import InnerParam, inner_inverse, is_inner
from .linalg import inverse, rank
from .matrix import Matrix, blockdiag
from .orders import OrderKind, relation_holds
from .scalar import gaussian
from .spectral import matrix_index

__all__ = [
    "EnsembleSpec",
    "make_rng",
    "trial_seed",
    "feasible_specs",
    "random_integer_matrix",
    "random_invertible",
    "random_nilpotent",
    "random_matrix_with_index",
    "random_inner_param",
    "random_ordered_pair_sharp",
]

DEFAULT_ENTRY_BOUND = 3
MAX_RETRIES = 64


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, keys)])))


def trial_seed(seed: int, trial: int) -> int:
    """64-bit seed of trial ``trial`` in a run seeded with ``seed``."""
    return int(np.random.SeedSequence([int(seed), int(trial)]).generate_state(1, np.uint64)[0])


def _rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return make_rng(seed_or_rng)


@dataclass(frozen=True)
class EnsembleSpec:
    n: int
    r: int   # rank of A^k
    k: int   # index
    seed: int
    entry_bound: int = DEFAULT_ENTRY_BOUND
    complex_entries: bool = False

    def validate(self) -> None:
        n, r, k = self.n, self.r, self.k
        ok = 0 <= r <= n and 0 <= k <= n and self.entry_bound >= 1
        if r == n:
            ok = ok and k == 0
        else:
            ok = ok and k >= 1 and n - r >= k
        if not ok:
            raise InfeasibleSpec(f"no {n}x{n} matrix has rank(A^k)={r} with index k={k}")


def feasible_specs(n: int) -> list[tuple[int, int]]:
    """All ``(r, k)`` pairs realizable in dimension ``n``."""
    out = [(n, 0)]
    for r in range(n - 1, -1, -1):
        for k in range(1, n - r + 1):
            out.append((r, k))
    return out


def random_integer_matrix(rng: np.random.Generator, rows: int, cols: int, bound: int,
                          complex_entries: bool = False) -> Matrix:
    re = rng.integers(-bound, bound + 1, size=(rows, cols))
    if not complex_entries:
        return Matrix(re.tolist(), rows, cols)
    im = rng.integers(-bound, bound + 1, size=(rows, cols))
    return Matrix([[gaussian(int(a), int(b)) for a, b in zip(ra, rb)] for ra, rb in zip(re, im)], rows, cols)


def random_invertible(rng: np.random.Generator, n: int, bound: int, complex_entries: bool = False) -> Matrix:
    """Rejection-sampled nonsingular integer matrix."""
    if n == 0:
        return Matrix.zeros(0, 0)
    for _ in range(MAX_RETRIES):
        M = random_integer_matrix(rng, n, n, bound, complex_entries)
        if rank(M) == n:
            return M
    raise InfeasibleSpec(f"no nonsingular {n}x{n} sample within {MAX_RETRIES} draws")


def _shift_block(m: int) -> list[list[int]]:
    return [[1 if j == i + 1 else 0 for j in range(m)] for i in range(m)]


def random_nilpotent(rng: np.random.Generator, m: int, k: int, bound: int,
                     complex_entries: bool = False) -> Matrix:
    """``m x m`` nilpotent of exact index ``k``: Jordan shifts conjugated by a random invertible."""
    if m == 0:
        return Matrix.zeros(0, 0)
    if not 1 <= k <= m:
        raise InfeasibleSpec(f"no {m}x{m} nilpotent of index {k}")
    sizes = [k]
    left = m - k
    while left:
        s = int(rng.integers(1, min(k, left) + 1))
        sizes.append(s)
        left -= s
    J = blockdiag(*(Matrix(_shift_block(s), s, s) for s in sizes))
    Q = random_invertible(rng, m, bound, complex_entries)
    return Q @ J @ inverse(Q)


def random_matrix_with_index(spec: EnsembleSpec, rng: np.random.Generator | None = None) -> Matrix:
    """``A = P blockdiag(C, N) P^-1`` with ``rank(A^k) = r`` and ``ind(A) = k`` (checked)."""
    spec.validate()
    rng = rng or make_rng(spec.seed)
    n, s, k, b, cx = spec.n, spec.r, spec.k, spec.entry_bound, spec.complex_entries
    P = random_invertible(rng, n, b, cx)
    C = random_invertible(rng, s, b, cx)
    N = random_nilpotent(rng, n - s, k, b, cx)
    A = P @ blockdiag(C, N) @ inverse(P)
    idx = matrix_index(A)
    if idx.k != k or idx.core_rank != s:
        raise InternalInconsistency(f"generated matrix has index {idx.k}, core rank {idx.core_rank}")
    return A


def random_inner_param(A: Matrix, seed_or_rng, entry_bound: int = DEFAULT_ENTRY_BOUND,
                       complex_entries: bool = False) -> InnerParam:
    rng = _rng(seed_or_rng)
    p = InnerParam(random_integer_matrix(rng, A.cols, A.rows, entry_bound, complex_entries))
    if not is_inner(A, inner_inverse(A, p)):
        raise InternalInconsistency("inner-inverse parametrization failed")
    return p


def random_ordered_pair_sharp(n: int, side: str, seed_or_rng, entry_bound: int = DEFAULT_ENTRY_BOUND,
                              sizes: tuple[int, int] | None = None) -> tuple[Matrix, Matrix]:
    """Index-<=1 pair with ``A <=# B`` (right) or ``A #<= B`` (left).

    In the basis ``S``: ``A ~ diag(D, 0, 0)`` and ``B ~ [[D, Y, 0], [0, E, 0], [0, 0, 0]]``
    (right) or its transpose pattern ``[[D, 0, 0], [Y, E, 0], [0, 0, 0]]`` (left), with
    ``D``, ``E`` invertible and ``Y`` a random coupling. ``Y = 0`` gives a pair related
    on both sides.
    """
    if n < 1:
        raise InfeasibleSpec("pairs need n >= 1")
    side = side.lower()
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    rng = _rng(seed_or_rng)
    if sizes is None:
        d = int(rng.integers(0, n + 1))
        e = int(rng.integers(0, n - d + 1))
    else:
        d, e = sizes
        if d < 0 or e < 0 or d + e > n:
            raise InfeasibleSpec(f"block sizes {sizes} do not fit n={n}")
    z = n - d - e
    S = random_invertible(rng, n, entry_bound)
    D = random_invertible(rng, d, entry_bound)
    E = random_invertible(rng, e, entry_bound)
    Y = random_integer_matrix(rng, d, e, entry_bound) if side == "right" else random_integer_matrix(rng, e, d, entry_bound)
    zeros = Matrix.zeros
    Ap = blockdiag(D, zeros(e + z, e + z))
    if side == "right":
        top = D.hstack(Y, zeros(d, z))
        mid = zeros(e, d).hstack(E, zeros(e, z))
    else:
        top = D.hstack(zeros(d, e), zeros(d, z))
        mid = Y.hstack(E, zeros(e, z))
    bottom = zeros(z, n)
    Bp = top.vstack(mid, bottom)
    Sinv = inverse(S)
    A = S @ Ap @ Sinv
    B = S @ Bp @ Sinv
    kind = OrderKind.RIGHT_SHARP if side == "right" else OrderKind.LEFT_SHARP
    if not relation_holds(A, B, kind):
        raise InternalInconsistency("generated pair is not sharp-ordered")
    return A, B
