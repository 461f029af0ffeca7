"""Seeded verification suites replaying the theorems over random ensembles.

A suite is a function ``trial(rng, n, r, k, ...) -> list[str]`` returning
the names of failed clauses (empty on success). :func:`run_suite` drives
trials over dimensions and feasible ``(rank, index)`` pairs and aggregates a
summary that does not depend on the number of worker processes.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import fixtures
from .ensembles import (
    EnsembleSpec,
    feasible_specs,
    make_rng,
    random_integer_matrix,
    random_inner_param,
    random_matrix_with_index,
    random_ordered_pair_sharp,
    trial_seed,
)
from .errors import GDInvError, NoSolution
from .inverses import (
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
from .linalg import Constraint, MatrixEquationSystem, solve_matrix_equations
from .matrix import Matrix
from .oracles import (
    BCSpec,
    bc_inverse_solve,
    characterization_report,
    check_gd1_basic,
    gd1_geometric_solve,
    is_bc_inverse,
    rank_equation_witness,
    side_inverse,
)
from .orders import (
    OrderKind,
    OrderWitness,
    b_block_criterion,
    order_characterization_report,
    relation_holds,
    sharp_to_gd1_witness,
)
from .spectral import core_nilpotent, matrix_index

__all__ = [
    "SUITES",
    "SUITE_NAMES",
    "SuiteSummary",
    "run_suite",
    "run_trial",
    "characterization_trial",
    "decomposition_trial",
    "order_trial",
    "antisymmetry_trial",
    "transitivity_trial",
    "inverse_axioms_trial",
    "drazin_oracle_trial",
    "drazin_by_linear_system",
    "worked_example_checks",
]


def _random_family_members(A: Matrix, rng, complex_entries=False):
    Am = inner_inverse(A, random_inner_param(A, rng, complex_entries=complex_entries))
    cnd = core_nilpotent(A)
    Zn = random_inner_param(cnd.N, rng, complex_entries=complex_entries)
    Agd = g_drazin(A, GDrazinParam(cnd, Zn))
    return Am, Agd, cnd


def _fail(failures: list, name: str, ok: bool) -> None:
    if not ok:
        failures.append(name)


def characterization_trial(rng, n, r, k, sides=("gd1", "1gd"), complex_entries=False) -> list[str]:
    """Every clause of the basic, characterization, rank-equation, (B,C) and geometric theorems."""
    A = random_matrix_with_index(EnsembleSpec(n, r, k, 0, complex_entries=complex_entries), rng)
    Am, Agd, _ = _random_family_members(A, rng, complex_entries)
    failures: list[str] = []
    for side in sides:
        X = side_inverse(A, Am, Agd, side)
        basic = check_gd1_basic(A, Am, Agd, side)
        failures += basic.failed
        rep = characterization_report(A, X, Am, Agd, side)
        failures += [name for name, ok in {**rep.clauses, **rep.statements}.items() if not ok]
        wit = rank_equation_witness(A, Am, Agd, side)
        failures += [name for name, ok in wit.clauses.items() if not ok]
        spec = BCSpec(Agd @ A, A @ Am) if side == "gd1" else BCSpec(Am @ A, A @ Agd)
        _fail(failures, f"{side}.bc.is_bc_inverse", is_bc_inverse(A, spec, X))
        _fail(failures, f"{side}.bc.solve", bc_inverse_solve(A, spec) == X)
        try:
            geo = gd1_geometric_solve(A, Am, Agd, side)
            _fail(failures, f"{side}.eq2.solve", geo == X)
        except GDInvError:
            failures.append(f"{side}.eq2.solve")
        # negative control: another inner inverse is not this GD1/1GD inverse
        other = inner_inverse(A, random_inner_param(A, rng))
        neg = characterization_report(A, other, Am, Agd, side)
        _fail(failures, f"{side}.negative.equivalent", neg.all_equivalent)
        if other != X:
            _fail(failures, f"{side}.negative.separated", not any(neg.statements.values()))
    return failures


def _decomposition_V(rng, cnd, side, mode, right, left):
    s, m = cnd.s, cnd.n - cnd.s
    shape = (s, m) if side == "gd1" else (m, s)
    if mode == "zero":
        return Matrix.zeros(*shape)
    V0 = random_integer_matrix(rng, *shape, 3)
    if mode == "absorbed":
        # V (I - NN⁻) = 0  resp.  (I - N⁻N) V = 0, with V itself nonzero in general
        I = Matrix.identity(m)
        return V0 @ (I - right) if side == "gd1" else (I - left) @ V0
    return V0


def decomposition_trial(rng, n, r, k, mode="random", complex_entries=False) -> list[str]:
    """Outputs of both block formulas are {1,2}-inverses obeying their anchor identity,
    and are G-Drazin inverses exactly when the off-diagonal block vanishes."""
    A = random_matrix_with_index(EnsembleSpec(n, r, k, 0, complex_entries=complex_entries), rng)
    cnd = core_nilpotent(A)
    m = cnd.n - cnd.s
    I = Matrix.identity(m)
    failures: list[str] = []
    for side in ("gd1", "1gd"):
        Zn = random_inner_param(cnd.N, rng)
        Nm = inner_inverse(cnd.N, Zn)
        right = I - cnd.N @ Nm
        left = I - Nm @ cnd.N
        V = _decomposition_V(rng, cnd, side, mode, right, left)
        L = random_integer_matrix(rng, m, m, 3)
        p = Gd1BlockParam(V, L, Zn)
        Agd = g_drazin(A, GDrazinParam(cnd, Zn))
        if side == "gd1":
            X = gd1_from_decomposition(cnd, p)
            off_zero = (V @ right).is_zero()
            _fail(failures, "gd1.deco.anchor", X @ A == Agd @ A)
            _fail(failures, "gd1.deco.is_gd1", gd1(A, Agd, X) == X)
        else:
            X = one_gd_from_decomposition(cnd, p)
            off_zero = (left @ V).is_zero()
            _fail(failures, "1gd.deco.anchor", A @ X == A @ Agd)
            _fail(failures, "1gd.deco.is_1gd", one_gd(A, X, Agd) == X)
        _fail(failures, f"{side}.deco.inner", A @ X @ A == A)
        _fail(failures, f"{side}.deco.outer", X @ A @ X == X)
        three, two = is_g_drazin(A, X, cnd.k)
        _fail(failures, f"{side}.deco.gd_flags_agree", three == two)
        _fail(failures, f"{side}.deco.gd_iff_offdiag_zero", three == off_zero)
        if mode in ("zero", "absorbed"):
            _fail(failures, f"{side}.deco.gd_when_offdiag_zero", three)
    return failures


_ORDER_FOR = {"right": (OrderKind.GD1, OrderKind.D_MINUS, OrderKind.RIGHT_SHARP, "gd1"),
              "left": (OrderKind.ONE_GD, OrderKind.MINUS_D, OrderKind.LEFT_SHARP, "1gd")}


def order_trial(rng, n, side="right") -> list[str]:
    """Sharp pair -> witness -> GD1 (1GD) order, the D-minus chain, (i)-(v) agreement,
    the block criterion, and the converse on an opposite-side pair."""
    rel, chain, sharp, oside = _ORDER_FOR[side]
    A, B = random_ordered_pair_sharp(n, side, rng)
    failures: list[str] = []
    w = sharp_to_gd1_witness(A, B)
    if w is None:
        return [f"{oside}.order.witness_found"]
    holds = relation_holds(A, B, rel, w)
    _fail(failures, f"{oside}.order.holds", holds)
    if holds:
        _fail(failures, f"{oside}.order.chain", relation_holds(A, B, chain, w))
    rep = order_characterization_report(A, B, oside, w)
    _fail(failures, f"{oside}.order.statements_agree", rep.all_agree)
    _fail(failures, f"{oside}.order.statements_true", all(rep.statements.values()))
    failures += [name for name, ok in rep.clauses.items() if not ok]
    _fail(failures, f"{oside}.order.b_block", b_block_criterion(A, B, oside, w))

    # converse direction on a pair ordered on the other side only
    other = "left" if side == "right" else "right"
    A2, B2 = random_ordered_pair_sharp(n, other, rng)
    w2 = sharp_to_gd1_witness(A2, B2)
    gd_holds = w2 is not None and relation_holds(A2, B2, rel, w2)
    _fail(failures, f"{oside}.order.equivalence", gd_holds == relation_holds(A2, B2, sharp))
    if w2 is not None:
        rep2 = order_characterization_report(A2, B2, oside, w2)
        _fail(failures, f"{oside}.order.statements_agree_unrelated", rep2.all_agree)
        _fail(failures, f"{oside}.order.b_block_iff", b_block_criterion(A2, B2, oside, w2) == gd_holds)
        if relation_holds(A2, B2, rel, w2):
            _fail(failures, f"{oside}.order.sharp_implied", relation_holds(A2, B2, sharp))
    return failures


def antisymmetry_trial(rng, n, side="right") -> list[str]:
    """Mutually related pairs (GD1/1GD order both ways) coincide."""
    rel = _ORDER_FOR[side][0]
    d = int(rng.integers(0, n + 1))
    A, B = random_ordered_pair_sharp(n, side, rng, sizes=(d, 0))
    failures: list[str] = []
    w_ab, w_ba = sharp_to_gd1_witness(A, B), sharp_to_gd1_witness(B, A)
    both = (w_ab is not None and w_ba is not None
            and relation_holds(A, B, rel, w_ab) and relation_holds(B, A, rel, w_ba))
    _fail(failures, "antisymmetry.mutual", both)
    _fail(failures, "antisymmetry.equal", (not both) or A == B)
    # a strictly related pair is not related backwards
    e = int(rng.integers(1, n + 1))
    A2, B2 = random_ordered_pair_sharp(n, side, rng, sizes=(int(rng.integers(0, n - e + 1)), e))
    wb = sharp_to_gd1_witness(B2, A2)
    back = wb is not None and relation_holds(B2, A2, rel, wb)
    _fail(failures, "antisymmetry.strict", not back)
    return failures


def transitivity_trial(rng, n, side="right") -> list[str]:
    """``A <= B <= C`` built from nested blocks implies ``A <= C``."""
    from .ensembles import random_invertible
    from .linalg import inverse
    from .matrix import blockdiag

    rel = _ORDER_FOR[side][0]
    sizes = sorted(int(x) for x in rng.integers(0, n + 1, size=2))
    d, e = sizes[0], sizes[1] - sizes[0]
    f = n - d - e
    S = random_invertible(rng, n, 3)
    Sinv = inverse(S)
    D, E, F = (random_invertible(rng, q, 3) for q in (d, e, f))
    Z = Matrix.zeros
    A = S @ blockdiag(D, Z(e + f, e + f)) @ Sinv
    B = S @ blockdiag(D, E, Z(f, f)) @ Sinv
    C = S @ blockdiag(D, E, F) @ Sinv
    failures: list[str] = []
    wab, wbc, wac = sharp_to_gd1_witness(A, B), sharp_to_gd1_witness(B, C), sharp_to_gd1_witness(A, C)
    ab = wab is not None and relation_holds(A, B, rel, wab)
    bc = wbc is not None and relation_holds(B, C, rel, wbc)
    ac = wac is not None and relation_holds(A, C, rel, wac)
    _fail(failures, "transitivity.premises", ab and bc)
    _fail(failures, "transitivity.conclusion", ac or not (ab and bc))
    _fail(failures, "reflexivity", relation_holds(A, A, rel, OrderWitness(moore_penrose(A), g_drazin(A))))
    return failures


def drazin_by_linear_system(A: Matrix) -> Matrix:
    """Drazin inverse as the unique solution of a linear matrix system.

    ``XAX = X`` is replaced by the linear ``R(X) ⊆ R(A^k)``, encoded with the
    orthogonal projector ``A^k (A^k)†``; together with ``AX = XA`` and
    ``X A^(k+1) = A^k`` this forces ``XAX = X``, which is asserted afterwards.
    """
    n = A.rows
    k = matrix_index(A).k
    I = Matrix.identity(n)
    Zero = Matrix.zeros(n, n)
    Ak = A ** k
    Pi = Ak @ moore_penrose(Ak)
    system = MatrixEquationSystem(
        (n, n),
        (
            Constraint(((A, I), (-I, A)), Zero),
            Constraint.simple(I, Ak @ A, Ak),
            Constraint.simple(I - Pi, I, Zero),
        ),
    )
    sol = solve_matrix_equations(system)
    if not sol.unique:
        raise NoSolution("Drazin system is not uniquely solvable")
    X = sol.particular
    if X @ A @ X != X:
        raise NoSolution("Drazin system solution is not an outer inverse")
    return X


def drazin_oracle_trial(rng, n, r, k, complex_entries=False) -> list[str]:
    A = random_matrix_with_index(EnsembleSpec(n, r, k, 0, complex_entries=complex_entries), rng)
    try:
        ok = drazin(A) == drazin_by_linear_system(A)
    except GDInvError:
        ok = False
    return [] if ok else ["drazin.oracle"]


def inverse_axioms_trial(rng, n, r, k, complex_entries=False) -> list[str]:
    A = random_matrix_with_index(EnsembleSpec(n, r, k, 0, complex_entries=complex_entries), rng)
    failures: list[str] = []
    G = moore_penrose(A)
    _fail(failures, "mp.1", A @ G @ A == A)
    _fail(failures, "mp.2", G @ A @ G == G)
    _fail(failures, "mp.3", (A @ G).H == A @ G)
    _fail(failures, "mp.4", (G @ A).H == G @ A)
    Zp = random_inner_param(A, rng, complex_entries=complex_entries)
    X = inner_inverse(A, Zp)
    _fail(failures, "inner.member", A @ X @ A == A)
    _fail(failures, "inner.zero_is_mp", inner_inverse(A, InnerParam.zero(A)) == G)
    _fail(failures, "inner.onto", inner_inverse(A, InnerParam(X)) == X)
    D = drazin(A)
    kk = matrix_index(A).k
    _fail(failures, "drazin.outer", D @ A @ D == D)
    _fail(failures, "drazin.commute", A @ D == D @ A)
    _fail(failures, "drazin.power", D @ A ** (kk + 1) == A ** kk)
    if kk <= 1:
        _fail(failures, "drazin.inner_index_le1", A @ D @ A == A)
    Am, Agd, cnd = _random_family_members(A, rng, complex_entries)
    three, two = is_g_drazin(A, Agd, kk)
    _fail(failures, "gd.member", three and two)
    # is every G-Drazin inverse of block form? read N⁻ back and reassemble
    _, _, _, Nm = cnd.blocks_of(Agd)
    _fail(failures, "gd.block_form", g_drazin(A, GDrazinParam(cnd, InnerParam(Nm))) == Agd)
    for cand in (X, random_integer_matrix(rng, n, n, 2), Agd + (A @ A - A) if n else Agd):
        t3, t2 = is_g_drazin(A, cand, kk)
        _fail(failures, "gd.flags_agree", t3 == t2)
    _fail(failures, "composite.dmp", composite_inverse(A, CompositeKind.DMP) == D @ A @ G)
    _fail(failures, "composite.cmp", composite_inverse(A, CompositeKind.CMP) == G @ A @ D @ A @ G)
    outer = X @ A @ X
    for kind, aux in ((CompositeKind.ONE_MP, X), (CompositeKind.MP1, X), (CompositeKind.D1, X),
                      (CompositeKind.ONE_D, X), (CompositeKind.TWO_MP, outer),
                      (CompositeKind.MP2, outer), (CompositeKind.C2MP, outer)):
        Y = composite_inverse(A, kind, aux)
        _fail(failures, f"composite.{kind.value}.outer", Y @ A @ Y == Y)
    return failures


def worked_example_checks() -> dict[str, bool]:
    """The two worked examples, entry by entry."""
    f = fixtures
    A1, G1, D1, X1 = f.A1, f.G1, f.D1, f.X1
    A2, G2, D2, X2 = f.A2, f.G2, f.D2, f.X2
    c: dict[str, bool] = {}
    c["ex1.index"] = matrix_index(A1).k == 2
    c["ex1.gd1"] = gd1(A1, D1, G1) == X1
    c["ex1.mp"] = moore_penrose(A1) == f.A1_MP
    c["ex1.drazin"] = drazin(A1) == f.A1_DRAZIN
    for kind in (CompositeKind.DMP, CompositeKind.MPD, CompositeKind.CMP):
        c[f"ex1.{kind.value}"] = composite_inverse(A1, kind) == f.A1_DRAZIN
    c["ex1.D1.gd"] = is_g_drazin(A1, D1) == (True, True)
    c["ex1.G1.inner"] = A1 @ G1 @ A1 == A1
    c["ex2.index"] = matrix_index(A2).k == 2
    c["ex2.D2.gd"] = is_g_drazin(A2, D2) == (True, True)
    c["ex2.G2.inner"] = A2 @ G2 @ A2 == A2
    c["ex2.1gd"] = one_gd(A2, G2, D2) == X2
    return c


def _worked_trial(rng, n, r, k) -> list[str]:
    return [name for name, ok in worked_example_checks().items() if not ok]


def _gd1_char(rng, n, r, k, complex_entries=False):
    return characterization_trial(rng, n, r, k, ("gd1",), complex_entries)


def _1gd_char(rng, n, r, k, complex_entries=False):
    return characterization_trial(rng, n, r, k, ("1gd",), complex_entries)


def _decomp(rng, n, r, k, complex_entries=False, trial=0):
    mode = ("random", "zero", "absorbed")[trial % 3]
    return decomposition_trial(rng, n, r, k, mode, complex_entries)


def _orders(rng, n, r, k, complex_entries=False, trial=0):
    side = ("right", "left")[trial % 2]
    out = order_trial(rng, n, side)
    if trial % 5 == 0:
        out += antisymmetry_trial(rng, n, side)
        out += transitivity_trial(rng, n, side)
    return out


def _axioms(rng, n, r, k, complex_entries=False):
    return inverse_axioms_trial(rng, n, r, k, complex_entries) + drazin_oracle_trial(rng, n, r, k, complex_entries)


# name -> (trial function, whether it takes the trial index)
SUITES: dict[str, tuple[Callable, bool]] = {
    "gd1-characterizations": (_gd1_char, False),
    "1gd-characterizations": (_1gd_char, False),
    "characterizations": (characterization_trial, False),
    "decomposition-formulas": (_decomp, True),
    "orders": (_orders, True),
    "inverse-axioms": (_axioms, False),
    "paper-examples": (_worked_trial, False),
    "drazin-oracle": (drazin_oracle_trial, False),
}


#: suites exposed on the command line; the others (``characterizations`` runs both
#: sides per trial, ``drazin-oracle`` the linear-system cross-check) serve the tests
SUITE_NAMES = [
    "gd1-characterizations",
    "1gd-characterizations",
    "decomposition-formulas",
    "orders",
    "inverse-axioms",
    "paper-examples",
]


@dataclass(frozen=True)
class SuiteSummary:
    suite: str
    trials: int
    failures: int
    first_failure_seed: int | None
    first_failure_trial: int | None
    failed_clauses: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "firstFailureSeed": self.first_failure_seed,
            "firstFailureTrial": self.first_failure_trial,
            "failedClauses": dict(sorted(self.failed_clauses.items())),
        }


def _trial_shape(t: int, dims: list[int]) -> tuple[int, int, int]:
    n = dims[t % len(dims)]
    specs = feasible_specs(n)
    r, k = specs[(t // len(dims)) % len(specs)]
    return n, r, k


def run_trial(suite: str, seed: int, t: int, dims: list[int], complex_entries: bool = False,
              replay_seed: int | None = None) -> list[str]:
    fn, wants_index = SUITES[suite]
    n, r, k = _trial_shape(t, dims)
    ts = trial_seed(seed, t) if replay_seed is None else replay_seed
    rng = make_rng(ts)
    kwargs = {"complex_entries": complex_entries} if suite != "paper-examples" else {}
    if wants_index:
        kwargs["trial"] = t
    try:
        return fn(rng, n, r, k, **kwargs)
    except GDInvError as exc:
        return [f"error.{type(exc).__name__}"]


def _run_chunk(args) -> list[tuple[int, list[str]]]:
    suite, seed, ts, dims, cx = args
    return [(t, run_trial(suite, seed, t, dims, cx)) for t in ts]


def run_suite(suite: str, trials: int, dims: list[int], seed: int, jobs: int = 1,
              complex_entries: bool = False) -> SuiteSummary:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if suite == "paper-examples":
        trials = min(trials, 1) or 1
    indices = list(range(trials))
    if jobs <= 1:
        results = _run_chunk((suite, seed, indices, dims, complex_entries))
    else:
        chunks = [indices[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [x for part in pool.map(_run_chunk, [(suite, seed, c, dims, complex_entries) for c in chunks])
                       for x in part]
    results.sort(key=lambda x: x[0])
    failing = [(t, f) for t, f in results if f]
    counts: Counter = Counter(name for _, f in failing for name in set(f))
    first = failing[0][0] if failing else None
    return SuiteSummary(
        suite,
        trials,
        len(failing),
        trial_seed(seed, first) if first is not None else None,
        first,
        dict(counts),
    )
