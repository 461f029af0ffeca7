"""Command-line front end.

Verbs: ``index``, ``decompose``, ``compute``, ``verify``, ``order``, ``gen``.
Matrices are read and written in the JSON format of :mod:`gdinv.matrix`.
Exit codes: 0 success, 1 a verification clause (or relation) failed,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ensembles import (
    EnsembleSpec,
    make_rng,
    random_inner_param,
    random_matrix_with_index,
    random_ordered_pair_sharp,
)
from .errors import GDInvError
from .inverses import (
    CompositeKind,
    GDrazinParam,
    InnerParam,
    composite_inverse,
    drazin,
    g_drazin,
    gd1,
    inner_inverse,
    moore_penrose,
    one_gd,
)
from .matrix import Matrix, MatrixFormatError
from .oracles import characterization_report, check_gd1_basic
from .orders import OrderKind, OrderWitness, order_characterization_report, relation_holds, sharp_to_gd1_witness
from .spectral import core_nilpotent, matrix_index
from .suites import SUITE_NAMES, run_suite, run_trial

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

COMPUTE_KINDS = ["mp", "drazin", "gdrazin", "gd1", "1gd"] + [
    k.value for k in CompositeKind
]


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _load(path: str) -> Matrix:
    try:
        with open(path, encoding="utf-8") as fh:
            return Matrix.from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (MatrixFormatError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj))


def _require_source(args, flag: str, what: str) -> None:
    if getattr(args, flag) is None and args.seed is None:
        raise InputError(f"--kind {args.kind} needs --{flag.replace('_', '-')} or --seed to pick the {what}")


def _inner(A: Matrix, args, rng) -> Matrix:
    if args.inner:
        return _load(args.inner)
    if args.z:
        return inner_inverse(A, InnerParam(_load(args.z)))
    return inner_inverse(A, random_inner_param(A, rng))


def _gdrazin(A: Matrix, args, rng) -> Matrix:
    if args.gd:
        return _load(args.gd)
    cnd = core_nilpotent(A)
    if args.zn:
        return g_drazin(A, GDrazinParam(cnd, InnerParam(_load(args.zn))))
    return g_drazin(A, GDrazinParam(cnd, random_inner_param(cnd.N, rng)))


def cmd_index(args) -> int:
    idx = matrix_index(_load(args.matrix))
    _emit({"index": idx.k, "rankChain": list(idx.rank_chain)})
    return EXIT_OK


def cmd_decompose(args) -> int:
    cnd = core_nilpotent(_load(args.matrix))
    _emit({"s": cnd.s, "k": cnd.k, "P": cnd.P.to_dict(), "Pinv": cnd.Pinv.to_dict(),
           "C": cnd.C.to_dict(), "N": cnd.N.to_dict()})
    return EXIT_OK


def cmd_compute(args) -> int:
    A = _load(args.matrix)
    if not A.is_square:
        raise InputError(f"expected a square matrix, got {A.rows}x{A.cols}")
    kind = args.kind
    rng = make_rng(args.seed) if args.seed is not None else None
    if kind == "mp":
        X = moore_penrose(A)
    elif kind == "drazin":
        X = drazin(A)
    elif kind == "gdrazin":
        if args.zn is None and args.seed is None:
            raise InputError("--kind gdrazin needs --zn or --seed")
        X = _gdrazin(A, args, rng)
    elif kind in ("gd1", "1gd"):
        missing = (args.inner is None and args.z is None) or (args.gd is None and args.zn is None)
        if missing and args.seed is None:
            raise InputError(f"--kind {kind} needs --inner/--z and --gd/--zn, or --seed")
        Am = _inner(A, args, rng)
        Agd = _gdrazin(A, args, rng)
        X = gd1(A, Agd, Am) if kind == "gd1" else one_gd(A, Am, Agd)
    else:
        ck = CompositeKind(kind)
        aux = None
        if ck in (CompositeKind.D1, CompositeKind.ONE_D, CompositeKind.ONE_MP, CompositeKind.MP1):
            if args.inner is None and args.z is None:
                _require_source(args, "inner", "inner inverse")
            aux = _inner(A, args, rng)
        elif ck in (CompositeKind.TWO_MP, CompositeKind.MP2, CompositeKind.C2MP):
            if args.aux:
                aux = _load(args.aux)
            else:
                _require_source(args, "aux", "outer inverse")
                G = _inner(A, args, rng)
                aux = G @ A @ G  # every G A G with G inner is outer
        X = composite_inverse(A, ck, aux)
    print(X.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite is None:
        if not (args.matrix and args.inner and args.gd):
            raise InputError("verify needs --suite, or --matrix with --inner and --gd")
        A, Am, Agd = _load(args.matrix), _load(args.inner), _load(args.gd)
        basic = check_gd1_basic(A, Am, Agd, args.side)
        out = {"basic": basic.to_dict()}
        ok = basic.passed
        if args.candidate:
            rep = characterization_report(A, _load(args.candidate), Am, Agd, args.side)
            out["characterization"] = rep.to_dict()
            out["allEquivalent"] = rep.all_equivalent
            out["allTrue"] = rep.all_true
            ok = ok and rep.all_true
        _emit(out)
        return EXIT_OK if ok else EXIT_FAIL
    if args.seed is None:
        raise InputError("verify --suite needs an explicit --seed")
    if args.trials < 1 or args.jobs < 1 or any(d < 1 for d in args.dim):
        raise InputError("--trials, --jobs and --dim must be positive")
    if args.replay is not None:
        failed = run_trial(args.suite, args.seed, args.replay, args.dim, args.complex)
        _emit({"suite": args.suite, "trial": args.replay, "failedClauses": sorted(set(failed))})
        return EXIT_FAIL if failed else EXIT_OK
    summary = run_suite(args.suite, args.trials, args.dim, args.seed, args.jobs, args.complex)
    _emit(summary.to_dict())
    return EXIT_OK if summary.passed else EXIT_FAIL


def cmd_order(args) -> int:
    A, B = _load(args.a), _load(args.b)
    kind = OrderKind(args.kind)
    witness = None
    if kind not in (OrderKind.LEFT_SHARP, OrderKind.RIGHT_SHARP):
        if args.inner and args.gd:
            witness = OrderWitness(_load(args.inner), _load(args.gd))
        elif args.solve_witness:
            witness = sharp_to_gd1_witness(A, B)
            if witness is None:
                _emit({"relation": kind.value, "holds": False, "witness": None})
                return EXIT_FAIL
        else:
            raise InputError(f"{kind.value} needs --inner and --gd, or --solve-witness")
    holds = relation_holds(A, B, kind, witness)
    out = {"relation": kind.value, "holds": holds}
    if witness is not None:
        out["witness"] = {"inner": witness.Ainner.to_dict(), "gd": witness.Agd.to_dict()}
        if args.report and kind in (OrderKind.GD1, OrderKind.ONE_GD):
            rep = order_characterization_report(A, B, kind.value, witness)
            out["statements"] = rep.statements
            out["clauses"] = rep.clauses
    _emit(out)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.pair:
        A, B = random_ordered_pair_sharp(args.n, args.pair, args.seed, args.entry_bound)
        _emit({"A": A.to_dict(), "B": B.to_dict()})
        return EXIT_OK
    if args.r is None or args.k is None:
        raise InputError("gen needs --r and --k (or --pair)")
    spec = EnsembleSpec(args.n, args.r, args.k, args.seed, args.entry_bound, args.complex)
    print(random_matrix_with_index(spec).to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gdinv", description="Exact GD1/1GD generalized inverses.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("index", help="index and rank chain of a square matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("decompose", help="core-nilpotent decomposition")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compute", help="compute a generalized inverse")
    p.add_argument("--kind", required=True, choices=COMPUTE_KINDS)
    p.add_argument("--matrix", required=True)
    p.add_argument("--inner", help="inner inverse of A")
    p.add_argument("--gd", help="G-Drazin inverse of A")
    p.add_argument("--z", help="parameter Z selecting the inner inverse")
    p.add_argument("--zn", help="parameter selecting N- in the G-Drazin family")
    p.add_argument("--aux", help="outer inverse for 2mp/mp2/c2mp")
    p.add_argument("--seed", type=int, help="sample missing family members from this seed")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a seeded suite, or check one triple")
    p.add_argument("--suite", choices=SUITE_NAMES)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--complex", action="store_true", help="draw Gaussian-integer entries")
    p.add_argument("--replay", type=int, metavar="TRIAL", help="rerun a single trial")
    p.add_argument("--matrix")
    p.add_argument("--inner")
    p.add_argument("--gd")
    p.add_argument("--candidate", help="matrix tested against the characterizations")
    p.add_argument("--side", choices=["gd1", "1gd"], default="gd1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("order", help="test a matrix relation A <= B")
    p.add_argument("--kind", required=True, choices=[k.value for k in OrderKind])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--inner")
    p.add_argument("--gd")
    p.add_argument("--solve-witness", action="store_true",
                   help="solve for the inner inverse witness (index <= 1)")
    p.add_argument("--report", action="store_true", help="include statements (i)-(v)")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("gen", help="generate a seeded random matrix or ordered pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--complex", action="store_true")
    p.add_argument("--pair", choices=["left", "right"], help="emit a sharp-ordered pair")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GDInvError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"gdinv: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
