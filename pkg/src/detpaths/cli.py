"""
Command-line front end.

Exit codes: 0 success or passing verdict, 1 failing verdict or route
disagreement, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import islice
from pathlib import Path

from . import identities
from .exactpoly import to_text
from .jacobitrudi import genericize, jt_indices, jt_matrix
from .linalg import det, from_json
from .overlays import (
    class_overlays,
    dodgson_configuration,
    trail_from,
    verify_dodgson_bijection,
)
from .paths import (
    count_signed_tuples,
    enumerate_signed_tuples,
    is_nonintersecting,
    tableau_to_paths,
)
from .shapes import format_shape, parse_shape
from .svg import overlay_svg, paths_svg
from .tableaux import BudgetExceeded, enumerate_ssyt, skew_schur

BUDGET_ENV = "DETPATHS_BUDGET"
DEFAULT_BUDGET = 200_000

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{BUDGET_ENV} must be positive")
    return value


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _shape(text: str):
    try:
        return parse_shape(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_budgets(p: argparse.ArgumentParser, *which: str):
    for name in which:
        p.add_argument(f"--max-{name}", type=_positive, default=None, help=f"budget for {name} (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")


def _budget(args, name: str) -> int:
    v = getattr(args, f"max_{name}", None)
    return v if v is not None else default_budget()


# schur / jt ------------------------------------------------------------------------


def cmd_schur(args) -> int:
    sh, n = args.shape, args.n
    budget = _budget(args, "tableaux")
    out = {}
    if args.route in ("tableaux", "both"):
        out["tableaux"] = skew_schur(sh, n, budget)
    if args.route in ("jacobitrudi", "both"):
        out["jacobitrudi"] = det(jt_matrix(sh, n))
    first = next(iter(out.values()))
    print(to_text(first))
    if args.route == "both":
        agree = out["tableaux"] == out["jacobitrudi"]
        print(f"routes agree: {'pass' if agree else 'fail'}")
        if not agree:
            print(f"jacobitrudi: {to_text(out['jacobitrudi'])}")
            return EXIT_FAIL
    return EXIT_OK


def _h_label(r: int) -> str:
    return "0" if r < 0 else "1" if r == 0 else f"h{r}"


def cmd_jt(args) -> int:
    sh, n = args.shape, args.n
    if args.action == "show":
        if args.generic:
            rows = genericize(sh, require_distinct=False).to_json()
        elif args.expand:
            rows = jt_matrix(sh, n).to_json()
        else:
            rows = [[_h_label(r) for r in row] for row in jt_indices(sh)]
        for row in rows:
            print("[" + ", ".join(str(v) for v in row) + "]")
        return EXIT_OK
    lhs = skew_schur(sh, n, _budget(args, "tableaux"))
    rhs = det(jt_matrix(sh, n))
    ok = lhs == rhs
    print(f"{format_shape(sh)} n={n}: tableau sum {'equals' if ok else 'differs from'} det(jt)")
    return EXIT_OK if ok else EXIT_FAIL


# verify / fuzz ---------------------------------------------------------------------


PARAM_FLAGS = ("m", "n", "k", "j", "R", "C", "I", "fixed")


def _identity_params(args) -> dict:
    out = {}
    for key in PARAM_FLAGS:
        v = getattr(args, f"p_{key}", None)
        if v is not None:
            out[key] = v
    return out


def _add_identity_args(p: argparse.ArgumentParser):
    p.add_argument("identity", help="identity name; see 'verify --list'", nargs="?")
    p.add_argument("--m", dest="p_m", type=int)
    p.add_argument("--n", dest="p_n", type=int)
    p.add_argument("--k", dest="p_k", type=int)
    p.add_argument("--j", dest="p_j", type=int)
    for key in ("R", "C", "I", "fixed"):
        p.add_argument(f"--{key}", dest=f"p_{key}", type=_ints, help="comma-separated 1-based indices")
    p.add_argument("--lambda", dest="lam", type=_ints, help="partition for dodgson-schur and dodgson-bijection")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutant", action="store_true", help="run the sign-flipped variant (harness self-test)")
    p.add_argument("--list", action="store_true", help="list identity names and exit")


def _emit(verdict) -> int:
    print(verdict.to_json())
    return EXIT_OK if verdict.passed else EXIT_FAIL


def _run_verdict(args, route: str):
    name = args.identity
    if args.list:
        print("\n".join(identities.identity_names() + ["dodgson-bijection"]))
        return None
    if name is None:
        raise UsageError("an identity name is required")
    if name in ("dodgson-schur", "dodgson-bijection"):
        if args.lam is None or args.p_n is None:
            raise UsageError(f"{name} needs --lambda and --n")
        if name == "dodgson-schur":
            return identities.check_dodgson_schur(args.lam, args.p_n, _budget(args, "tableaux"))
        return verify_dodgson_bijection(args.lam, args.p_n, _budget(args, "overlays"))
    if name not in identities.REGISTRY:
        raise UsageError(f"unknown identity {name!r}; known: {', '.join(identities.identity_names())}")
    params = _identity_params(args)
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    try:
        if getattr(args, "matrix", None):
            mats = [from_json(text) for text in args.matrix]
            return identities.check_matrices(name, mats, params)
        if route == "symbolic":
            return identities.symbolic(name, params, args.seed)
        return identities.fuzz(name, params, args.trials, args.seed, mutant=args.mutant)
    except (ValueError, KeyError, IndexError) as e:
        raise UsageError(str(e)) from None


def cmd_verify(args) -> int:
    v = _run_verdict(args, args.route)
    return EXIT_OK if v is None else _emit(v)


def cmd_fuzz(args) -> int:
    v = _run_verdict(args, "fuzz")
    return EXIT_OK if v is None else _emit(v)


# enumerate / render ------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.subject == "tableaux":
        budget = _budget(args, "tableaux")
        count = 0
        for T in enumerate_ssyt(args.shape, args.n):
            count += 1
            if count > budget:
                raise BudgetExceeded(f"more than {budget} tableaux (raise --max-tableaux)")
            if not args.count:
                print(json.dumps([list(r) for r in T.rows]))
        if args.count:
            print(count)
        return EXIT_OK
    if args.subject == "paths":
        if args.count:
            print(count_signed_tuples(args.shape, args.n))
            return EXIT_OK
        for P in enumerate_signed_tuples(args.shape, args.n, budget=_budget(args, "tuples")):
            if args.nonintersecting and not is_nonintersecting(P):
                continue
            print(json.dumps({"perm": list(P.perm), "sign": P.sign, "paths": [[list(p.start), p.steps] for p in P.paths]}))
        return EXIT_OK
    sets = class_overlays(args.lam, args.n, _budget(args, "overlays"))
    for cls in sorted(sets):
        if args.count:
            print(f"{cls} {len(sets[cls])}")
            continue
        for o in sets[cls]:
            print(json.dumps({
                "class": cls,
                "green": [[list(p.start), p.steps] for p in o.green.paths],
                "red": [[list(p.start), p.steps] for p in o.red.paths],
            }))
    return EXIT_OK


def cmd_render(args) -> int:
    if args.subject == "paths":
        tabs = list(islice(enumerate_ssyt(args.shape, args.n), args.index + 1))
        if len(tabs) <= args.index:
            raise UsageError(f"shape has only {len(tabs)} tableaux")
        text = paths_svg(tableau_to_paths(tabs[args.index]), f"{format_shape(args.shape)} n={args.n} #{args.index}")
    else:
        sets = class_overlays(args.lam, args.n, _budget(args, "overlays"))
        pool = sets[args.cls]
        if len(pool) <= args.index:
            raise UsageError(f"class {args.cls} has only {len(pool)} overlays")
        o = pool[args.index]
        s = dodgson_configuration(args.lam, args.n)[1][0]
        text = overlay_svg(o, trail_from(o, s), f"class {args.cls} #{args.index}")
    Path(args.out).write_text(text, encoding="utf-8")
    print(args.out)
    return EXIT_OK


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="detpaths", description="Schur functions, lattice paths and determinant identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="print s_{lam/mu}(x1..xn)")
    p.add_argument("shape", type=_shape, help='e.g. "2,1/1" or "" for the empty shape')
    p.add_argument("n", type=_positive)
    p.add_argument("route", nargs="?", default="both", choices=["tableaux", "jacobitrudi", "both"])
    _add_budgets(p, "tableaux")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("jt", help="show or verify a Jacobi-Trudi matrix")
    p.add_argument("action", choices=["show", "verify"])
    p.add_argument("shape", type=_shape)
    p.add_argument("n", type=_positive)
    p.add_argument("--generic", action="store_true", help="show h_r as y_r")
    p.add_argument("--expand", action="store_true", help="expand h_r(x1..xn) as polynomials")
    _add_budgets(p, "tableaux")
    p.set_defaults(func=cmd_jt)

    p = sub.add_parser("verify", help="check an identity and print a JSON verdict")
    _add_identity_args(p)
    p.add_argument("--route", choices=["fuzz", "symbolic"], default="fuzz")
    p.add_argument("--matrix", action="append", help="JSON integer matrix literal; repeat for two-matrix identities")
    _add_budgets(p, "tableaux", "overlays")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="seeded integer fuzzing of an identity")
    _add_identity_args(p)
    _add_budgets(p, "tableaux", "overlays")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("enumerate", help="list tableaux, path tuples or overlays")
    esub = p.add_subparsers(dest="subject", required=True)
    for subject in ("tableaux", "paths"):
        q = esub.add_parser(subject)
        q.add_argument("shape", type=_shape)
        q.add_argument("n", type=_positive)
        q.add_argument("--count", action="store_true")
        if subject == "paths":
            q.add_argument("--nonintersecting", action="store_true")
        _add_budgets(q, "tableaux", "tuples")
        q.set_defaults(func=cmd_enumerate)
    q = esub.add_parser("overlays", help="the three overlay classes of the condensation instance")
    q.add_argument("lam", type=_ints, metavar="LAMBDA")
    q.add_argument("n", type=_positive)
    q.add_argument("--count", action="store_true")
    _add_budgets(q, "overlays")
    q.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="write an SVG drawing")
    rsub = p.add_subparsers(dest="subject", required=True)
    q = rsub.add_parser("paths")
    q.add_argument("shape", type=_shape)
    q.add_argument("n", type=_positive)
    q.add_argument("--index", type=int, default=0, help="tableau index in enumeration order")
    q.add_argument("-o", "--out", required=True)
    q.set_defaults(func=cmd_render)
    q = rsub.add_parser("overlay")
    q.add_argument("lam", type=_ints, metavar="LAMBDA")
    q.add_argument("n", type=_positive)
    q.add_argument("--class", dest="cls", choices=["A", "B", "C"], default="B")
    q.add_argument("--index", type=int, default=0)
    q.add_argument("-o", "--out", required=True)
    _add_budgets(q, "overlays")
    q.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
