"""``selim`` command-line front end.

Exit codes: 0 success, 2 schema or input error, 3 internal invariant
violation, 4 degenerate specialization, 5 support too small.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import documents
from .bounds import (PER_BLOCK, PER_EQUATION, SimplexBlockSystem, mbezout_generating_function,
                     mbezout_permanent, mbezout_product, mixed_volume_permanent, tmne_bound,
                     tmne_degree_matrix)
from .errors import (DegenerateSpecializationError, DegenerateSystemError, DimensionError,
                     DomainError, ResourceLimitError, SelimError, SupportTooSmallError)
from .exact import format_scalar
from .games import (BilinearTriple, build_tmne_system, construct_double_root,
                    discriminant_2x2x2, solve_2x2x2)
from .implicit import (build_interpolation_matrix, implicit_equation, membership_test,
                       predict_support, default_sample_count)
from .poly import SparsePolynomial
from .polygon import mixed_area_2d
from .resultants import (DenseHomogeneousSystem, macaulay_matrix, macaulay_resultant,
                         sylvester_matrix, sylvester_resultant)

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_DEGENERATE, EXIT_SUPPORT = 0, 2, 3, 4, 5


class InvariantViolation(SelimError):
    """Independent methods disagree; always a bug."""


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _with_result(doc: dict, result) -> dict:
    out = {k: v for k, v in doc.items() if k != "result"}
    out["result"] = result
    return out


# bounds

def _bound_methods(doc: dict) -> dict[str, object]:
    """Every applicable root-bound method for a degree-matrix document."""
    d, blocks = documents.degree_data(doc, PER_EQUATION)
    methods = {"product": lambda: mbezout_product(d, blocks),
               "permanent": lambda: mbezout_permanent(d, blocks)}
    try:
        a, _ = documents.degree_data(doc, PER_BLOCK)
    except documents.DocumentError:
        a = None
    if a is not None:
        methods["gf"] = lambda: mbezout_generating_function(a, blocks)
    return methods


def _cross_check(results: dict[str, object]) -> str:
    width = max(len(k) for k in results)
    lines = [f"{'method':<{width}}  bound"]
    lines += [f"{k:<{width}}  {format_scalar(v)}" for k, v in results.items()]
    if len(set(results.values())) != 1:
        raise InvariantViolation("root-bound methods disagree:\n" + "\n".join(lines))
    lines.append("all methods agree")
    return "\n".join(lines)


def cmd_bounds(args) -> int:
    sub = args.method
    if sub == "tmne":
        S = args.players
        if S is None or S < 1:
            raise documents.DocumentError("--players must be a positive integer", "--players")
        if args.all:
            blocks = (1,) * S
            results = {"tmne": tmne_bound(S),
                       "gf": mbezout_generating_function(tmne_degree_matrix(S), blocks),
                       "product": mbezout_product(
                           [[int(i != j) for j in range(S)] for i in range(S)], blocks)}
            if S <= 12:
                results["permanent"] = mbezout_permanent(
                    [[int(i != j) for j in range(S)] for i in range(S)], blocks)
            text = _cross_check(results)
            print(_dump({"players": S, "result": {k: str(v) for k, v in results.items()}})
                  if args.json else text)
            return EXIT_OK
        value = tmne_bound(S)
        print(_dump({"players": S, "result": str(value)}) if args.json else value)
        return EXIT_OK

    if sub == "mixed-area":
        doc = documents.load(_read(args.input), "polygon-pair")
        value = mixed_area_2d(*documents.polygons(doc))
        print(_dump(_with_result(doc, str(value))) if args.json else value)
        return EXIT_OK

    doc = documents.load(_read(args.input), "degree-matrix")
    if args.all:
        methods = _bound_methods(doc)
        results = {k: f() for k, f in methods.items()}
        text = _cross_check(results)
        print(_dump(_with_result(doc, {k: str(v) for k, v in results.items()}))
              if args.json else text)
        return EXIT_OK
    if sub == "product":
        d, blocks = documents.degree_data(doc, PER_EQUATION)
        value = mbezout_product(d, blocks)
    elif sub == "gf":
        a, blocks = documents.degree_data(doc, PER_BLOCK)
        value = mbezout_generating_function(a, blocks)
    else:  # permanent-mv
        d, blocks = documents.degree_data(doc, PER_EQUATION)
        vols = doc["payload"].get("volumes")
        with documents.guard("/payload/volumes"):
            system = (SimplexBlockSystem(blocks, d, tuple(vols)) if vols is not None
                      else SimplexBlockSystem.unit_simplices(d, blocks))
        value = mixed_volume_permanent(system)
    out = format_scalar(Fraction(value))
    print(_dump(_with_result(doc, out)) if args.json else out)
    return EXIT_OK


# resultants

def cmd_resultant(args) -> int:
    if args.method == "sylvester":
        doc = documents.load(_read(args.input), "univariate-pair")
        pair = documents.univariate_pair(doc)
        if args.matrix_only:
            m = sylvester_matrix(pair)
            print(_dump({"entries": [[format_scalar(e) for e in m.row(i)] for i in range(m.rows)]}))
            return EXIT_OK
        value = sylvester_resultant(pair)
    else:
        doc = documents.load(_read(args.input))
        if doc["kind"] == "univariate-pair":
            pair = documents.univariate_pair(doc)
            with documents.guard("/payload"):
                system = DenseHomogeneousSystem.from_polynomials([pair.f, pair.g])
        elif doc["kind"] == "polynomial-system":
            system = documents.polynomial_system(doc)
        else:
            raise documents.DocumentError(
                f"expected a polynomial-system or univariate-pair document, got {doc['kind']}",
                "/kind")
        if args.matrix_only:
            print(_dump(macaulay_matrix(system).to_json(system.variables)))
            return EXIT_OK
        value = macaulay_resultant(system)
    out = format_scalar(value)
    print(_dump(_with_result(doc, out)) if args.json else out)
    return EXIT_OK


# games

def _triple_doc(t: BilinearTriple) -> dict:
    return documents.document("bilinear-triple", t.to_json())


def cmd_game(args) -> int:
    if args.action == "double-root":
        print(_dump(_triple_doc(construct_double_root(args.seed))))
        return EXIT_OK
    doc = documents.load(_read(args.input))
    if args.action == "build":
        if doc["kind"] != "payoff-tensor":
            raise documents.DocumentError("build needs a payoff-tensor document", "/kind")
        with documents.guard("/payload/strategies"):
            system = build_tmne_system(documents.payoff_tensor(doc))
        if args.json:
            print(_dump(_with_result(doc, {
                "variables": list(system.variables),
                "equations": [p.to_json() for p in system.polynomials]})))
        else:
            print("variables: " + ", ".join(system.variables))
            for player, p in zip(system.players, system.polynomials):
                print(f"player {player}: {p} = 0")
        return EXIT_OK
    if doc["kind"] not in ("payoff-tensor", "bilinear-triple"):
        raise documents.DocumentError(
            "expected a 2x2x2 payoff-tensor or bilinear-triple document", "/kind")
    t = documents.bilinear_triple(doc)
    if args.action == "discriminant":
        out = format_scalar(discriminant_2x2x2(t))
        print(_dump(_with_result(doc, out)) if args.json else out)
        return EXIT_OK
    try:
        result = solve_2x2x2(t)
    except DegenerateSystemError as exc:
        verdict = f"degenerate: {exc}"
        print(_dump(_with_result(doc, {"verdict": verdict})) if args.json else verdict)
        return EXIT_OK
    if args.json:
        payload = result.to_json()
        payload["verdict"] = "multiple root" if result.has_multiple_root else "simple roots"
        print(_dump(_with_result(doc, payload)))
        return EXIT_OK
    alpha, beta, gamma = result.eliminant
    q = SparsePolynomial(("x1", "x0"), {(2, 0): alpha, (1, 1): beta, (0, 2): gamma})
    print(f"eliminant: {q}")
    print(f"eliminant discriminant: {format_scalar(result.discriminant)}")
    for r in result.roots:
        coords = " ".join(f"({format_scalar(u)}:{format_scalar(v)})" for u, v in (r.x, r.y, r.z))
        flag = " on-coordinate-hyperplane" if r.on_coordinate_hyperplane else ""
        print(f"root {coords} multiplicity {r.multiplicity}{flag}")
    if result.algebraic:
        print(f"two {result.algebraic} conjugate roots of the eliminant")
    print(f"root count: {result.root_count}")
    print("verdict: " + ("multiple root" if result.has_multiple_root else "simple roots"))
    return EXIT_OK


# implicitization

def cmd_implicitize(args) -> int:
    doc = documents.load(_read(args.input), "parametric-curve")
    c = documents.curve(doc)
    support = (documents.support_set(_read(args.support_file)) if args.support_file
               else predict_support(c))
    if args.samples is not None and args.samples < len(support):
        raise documents.DocumentError(
            f"need at least {len(support)} samples for {len(support)} support monomials",
            "--samples")
    if args.test_point is not None:
        try:
            point = tuple(Fraction(v) for v in args.test_point)
        except ValueError as exc:
            raise documents.DocumentError(str(exc), "--test-point") from exc
        count = max(args.samples or 0, default_sample_count(c, support))
        m = build_interpolation_matrix(c, support, count)
        if m.kernel_dimension == 0:
            raise SupportTooSmallError("interpolation matrix has trivial kernel")
        verdict = membership_test(m, point)
        if args.json:
            print(_dump(_with_result(doc, {"point": [format_scalar(v) for v in point],
                                           "on_curve": verdict})))
        else:
            print("true" if verdict else "false")
        return EXIT_OK
    p = implicit_equation(c, support, args.samples)
    print(_dump(_with_result(doc, p.to_json())) if args.json else p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selim", description="Exact compact formulae of sparse elimination.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", help="problem document (default: stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    b = sub.add_parser("bounds", help="root bounds")
    b.add_argument("method", choices=["product", "gf", "tmne", "permanent-mv", "mixed-area"])
    common(b)
    b.add_argument("--players", type=int, help="player count for 'tmne'")
    b.add_argument("--all", action="store_true",
                   help="run every applicable method and cross-check")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("resultant", help="Sylvester and Macaulay resultants")
    r.add_argument("method", choices=["sylvester", "macaulay"])
    common(r)
    r.add_argument("--matrix-only", action="store_true", help="print the labelled matrix")
    r.set_defaults(func=cmd_resultant)

    g = sub.add_parser("game", help="totally mixed Nash systems")
    g.add_argument("action", choices=["build", "discriminant", "solve", "double-root"])
    common(g)
    g.add_argument("--seed", type=int, default=0, help="seed for 'double-root'")
    g.set_defaults(func=cmd_game)

    i = sub.add_parser("implicitize", help="implicit equation of a parametric plane curve")
    common(i)
    i.add_argument("--support-file", help="JSON file with the candidate support")
    i.add_argument("--samples", type=int, help="minimum number of sample parameters")
    i.add_argument("--test-point", nargs=2, metavar=("X", "Y"),
                   help="report whether (X, Y) lies on the curve")
    i.set_defaults(func=cmd_implicitize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except documents.DocumentError as exc:
        print(f"selim: input error at {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"selim: invariant violation (bug): {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except DegenerateSpecializationError as exc:
        print(f"selim: degenerate specialization: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except SupportTooSmallError as exc:
        print(f"selim: support too small: {exc} (pass a larger --support-file)",
              file=sys.stderr)
        return EXIT_SUPPORT
    except (DimensionError, DomainError, ResourceLimitError, DegenerateSystemError,
            OSError) as exc:
        print(f"selim: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
