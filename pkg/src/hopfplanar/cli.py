"""Batch command line front end.

Every command loads its inputs, runs one verification or computation, and
prints a single deterministic JSON (or key: value text) report.  Exit codes:
0 all checks passed, 1 a verification failed, 64 malformed input, 75 a
budget cap was exceeded.  The HPA_BUDGET environment variable overrides the
Gram entry cap; --delta-sign picks the root used for delta.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import exactlin
from .evaluator import evaluate
from .hopf import verify_fourier_laws, verify_relation_identities
from .io import FormatError, load_hopf, load_network
from .network import apply_move
from .pairing import (
    BudgetError,
    depth_two_rank,
    gram,
    reconstruct_structure,
)
from .duality import verify_duality_on_network
from .randomnets import MOVES, random_network_with_site
from .tilings import (
    enumerate_tilings,
    fan_tiling,
    flip_graph,
    surjectivity_gram,
    tiling_to_tangle,
    to_dot,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 64
EXIT_BUDGET = 75

DEFAULT_BUDGET = 10000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FormatError(message)


def _budget(args):
    raw = os.environ.get("HPA_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        cap = int(raw)
    except ValueError as exc:
        raise FormatError(f"HPA_BUDGET must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise FormatError("HPA_BUDGET must be positive")
    return cap


def _emit(report, fmt):
    if fmt == "text":
        for key, value in report.items():
            print(f"{key}: {_text_value(value)}")
    else:
        print(json.dumps(report, ensure_ascii=False, sort_keys=False))


def _text_value(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _load_algebra(args):
    if args.hopf is None:
        raise FormatError("a --hopf spec file is required")
    return load_hopf(args.hopf, delta_sign=args.delta_sign)


def cmd_verify_hopf(args):
    algebra = _load_algebra(args)
    checks = algebra.verify()
    identities = verify_relation_identities(algebra)
    passed = all(checks.values()) and all(identities.values())
    report = {
        "name": algebra.name,
        "n": algebra.n,
        "delta": algebra.delta.canonical_text(),
        "checks": checks,
        "identities": identities,
        "passed": passed,
    }
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_eval(args):
    algebra = _load_algebra(args)
    network = load_network(args.network, algebra)
    value = evaluate(network, algebra, method=args.method)
    report = {"value": value.canonical_text()}
    return report, EXIT_OK


def cmd_moves(args):
    algebra = _load_algebra(args)
    counts = {}
    failures = []
    for index, move in enumerate(MOVES):
        rng = random.Random(args.seed + index)
        done = 0
        for _ in range(args.trials):
            network, site = random_network_with_site(algebra, rng, move)
            before = evaluate(network, algebra)
            after = evaluate(apply_move(network, move, site), algebra)
            if before != after:
                failures.append({"move": move, "site": site})
            done += 1
        counts[move] = done
    passed = not failures
    report = {
        "name": algebra.name,
        "seed": args.seed,
        "trials_per_move": args.trials,
        "checked": counts,
        "failures": failures,
        "passed": passed,
    }
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_gram(args):
    algebra = _load_algebra(args)
    matrix = gram(algebra, args.k, max_entries=_budget(args))
    rank = exactlin.rank(matrix)
    is_identity = exactlin.is_identity(matrix)
    report = {
        "k": args.k,
        "gram_is_identity": is_identity,
        "rank": rank,
        "dim_claim": "n^{k-1}",
        "expected_rank": algebra.n ** (args.k - 1),
        "passed": is_identity,
    }
    return report, EXIT_OK if is_identity else EXIT_FAIL


def cmd_depth_two(args):
    algebra = _load_algebra(args)
    rank = depth_two_rank(algebra)
    expected = algebra.n ** 2
    passed = rank == expected
    report = {"rank": rank, "expected": expected, "passed": passed}
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_reconstruct(args):
    algebra = _load_algebra(args)
    result = reconstruct_structure(algebra)
    passed = (
        result["comult_matches"]
        and result["counit_matches"]
        and result["antipode_matches"]
    )
    report = dict(result)
    report["passed"] = passed
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_fourier(args):
    algebra = _load_algebra(args)
    laws = verify_fourier_laws(algebra)
    passed = all(laws.values())
    report = {"name": algebra.name, "laws": laws, "passed": passed}
    return report, EXIT_OK if passed else EXIT_FAIL


def cmd_duality(args):
    algebra = _load_algebra(args)
    network = load_network(args.network, algebra)
    result = verify_duality_on_network(algebra, network)
    report = {
        "lhs": result["lhs"].canonical_text(),
        "rhs": result["rhs"].canonical_text(),
        "equal": result["equal"],
    }
    return report, EXIT_OK if result["equal"] else EXIT_FAIL


def cmd_tilings(args):
    tilings = enumerate_tilings(args.k)
    report = {
        "k": args.k,
        "count": len(tilings),
        "diagonals": [[list(d) for d in sorted(t.diagonals)] for t in tilings],
    }
    exit_code = EXIT_OK
    if args.flip_graph or args.dot:
        graph = flip_graph(args.k)
        report["edges"] = [list(e) for e in graph.edges]
        report["connected"] = graph.connected
        report["spanning_tree"] = [list(e) for e in graph.spanning_tree]
        if not graph.connected:
            exit_code = EXIT_FAIL
        if args.dot:
            with open(args.dot, "w") as handle:
                handle.write(to_dot(graph))
            report["dot"] = args.dot
    if args.hopf:
        algebra = _load_algebra(args)
        if args.k > 4:
            raise FormatError("surjectivity reports are scoped to k <= 4")
        budget = _budget(args)
        ranks = [
            surjectivity_gram(algebra, tiling_to_tangle(t), max_entries=budget)
            for t in tilings
        ]
        expected = algebra.n ** (args.k - 1)
        report["surjectivity_ranks"] = ranks
        report["expected_rank"] = expected
        report["surjective"] = all(r == expected for r in ranks)
        if not report["surjective"]:
            exit_code = EXIT_FAIL
    return report, exit_code


def build_parser():
    parser = _Parser(prog="hopfplanar", description=__doc__)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, network=False, hopf_positional=False):
        if hopf_positional:
            p.add_argument("hopf", nargs="?", default=None,
                           help="Hopf spec JSON file")
            p.add_argument("--hopf", dest="hopf_flag", default=None,
                           help=argparse.SUPPRESS)
        else:
            p.add_argument("--hopf", required=False, default=None,
                           help="Hopf spec JSON file")
        if network:
            p.add_argument("--network", required=True,
                           help="network JSON file")
        p.add_argument("--delta-sign", type=int, choices=(1, -1), default=1)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify-hopf", help="check every Hopf axiom")
    common(p, hopf_positional=True)
    p.set_defaults(func=cmd_verify_hopf)

    p = sub.add_parser("eval", help="evaluate a labeled network")
    common(p, network=True)
    p.add_argument("--method", choices=("auto", "naive", "contracted", "both"),
                   default="auto")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("moves", help="seeded move-invariance property run")
    common(p)
    p.add_argument("--check", action="store_true",
                   help="run the invariance suite (default action)")
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("gram", help="pairing Gram matrix for k strands")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("depth-two", help="rank of the depth-two pairing")
    common(p)
    p.set_defaults(func=cmd_depth_two)

    p = sub.add_parser("reconstruct",
                       help="recover the structure tensors from tangles")
    common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("fourier", help="Fourier transform law checks")
    common(p)
    p.add_argument("--verify", action="store_true",
                   help="run the law checks (default action)")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("duality", help="compare a network with its dual")
    common(p, network=True)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("tilings", help="enumerate quadrilateral tilings")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--flip-graph", action="store_true",
                   help="include hexagon-move graph and connectivity")
    p.add_argument("--dot", default=None, help="write the flip graph as DOT")
    p.set_defaults(func=cmd_tilings)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "hopf_flag", None) and args.hopf is None:
            args.hopf = args.hopf_flag
        report, code = args.func(args)
    except BudgetError as exc:
        _emit({"error": "budget", "detail": str(exc)}, "json")
        return EXIT_BUDGET
    except (FormatError, OSError, KeyError, TypeError) as exc:
        _emit({"error": "input", "detail": str(exc)}, "json")
        return EXIT_INPUT
    except ValueError as exc:
        _emit({"error": "input", "detail": str(exc)}, "json")
        return EXIT_INPUT
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
