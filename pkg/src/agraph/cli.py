"""Command-line interface.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 invalid input, 3 uncovered case in the move calculus, 4 resource cap.
All reports are machine-readable JSON first; failures serialize the
offending ideal/move/family so the instance can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .borel import DEFAULT_VERTEX_CAP, enumerate_borel_fixed, terminal_ideal
from .errors import (
    AGraphError,
    IncompatibleWeightsError,
    InvalidParameterError,
    ResourceCapExceeded,
    UncoveredCaseError,
    VerificationError,
    ZeroRowError,
)
from .families import DEFAULT_T_SAMPLES, build_edge_family, verify_family
from .graphs import build_spanning_tree, export_dot, export_json, is_connected
from .groebner import DEFAULT_STEP_CAP
from .monomials import MonomialIdeal
from .moves import canonical_successor, is_valid_move, path_to_dict, path_to_terminal
from .borel import is_borel_fixed
from .subgroups import (
    WeightMatrix,
    pick_compatible_pair,
    pick_one_ps,
    pick_two_ps,
    picker_audit,
    simplex_tgraph,
    verify_separation,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INVALID_INPUT = 2
EXIT_UNCOVERED = 3
EXIT_RESOURCE_CAP = 4


def _env_int(name: str, fallback: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return fallback
    try:
        return int(value)
    except ValueError:
        raise InvalidParameterError(f"environment variable {name}={value!r} is not an integer")


def _parse_samples(text: str) -> tuple[Fraction, ...]:
    try:
        samples = tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"bad t samples {text!r}: {exc}")
    if not samples or len(set(samples)) != len(samples) or any(t == 0 for t in samples):
        raise InvalidParameterError("t samples must be nonzero and pairwise distinct")
    return samples


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _require_positive(args) -> None:
    if args.n < 1 or getattr(args, "d", 1) < 1:
        raise InvalidParameterError("need n >= 1 and d >= 1")


def cmd_vertices(args) -> int:
    _require_positive(args)
    vs = enumerate_borel_fixed(args.n, args.d, max_vertices=args.max_vertices)
    _write(args, vs.to_json())
    return EXIT_OK


def cmd_tree(args) -> int:
    _require_positive(args)
    graph = build_spanning_tree(
        args.n, args.d, verify_level=args.verify_level,
        t_samples=_parse_samples(args.t_samples),
        max_vertices=args.max_vertices,
    )
    _write(args, export_dot(graph) if args.format == "dot" else export_json(graph))
    return EXIT_OK


def cmd_path(args) -> int:
    with open(args.ideal) as fh:
        I = MonomialIdeal.from_json(fh.read())
    if I.is_zero() or not I.is_artinian():
        raise InvalidParameterError(f"input ideal {I} fails is_artinian")
    if not is_borel_fixed(I):
        raise InvalidParameterError(f"input ideal {I} fails is_borel_fixed")
    path = path_to_terminal(I)
    _write(args, json.dumps(path_to_dict(I, path), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run the property sweep for one (n, d) and report machine-readably."""
    _require_positive(args)
    t_samples = _parse_samples(args.t_samples)
    vs = enumerate_borel_fixed(args.n, args.d, max_vertices=args.max_vertices)
    sink = terminal_ideal(args.n, args.d)

    report: dict = {
        "n": args.n, "d": args.d, "vertices": len(vs),
        "verify_level": args.verify_level,
        "edges": [], "failures": [],
    }
    for I in vs.ideals:
        if I.colength() != args.d:
            report["failures"].append({"kind": "colength", "ideal": I.to_dict()})
        if not is_borel_fixed(I):
            report["failures"].append({"kind": "borel", "ideal": I.to_dict()})
        if I == sink:
            continue
        mv, J = canonical_successor(I)
        move_report = is_valid_move(I, mv)
        entry = {
            "ideal": I.to_dict(), "move": mv.to_dict(),
            "valid": move_report.ok,
            "weight_increases": J.standard_weight() > I.standard_weight(),
            "socle_weight_increases": J.weight() > I.weight(),
            "socle_sizes": [move_report.socle_size_before, move_report.socle_size_after],
        }
        if args.verify_level == "full":
            family_report = verify_family(build_edge_family(I, mv), t_samples)
            entry["family"] = family_report.to_dict()
            if not family_report.ok:
                report["failures"].append({"kind": "family", "ideal": I.to_dict(),
                                           "report": family_report.to_dict()})
        if not move_report.ok:
            report["failures"].append({"kind": "move", "ideal": I.to_dict(),
                                       "report": move_report.to_dict()})
        if not entry["weight_increases"]:
            report["failures"].append({"kind": "weight", "ideal": I.to_dict()})
        report["edges"].append(entry)

    graph = build_spanning_tree(args.n, args.d, verify_level="none",
                                max_vertices=args.max_vertices)
    report["tree"] = {
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "connected": is_connected(graph),
        "counters": graph.metadata["counters"],
    }
    ok = not report["failures"] and report["tree"]["connected"]
    report["ok"] = ok
    _write(args, json.dumps(report, indent=2))
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_simplex(args) -> int:
    if args.n < 1:
        raise InvalidParameterError("need n >= 1")
    graph = simplex_tgraph(args.n)
    _write(args, export_dot(graph) if args.format == "dot" else export_json(graph))
    return EXIT_OK


def cmd_pick_subgroup(args) -> int:
    with open(args.weights) as fh:
        W = WeightMatrix.from_json(fh.read())
    if args.mode == "one":
        a = pick_one_ps(W)
        audit = picker_audit(W, a)
    elif args.mode == "two":
        a, b = pick_two_ps(W)
        audit = picker_audit(W, a, b)
    else:
        first, second = pick_compatible_pair(W)
        a = first.exponents(W.n)
        b = second.exponents(W.n)
        audit = picker_audit(W, a, b, pairs=(first, second))
    ok, _ = verify_separation(W, a, None if args.mode == "one" else b)
    if not ok:
        raise VerificationError("picker output failed independent separation recheck", audit)
    _write(args, json.dumps(audit, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agraph",
        description="Borel-fixed vertex enumeration, canonical moves, and "
                    "spanning-tree connectedness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_d=True):
        p.add_argument("--n", type=int, required=True, help="number of variables")
        if with_d:
            p.add_argument("--d", type=int, required=True, help="colength")
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--max-vertices", type=int,
                       default=_env_int("AGRAPH_MAX_VERTICES", DEFAULT_VERTEX_CAP))
        p.add_argument("--max-gb-steps", type=int,
                       default=_env_int("AGRAPH_MAX_GB_STEPS", DEFAULT_STEP_CAP))

    p = sub.add_parser("vertices", help="enumerate the Borel-fixed vertex set")
    common(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("tree", help="build and certify the spanning tree")
    common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--verify-level", choices=("none", "fast", "full"), default="fast")
    p.add_argument("--t-samples", default="1,2,3,5,7")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("path", help="trace the canonical move path of an ideal")
    p.add_argument("--ideal", required=True, help="ideal JSON file")
    p.add_argument("--output")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="run the property sweep for one (n, d)")
    common(p)
    p.add_argument("--verify-level", choices=("fast", "full"), default="fast")
    p.add_argument("--t-samples", default="1,2,3,5,7")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simplex", help="complete graph on the n+1 coordinate points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--output")
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("pick-subgroup", help="deterministic subgroup pickers")
    p.add_argument("--weights", required=True, help="weight matrix JSON file")
    p.add_argument("--mode", choices=("one", "two", "compatible"), default="one")
    p.add_argument("--output")
    p.set_defaults(func=cmd_pick_subgroup)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, ZeroRowError, IncompatibleWeightsError,
            FileNotFoundError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "invalid_input", "detail": str(exc)}), file=sys.stderr)
        return EXIT_INVALID_INPUT
    except UncoveredCaseError as exc:
        payload = {"error": "uncovered_case", "detail": str(exc)}
        if exc.ideal_json:
            payload["ideal"] = json.loads(exc.ideal_json)
        if exc.instances:
            payload["instances"] = [
                json.loads(e.ideal_json) for e in exc.instances if e.ideal_json
            ]
        print(json.dumps(payload), file=sys.stderr)
        return EXIT_UNCOVERED
    except ResourceCapExceeded as exc:
        print(json.dumps({"error": "resource_cap", "detail": str(exc)}), file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except VerificationError as exc:
        payload = {"error": "verification_failure", "detail": str(exc)}
        if exc.report is not None:
            payload["report"] = exc.report
        print(json.dumps(payload), file=sys.stderr)
        return EXIT_VERIFICATION
    except AGraphError as exc:
        print(json.dumps({"error": "invalid_input", "detail": str(exc)}), file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
