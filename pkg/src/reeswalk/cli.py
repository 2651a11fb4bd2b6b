"""Command-line surface.

Subcommands: ``analyze`` (structural certificate plus optional algebraic
verification), ``even-walks`` (enumeration as JSON lines), ``taylor``
(one relation with verdict and, when reducible, its certificate), and
``forest``.  Reports are single JSON documents on stdout with a fixed
field order, so reruns on the same input are byte-identical; timing goes
to stderr.  Exit codes: 0 certified, 10 inconclusive or negative, 2 input
error, 11 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .complexes import Complex, dimension, validate
from .errors import (
    InvalidWalkPair,
    IsAnEvenWalk,
    LengthMismatch,
    LimitExceeded,
    ParseError,
    ReeswalkError,
    ResourceLimit,
)
from .monomials import IndexTuple, taylor_binomial
from .oracle import (
    DEFAULT_MAX_PAIRS,
    linear_type_verify,
    decompose_non_walk,
)
from .structure import LINEAR_TYPE, is_forest, linear_type_structural
from .walks import enumerate_even_walks, is_even_walk, WalkPair

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 10
EXIT_RESOURCE = 11


def _load_complex(path: str, prune: bool) -> Complex:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParseError(f"{path}: expected an object with a 'facets' key")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError(f"{path}: 'facets' must be a list of vertex-label lists")
    try:
        return validate(facets, prune_nonmaximal=prune)
    except ReeswalkError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _max_pairs() -> int:
    raw = os.environ.get("REESWALK_MAX_PAIRS")
    if raw is None:
        return DEFAULT_MAX_PAIRS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_PAIRS


def cmd_analyze(args) -> int:
    started = time.monotonic()
    c = _load_complex(args.file, args.prune_nonmaximal)
    walks = enumerate_even_walks(c, args.s_max)
    certificate = linear_type_structural(c, args.s_max)
    report = {
        "complex": {
            "facets": c.q,
            "dimension": dimension(c),
            "vertices": len(c.vertex_universe),
        },
        "even_walks": {
            "s_max": args.s_max,
            "count": len(walks.walks),
            "walks": [w.to_json() for w in walks.walks],
            "truncated": walks.truncated,
        },
        "certificate": certificate.to_json(),
        "oracle": None,
    }
    code = EXIT_OK if certificate.verdict == LINEAR_TYPE else EXIT_NEGATIVE
    if args.oracle:
        try:
            verification = linear_type_verify(
                c, args.max_degree, max_pairs=_max_pairs()
            )
            report["oracle"] = verification.to_json()
        except ResourceLimit as exc:
            report["oracle"] = {"error": "resource-limit", "detail": str(exc)}
            _emit(report)
            print(f"elapsed_s={time.monotonic() - started:.3f}", file=sys.stderr)
            return EXIT_RESOURCE
    _emit(report)
    print(f"elapsed_s={time.monotonic() - started:.3f}", file=sys.stderr)
    return code


def cmd_even_walks(args) -> int:
    c = _load_complex(args.file, args.prune_nonmaximal)
    result = enumerate_even_walks(
        c,
        args.s_max,
        connected_only=args.connected_only,
        distinct_facets_only=args.distinct_facets_only,
        limit=args.limit,
    )
    for w in result.walks:
        print(json.dumps(w.to_json()))
    if result.truncated:
        print(f"truncated at limit={args.limit}", file=sys.stderr)
    return EXIT_OK


def cmd_taylor(args) -> int:
    c = _load_complex(args.file, args.prune_nonmaximal)
    try:
        alpha = IndexTuple.of(*args.alpha)
        beta = IndexTuple.of(*args.beta)
        binomial = taylor_binomial(c, alpha, beta)
        pair = WalkPair(alpha, beta) if len(alpha) >= 2 else None
    except (ValueError, ReeswalkError) as exc:
        raise ParseError(str(exc)) from exc
    doc = {"binomial": str(binomial), "verdict": None, "certificate": None}
    if pair is None:
        # degree-1 relations have no walk notion and need no certificate
        doc["verdict"] = {"is_even_walk": False, "witness": None}
        _emit(doc)
        return EXIT_OK
    verdict = is_even_walk(c, pair)
    doc["verdict"] = verdict.to_json()
    if not verdict:
        cert = decompose_non_walk(c, alpha, beta)
        doc["certificate"] = cert.to_json()
    _emit(doc)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_forest(args) -> int:
    c = _load_complex(args.file, args.prune_nonmaximal)
    cert = is_forest(c)
    doc = {
        "is_forest": cert.is_forest,
        "cycle": None if cert.cycle is None else cert.cycle.to_list(),
        "peeling": None if cert.peeling is None else list(cert.peeling),
    }
    _emit(doc)
    return EXIT_OK if cert.is_forest else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reeswalk",
        description="Even walks and linear-type certificates for facet complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="JSON file with {'facets': [[...], ...]}")
        p.add_argument("--prune-nonmaximal", action="store_true")
        p.add_argument("--seed", type=int, default=None, help="accepted and ignored")

    p = sub.add_parser("analyze", help="structural certificate, optional oracle run")
    common(p)
    p.add_argument("--s-max", type=int, default=3)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--max-degree", type=int, default=2)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("even-walks", help="enumerate even walks as JSON lines")
    common(p)
    p.add_argument("--s-max", type=int, default=3)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--distinct-facets-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_even_walks)

    p = sub.add_parser("taylor", help="one relation: binomial, verdict, certificate")
    common(p)
    p.add_argument("--alpha", type=int, nargs="+", required=True)
    p.add_argument("--beta", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_taylor)

    p = sub.add_parser("forest", help="forest decision with certificate")
    common(p)
    p.set_defaults(func=cmd_forest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidWalkPair, LengthMismatch, IsAnEvenWalk, LimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
