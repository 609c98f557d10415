"""Command-line interface.

Subcommands: analyze (full pipeline), example (built-in families with their
certificates), search (destabilization search only), criteria (closed-form
evaluators from flags), oracle (brute-force enumeration cross-checked against
the LP), certify (verify a certificate file).

Exit codes: 0 analysis completed, 2 input error, 3 internal consistency
failure (two routes that must agree disagreed).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .certificates import Certificate, CertificateError, verify_certificate
from .criteria import ProfileError, SingularityProfile, combined_verdict
from .families import FAMILIES, family_certificate
from .linalg import MatrixError
from .local_analysis import PointError, ProjectivePoint
from .polynomials import PolyError, format_poly, max_variable_index, parse_poly
from .report import AnalysisOptions, analyze
from .search import SearchConfig, search_destabilization
from .torus import enumerate_weight_oracle, torus_destabilize
from .verdicts import InternalConsistencyError, Status
from .weights import WeightError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (
    PolyError,
    WeightError,
    ProfileError,
    CertificateError,
    MatrixError,
    PointError,
    OSError,
    ValueError,
    json.JSONDecodeError,
)


def _read_poly_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    lines = [line.split("#", 1)[0] for line in raw.splitlines()]
    text = " ".join(lines).strip()
    if not text:
        raise PolyError(f"no polynomial found in {path}")
    return parse_poly(text, max_variable_index(text))


def _read_points_file(path: str) -> tuple[ProjectivePoint, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return tuple(ProjectivePoint.make([Fraction(str(v)) for v in coords]) for coords in data)


def _emit(payload: dict, text: str, json_path: str | None) -> None:
    if json_path == "-":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    print(text)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _search_config(args, assume_s=None) -> SearchConfig:
    return SearchConfig(
        budget=args.budget,
        seed=args.seed,
        bound=args.bound,
        assume_s=assume_s,
    )


def cmd_analyze(args) -> int:
    f = _read_poly_file(args.file)
    extra = _read_points_file(args.points) if args.points else ()
    fields = tuple(int(p) for p in args.fields.split(",") if p) if args.fields else ()
    options = AnalysisOptions(
        s=args.s,
        extra_points=extra,
        height=args.height,
        field_sizes=fields,
        search=_search_config(args, assume_s=args.s),
        timestamp=not args.no_timestamp,
    )
    report = analyze(f, options)
    _emit(report.to_json(), report.to_text(), args.json)
    return EXIT_OK


def cmd_example(args) -> int:
    f, cert = family_certificate(args.family, args.n)
    verdict = verify_certificate(f, cert)
    if verdict.status != Status.NOT_SEMISTABLE:
        raise InternalConsistencyError(
            f"built-in certificate for {args.family}, n = {args.n} failed verification"
        )
    payload = {
        "family": args.family,
        "n": args.n,
        "polynomial": format_poly(f),
        "certificate": cert.to_json(),
        "verdict": verdict.to_json(),
    }
    edge = " (edge case: empty middle block)" if args.family == "gn" and args.n == 2 else ""
    text = "\n".join(
        [
            f"{args.family}, n = {args.n}{edge}",
            f"polynomial: {format_poly(f)}",
            f"weights: {cert.r}",
            f"verdict: {verdict.status.value}",
        ]
    )
    _emit(payload, text, args.json)
    return EXIT_OK


def cmd_search(args) -> int:
    f = _read_poly_file(args.file)
    from .local_analysis import scan_singular_points

    scan = scan_singular_points(f, args.height)
    cfg = _search_config(args, assume_s=args.assume_s)
    outcome = search_destabilization(f, cfg, scan.points)
    payload = {
        "polynomial": format_poly(f),
        "frames_tried": outcome.frames_tried,
        "strict_certificate": outcome.strict.to_json() if outcome.strict else None,
        "nonstrict_certificate": outcome.nonstrict.to_json() if outcome.nonstrict else None,
    }
    if outcome.strict:
        text = f"strict certificate found: r = {outcome.strict.r} (NotSemiStable)"
    elif outcome.nonstrict:
        text = f"non-strict certificate found: r = {outcome.nonstrict.r} (NotStable); no strict certificate within budget"
    else:
        text = f"no certificate found within budget ({outcome.frames_tried} frames); this is not a stability claim"
    _emit(payload, text, args.json)
    return EXIT_OK


def cmd_criteria(args) -> int:
    if args.rank is not None and args.corank is not None:
        raise ProfileError("give --rank or --corank, not both")
    rank = args.rank
    if args.corank is not None:
        rank = args.n - args.corank
    profile = SingularityProfile(args.n, args.d, args.s, args.delta, rank)
    verdict = combined_verdict(profile, args.cone_free if args.cone_free else None)
    payload = {"profile": profile.to_json(), "verdict": verdict.to_json()}
    _emit(payload, str(verdict), args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    f = _read_poly_file(args.file)
    strict = args.strict
    witness = enumerate_weight_oracle(f, args.bound, strict)
    decision = torus_destabilize(f, strict)
    agree = (witness is not None) == decision.feasible
    payload = {
        "polynomial": format_poly(f),
        "strict": strict,
        "bound": args.bound,
        "oracle_witness": list(witness.r) if witness else None,
        "lp": decision.to_json(),
        "agree": agree,
    }
    text = (
        f"oracle: {'feasible, witness ' + str(witness) if witness else 'infeasible'}; "
        f"LP: {'feasible' if decision.feasible else 'infeasible'}; "
        f"{'agree' if agree else 'DISAGREE'}"
    )
    _emit(payload, text, args.json)
    if not agree:
        print("oracle and LP disagree; this is a bug", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_certify(args) -> int:
    f = _read_poly_file(args.file)
    with open(args.cert, "r", encoding="utf-8") as fh:
        cert = Certificate.from_json(json.load(fh))
    verdict = verify_certificate(f, cert)
    payload = {
        "polynomial": format_poly(f),
        "certificate": cert.to_json(),
        "verdict": verdict.to_json(),
    }
    _emit(payload, str(verdict), args.json)
    return EXIT_OK


def _add_common_search_flags(sub, budget_default: int) -> None:
    sub.add_argument("--budget", type=int, default=budget_default, help="coordinate frames to try")
    sub.add_argument("--seed", type=int, default=0, help="RNG seed for frame generation")
    sub.add_argument("--bound", type=int, default=2, help="matrix entry bound for random frames")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypstab",
        description="Exact stability analysis of projective hypersurfaces.",
    )
    parser.add_argument("--version", action="version", version=f"hypstab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis pipeline for a polynomial file")
    p.add_argument("file")
    p.add_argument("--s", type=int, default=None, help="asserted singular-locus dimension")
    p.add_argument("--points", default=None, help="JSON file with extra points to analyze")
    p.add_argument("--height", type=int, default=3, help="height bound for the singular scan")
    p.add_argument("--fields", default="", help="comma-separated primes for heuristic counts")
    _add_common_search_flags(p, budget_default=50)
    p.add_argument("--json", default=None, help="write JSON report here ('-' for stdout)")
    p.add_argument("--no-timestamp", action="store_true", help="omit timestamp (reproducible output)")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("example", help="emit a built-in family member and its certificate")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", default=None)
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("search", help="destabilization search only")
    p.add_argument("file")
    _add_common_search_flags(p, budget_default=50)
    p.add_argument("--assume-s", type=int, default=None, dest="assume_s",
                   help="prune candidate weights under this singular-locus dimension")
    p.add_argument("--height", type=int, default=3)
    p.add_argument("--json", default=None)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("criteria", help="evaluate sufficient criteria from singularity data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="minimum Hessian rank")
    p.add_argument("--corank", type=int, default=None, help="maximum Hessian corank")
    p.add_argument("--cone-free", action="store_true", dest="cone_free",
                   help="assert that no tangent cone is a cone over a hyperplane hypersurface")
    p.add_argument("--json", default=None)
    p.set_defaults(handler=cmd_criteria)

    p = sub.add_parser("oracle", help="brute-force oracle cross-checked against the LP")
    p.add_argument("file")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--json", default=None)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("certify", help="verify a certificate JSON file")
    p.add_argument("file")
    p.add_argument("--cert", required=True)
    p.add_argument("--json", default=None)
    p.set_defaults(handler=cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    raise SystemExit(main())
