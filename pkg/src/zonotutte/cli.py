"""Command-line front end.

Subcommands
    tutte     weighted (or --classical) Tutte polynomial, both bases
    ehrhart   Ehrhart and interior polynomials plus volume
    count     lattice points of the q-fold dilated zonotope
    volume    volume of the zonotope
    interior  interior lattice points of the q-fold dilated zonotope
    verify    run the full identity suite, optionally against the
              brute-force geometric oracle

Input is a JSON document {"dim": n, "vectors": [[...], ...]} read from a
file argument or stdin, or the inline shorthand --vectors "3,0;0,2;1,1".
Output is a JSON report on stdout (--pretty for a human-readable rendering);
big integers are serialized as decimal strings.  Reports are byte-stable
for a fixed input and flag set; the optional --timing flag adds a wall
clock field that is exempt from that guarantee.

Exit codes: 0 success (and, for verify, every identity passed); 1 an
identity failed in verify; 2 malformed input; 3 input does not span its
ambient space; 4 an enumeration cap was exceeded; 5 invalid dilation
factor (q < 1).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .ehrhart import (
    ehrhart_summary,
    ehrhart_via_independent_sets,
    ehrhart_via_theorem,
    interior_polynomial,
    scalar_corollaries,
)
from .errors import (
    BoxTooLarge,
    DimensionDeficient,
    EliminationTooLarge,
    ListTooLarge,
)
from .exact_linalg import VectorList
from .geometry_oracle import (
    MAX_BOX_POINTS,
    MAX_ELIM_VARS,
    CountMode,
    brute_force_count,
)
from .polynomials import (
    UniPoly,
    bipoly_from_json,
    bipoly_to_json,
    eval_uni,
    format_bipoly,
    format_shifted,
    format_unipoly,
    reverse_coefficients,
    unipoly_from_json,
    unipoly_to_json,
)
from .tutte_core import (
    MAX_LIST_SIZE,
    classical_tutte,
    dilation_identity_sides,
    multiplicity_tutte,
)

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_CAP = 4
EXIT_BAD_Q = 5


class InputError(Exception):
    """Malformed input document or inline vector specification."""


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _vector_list_from_doc(doc) -> VectorList:
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    if "dim" not in doc or "vectors" not in doc:
        raise InputError('input document needs keys "dim" and "vectors"')
    dim = _require_int(doc["dim"], '"dim"')
    if dim < 1:
        raise InputError(f'"dim" must be positive, got {dim}')
    vectors = doc["vectors"]
    if not isinstance(vectors, list):
        raise InputError('"vectors" must be a list of integer vectors')
    rows = []
    for v in vectors:
        if not isinstance(v, list) or len(v) != dim:
            raise InputError(f"vector {v!r} is not a list of length {dim}")
        rows.append(tuple(_require_int(x, "vector entry") for x in v))
    return VectorList(dim, rows)


def _vector_list_from_inline(spec: str) -> VectorList:
    rows = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            rows.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError as exc:
            raise InputError(f"cannot parse vector {chunk!r}") from exc
    if not rows:
        raise InputError("inline vector specification is empty")
    dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise InputError("inline vectors have inconsistent lengths")
    return VectorList(dim, rows)


def _load_input(args) -> VectorList:
    if args.vectors is not None:
        return _vector_list_from_inline(args.vectors)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    try:
        return _vector_list_from_doc(doc)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _input_echo(X: VectorList) -> dict:
    return {"dim": X.dim, "vectors": [list(v) for v in X.vectors]}


def _parse_q_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse q list {text!r}") from exc
    if not values:
        raise InputError("q list is empty")
    return values


# ---------------------------------------------------------------------------
# Command handlers: each returns the report dict.

def _cmd_tutte(X: VectorList, args) -> dict:
    compute = classical_tutte if args.classical else multiplicity_tutte
    result = compute(X, max_list_size=args.max_subsets)
    return {
        "command": "tutte",
        "input": _input_echo(X),
        "results": {
            "kind": "classical" if args.classical else "multiplicity",
            "monomial": bipoly_to_json(result.polynomial),
            "shifted": {
                "vars": ["x-1", "y-1"],
                "terms": [
                    {"i": i, "j": j, "c": str(c)}
                    for (i, j), c in sorted(
                        result.shifted_terms.items(), key=lambda t: (-t[0][0], -t[0][1])
                    )
                    if c
                ],
            },
            "is_unimodular": result.is_unimodular,
        },
    }


def _cmd_ehrhart(X: VectorList, args) -> dict:
    summary = ehrhart_summary(multiplicity_tutte(X, max_list_size=args.max_subsets))
    return {
        "command": "ehrhart",
        "input": _input_echo(X),
        "results": {
            "ehrhart": unipoly_to_json(summary.ehrhart),
            "interior": unipoly_to_json(summary.interior),
            "volume": str(summary.volume),
        },
    }


def _scalar_report(X: VectorList, args, command: str) -> dict:
    M = multiplicity_tutte(X, max_list_size=args.max_subsets)
    summary = ehrhart_summary(M)
    if command == "volume":
        value = summary.volume
        method = "M_X(1,1), the leading Ehrhart coefficient"
    else:
        q = args.q
        poly = summary.ehrhart if command == "count" else summary.interior
        exact = eval_uni(poly, q)
        assert exact.denominator == 1
        value = int(exact)
        if command == "count":
            method = "q^n M_X(1+1/q, 1); at q=1 this is M_X(2,1)"
        else:
            method = "q^n M_X(1-1/q, 1); at q=1 this is M_X(0,1)"
    results: dict = {"value": str(value), "via": method}
    if command != "volume":
        results["q"] = args.q
    return {"command": command, "input": _input_echo(X), "results": results}


def _cmd_verify(X: VectorList, args) -> dict:
    q_list = args.q_values
    M = multiplicity_tutte(X, max_list_size=args.max_subsets)
    n = M.ambient_dim
    E_theorem = ehrhart_via_theorem(M)
    E_direct = ehrhart_via_independent_sets(X, max_list_size=args.max_subsets)
    I_poly = interior_polynomial(E_theorem, n)

    checks: list[dict] = []

    def record(identity: str, lhs, rhs) -> None:
        checks.append(
            {
                "identity": identity,
                "lhs": str(lhs),
                "rhs": str(rhs),
                "pass": lhs == rhs,
            }
        )

    record(
        "ehrhart_theorem_equals_independent_sets",
        format_unipoly(E_theorem),
        format_unipoly(E_direct),
    )

    for q in q_list:
        lhs, rhs = dilation_identity_sides(X, q, max_list_size=args.max_subsets)
        record(f"dilation_identity_q{q}", format_bipoly(lhs), format_bipoly(rhs))

    # interior specialization: alternating-sign reversal of the shifted
    # coefficients must reproduce (-1)^n E(-q)
    shifted_y1 = M.polynomial.specialize_y(1).taylor_shift(1)
    alternating = UniPoly(
        [(-1) ** k * c for k, c in enumerate(shifted_y1.coefficients)]
    )
    spec_interior = reverse_coefficients(alternating, n)
    record(
        "interior_specialization",
        format_unipoly(I_poly),
        format_unipoly(spec_interior),
    )

    record(
        "coefficient_reversal",
        format_unipoly(reverse_coefficients(E_theorem, n)),
        format_unipoly(shifted_y1),
    )

    points, volume, interior_points = scalar_corollaries(M)
    record("volume_identity", str(E_theorem.coefficient(n)), str(volume))

    if args.oracle:
        oracle_kwargs = {"max_box": args.max_box, "max_elim_vars": args.max_elim_vars}
        for q in q_list:
            closed = brute_force_count(X, q, CountMode.CLOSED, **oracle_kwargs)
            opened = brute_force_count(X, q, CountMode.OPEN, **oracle_kwargs)
            record(f"closed_count_q{q}", str(int(eval_uni(E_theorem, q))), str(closed))
            record(f"interior_count_q{q}", str(int(eval_uni(I_poly, q))), str(opened))
        closed1 = brute_force_count(X, 1, CountMode.CLOSED, **oracle_kwargs)
        opened1 = brute_force_count(X, 1, CountMode.OPEN, **oracle_kwargs)
        record("corollary_points", str(points), str(closed1))
        record("corollary_interior_points", str(interior_points), str(opened1))

    return {
        "command": "verify",
        "input": _input_echo(X),
        "results": {
            "ehrhart": unipoly_to_json(E_theorem),
            "interior": unipoly_to_json(I_poly),
            "all_pass": all(c["pass"] for c in checks),
        },
        "checks": checks,
    }


# ---------------------------------------------------------------------------
# Rendering

def _render_pretty(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    echo = report["input"]
    vecs = " ".join("(" + ",".join(map(str, v)) + ")" for v in echo["vectors"])
    lines.append(f"input: dim={echo['dim']} vectors={vecs}")
    results = report.get("results", {})
    command = report["command"]
    if command == "tutte":
        poly = bipoly_from_json(results["monomial"])
        shifted = {
            (t["i"], t["j"]): int(t["c"]) for t in results["shifted"]["terms"]
        }
        lines.append(f"kind: {results['kind']}")
        lines.append(f"monomial: {format_bipoly(poly)}")
        lines.append(f"shifted:  {format_shifted(shifted)}")
        lines.append(f"unimodular: {results['is_unimodular']}")
    elif command == "ehrhart":
        lines.append(f"ehrhart:  {format_unipoly(unipoly_from_json(results['ehrhart']))}")
        lines.append(f"interior: {format_unipoly(unipoly_from_json(results['interior']))}")
        lines.append(f"volume:   {results['volume']}")
    elif command in ("count", "interior", "volume"):
        if "q" in results:
            lines.append(f"q: {results['q']}")
        lines.append(f"value: {results['value']}")
        lines.append(f"via: {results['via']}")
    elif command == "verify":
        for check in report["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            lines.append(
                f"{status} {check['identity']}: lhs={check['lhs']} rhs={check['rhs']}"
            )
        lines.append(f"all identities pass: {report['results']['all_pass']}")
    if "timing_ms" in report:
        lines.append(f"timing_ms: {report['timing_ms']}")
    return "\n".join(lines)


def _emit(report: dict, args) -> None:
    if args.pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report, separators=(", ", ": ")))


# ---------------------------------------------------------------------------
# Parser

def _add_common(parser: argparse.ArgumentParser, *, with_q: bool = False) -> None:
    parser.add_argument(
        "input",
        nargs="?",
        default="-",
        help='JSON input file, or "-" for stdin (default)',
    )
    parser.add_argument(
        "--vectors",
        help='inline vector list, e.g. "3,0;0,2;1,1" (overrides the input file)',
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    parser.add_argument(
        "--timing", action="store_true", help="add wall-clock milliseconds to the report"
    )
    parser.add_argument(
        "--max-subsets",
        type=int,
        default=MAX_LIST_SIZE,
        metavar="N",
        help=f"refuse lists longer than N vectors, i.e. 2^N sublists (default {MAX_LIST_SIZE})",
    )
    if with_q:
        parser.add_argument("--q", type=int, default=1, help="dilation factor (default 1)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zonotutte",
        description="Exact Tutte/Ehrhart computations for integer zonotopes",
    )
    parser.add_argument("--version", action="version", version=f"zonotutte {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tutte = sub.add_parser("tutte", help="Tutte polynomial of the list")
    _add_common(p_tutte)
    p_tutte.add_argument(
        "--classical", action="store_true", help="unit weights instead of multiplicities"
    )
    p_tutte.set_defaults(handler=_cmd_tutte)

    p_ehrhart = sub.add_parser("ehrhart", help="Ehrhart and interior polynomials")
    _add_common(p_ehrhart)
    p_ehrhart.set_defaults(handler=_cmd_ehrhart)

    for name, help_text in (
        ("count", "lattice points of the dilated zonotope"),
        ("volume", "volume of the zonotope"),
        ("interior", "interior lattice points of the dilated zonotope"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p, with_q=(name != "volume"))
        p.set_defaults(handler=lambda X, args, _name=name: _scalar_report(X, args, _name))

    p_verify = sub.add_parser("verify", help="run the identity suite")
    _add_common(p_verify)
    p_verify.add_argument(
        "--q-list",
        default="1,2",
        metavar="Q,Q,...",
        help="dilation factors for the per-q identities (default 1,2)",
    )
    p_verify.add_argument(
        "--oracle",
        action="store_true",
        help="also cross-check counts against the brute-force oracle",
    )
    p_verify.add_argument(
        "--max-box",
        type=int,
        default=MAX_BOX_POINTS,
        metavar="N",
        help=f"bounding-box point cap for the oracle (default {MAX_BOX_POINTS})",
    )
    p_verify.add_argument(
        "--max-elim-vars",
        type=int,
        default=MAX_ELIM_VARS,
        metavar="N",
        help=f"variable cap for exact elimination (default {MAX_ELIM_VARS})",
    )
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if getattr(args, "q", 1) < 1:
        print(f"error: q must be >= 1, got {args.q}", file=sys.stderr)
        return EXIT_BAD_Q

    try:
        if args.command == "verify":
            args.q_values = _parse_q_list(args.q_list)
            if any(q < 1 for q in args.q_values):
                print("error: every q must be >= 1", file=sys.stderr)
                return EXIT_BAD_Q
        X = _load_input(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    start = time.perf_counter()
    try:
        report = args.handler(X, args)
    except DimensionDeficient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (ListTooLarge, EliminationTooLarge, BoxTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.timing:
        report["timing_ms"] = int((time.perf_counter() - start) * 1000)

    _emit(report, args)
    if args.command == "verify" and not report["results"]["all_pass"]:
        return EXIT_IDENTITY_FAILED
    return EXIT_OK


def run() -> None:
    sys.exit(main())
