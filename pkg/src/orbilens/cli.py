"""Command-line interface.

Every invocation writes one JSON document (or a CSV table with
``--output csv``) to stdout.  Diagnostics go to stderr.  Exit status is 0 on
success, 1 when a reference fixture fails and 2 for bad flags or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .classes import (
    LensTuple,
    canonicalize,
    enumerate_classes,
    is_isometric,
    lower_bound,
    orbit_bound,
)
from .fixtures import run_fixtures
from .geometry import singular_signature
from .search import find_families, pattern_bound, realized_pattern_count, sufficiency_check
from .spectra import is_isospectral, multiplicity_sequence, spectral_invariant

EXIT_OK, EXIT_FIXTURE_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    command: str
    parameters: Dict[str, Any]
    payload: Any = None
    status: str = "ok"
    message: Optional[str] = None
    exit_code: int = field(default=EXIT_OK, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        out = {"command": self.command, "parameters": self.parameters, "status": self.status}
        if self.status == "ok":
            out["payload"] = self.payload
        else:
            out["message"] = self.message
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CommandResult":
        d = json.loads(text)
        return cls(d["command"], d["parameters"], d.get("payload"), d["status"], d.get("message"))


def _rational(x: Fraction) -> Dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def _parse_tuple(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("tuple must not be empty")
    return values


def _lens(q: int, values: Sequence[int]) -> LensTuple:
    return LensTuple.from_values(q, values)


def _cmd_spectrum(args) -> Any:
    t = _lens(args.q, args.tuple)
    rows = []
    for k, m in enumerate(_multiplicities(t, args.max_k, args.w)):
        if m > 0:
            rows.append({"k": k, "eigenvalue": k * (k + 2 * t.n + args.w - 2), "multiplicity": m})
    return {"tuple": list(t.entries), "spectrum": rows}


def _multiplicities(t: LensTuple, max_k: int, w: int) -> List[int]:
    if max_k < 0:
        raise ValueError(f"--max-k must be >= 0, got {max_k}")
    return list(multiplicity_sequence(t, max_k, w).values)


def _invariant_payload(t: LensTuple) -> Dict[str, Any]:
    inv = spectral_invariant(t)
    out: Dict[str, Any] = {"q": inv.q, "n": inv.n, "kind": inv.kind}
    if inv.kind == "general":
        out["multiplicities"] = list(inv.multiplicities)
    else:
        out["polynomials"] = [
            {"name": name, "set": p.source, "coefficients": list(p.coefficients)}
            for name, p in inv.named()
        ]
    return out


def _cmd_invariant(args) -> Any:
    t = _lens(args.q, args.tuple)
    return {"tuple": list(t.entries), "canonical": list(canonicalize(t).entries), **_invariant_payload(t)}


def _cmd_isometric(args) -> Any:
    a, b = _lens(args.q, args.a), _lens(args.q, args.b)
    return {
        "isometric": is_isometric(a, b),
        "canonical_a": list(canonicalize(a).entries),
        "canonical_b": list(canonicalize(b).entries),
    }


def _cmd_isospectral(args) -> Any:
    a, b = _lens(args.q, args.a), _lens(args.q, args.b)
    cert = is_isospectral(a, b, method=args.method, max_k=args.max_k)
    certificate: Dict[str, Any] = {
        "method": cert.method,
        "depth": cert.depth,
        "first_difference": cert.first_difference,
        "reason": cert.reason,
    }
    if cert.method == "invariant" and cert.compared:
        certificate["a"] = _invariant_payload(a)
        certificate["b"] = _invariant_payload(b)
    elif cert.compared:
        certificate["values"] = cert.compared
    return {
        "isospectral": cert.isospectral,
        "canonical_a": list(canonicalize(a).entries),
        "canonical_b": list(canonicalize(b).entries),
        "certificate": certificate,
    }


def _cmd_enumerate(args) -> Any:
    classes = enumerate_classes(args.q, args.n)
    if args.count_only:
        return {"count": len(classes)}
    return {"count": len(classes), "classes": [list(c.entries) for c in classes]}


def _cmd_search(args) -> Any:
    families = find_families(args.q, args.n)
    return {
        "families": [
            {"size": len(f), "verified_to": f.verified_to, "members": [list(c.entries) for c in f.members]}
            for f in families
        ]
    }


def _cmd_singular(args) -> Any:
    sig = singular_signature(_lens(args.q, args.tuple))
    return {
        "manifold": sig.is_manifold,
        "strata": [
            {
                "d": s.d,
                "count": s.count,
                "sphere_dim": s.sphere_dim,
                "isotropy_order": s.isotropy_order,
                "generator_power": s.generator_power(args.q),
            }
            for s in sig
        ],
    }


def _cmd_bounds(args) -> Any:
    out: Dict[str, Any] = {
        "lower_bound": _rational(lower_bound(args.q, args.n)),
        "orbit_bound": _rational(orbit_bound(args.q, args.n)),
    }
    try:
        suff = sufficiency_check(args.q)
    except ValueError as exc:
        print(f"note: {exc}; pattern data omitted", file=sys.stderr)
        out.update(pattern_bound=None, realized_patterns=None, sufficiency=None)
    else:
        out["pattern_bound"] = pattern_bound(args.q)
        out["realized_patterns"] = realized_pattern_count(args.q)
        out["sufficiency"] = {"form": suff.form, "lhs": suff.lhs, "rhs": suff.rhs, "satisfied": suff.satisfied}
    return out


def _cmd_verify(args) -> Any:
    results = run_fixtures(args.case)
    for r in results:
        if not r.passed:
            print(f"FAIL {r.name}: expected {r.claim}; observed {r.observed}", file=sys.stderr)
    failed = sum(not r.passed for r in results)
    return {
        "passed": len(results) - failed,
        "failed": failed,
        "fixtures": [
            {"name": r.name, "claim": r.claim, "passed": r.passed, "observed": r.observed} for r in results
        ],
    }


def _csv(payload: Dict[str, Any], command: str) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if command == "enumerate":
        if "classes" not in payload:
            writer.writerows([["count"], [payload["count"]]])
        else:
            writer.writerow(["index", "entries"])
            for i, c in enumerate(payload["classes"]):
                writer.writerow([i, " ".join(map(str, c))])
    else:
        writer.writerow(["family", "size", "verified_to", "entries"])
        for i, fam in enumerate(payload["families"]):
            for m in fam["members"]:
                writer.writerow([i, fam["size"], fam["verified_to"], " ".join(map(str, m))])
    return buf.getvalue()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbilens", description="Spectra and isospectral families of orbifold lens spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_q(p):
        p.add_argument("--q", type=int, required=True, help="order of the cyclic group")
        return p

    p = with_q(sub.add_parser("spectrum", help="eigenvalues and multiplicities"))
    p.add_argument("--tuple", type=_parse_tuple, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--w", type=int, default=0, help="number of appended fixed coordinates")
    p.set_defaults(func=_cmd_spectrum)

    p = with_q(sub.add_parser("invariant", help="character polynomials of the complement"))
    p.add_argument("--tuple", type=_parse_tuple, required=True)
    p.set_defaults(func=_cmd_invariant)

    p = with_q(sub.add_parser("isometric", help="compare canonical forms"))
    p.add_argument("--a", type=_parse_tuple, required=True)
    p.add_argument("--b", type=_parse_tuple, required=True)
    p.set_defaults(func=_cmd_isometric)

    p = with_q(sub.add_parser("isospectral", help="decide isospectrality"))
    p.add_argument("--a", type=_parse_tuple, required=True)
    p.add_argument("--b", type=_parse_tuple, required=True)
    p.add_argument("--method", choices=["invariant", "series"], default="invariant")
    p.add_argument("--max-k", type=int, default=None)
    p.set_defaults(func=_cmd_isospectral)

    p = with_q(sub.add_parser("enumerate", help="list isometry classes"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = with_q(sub.add_parser("search", help="find isospectral non-isometric families"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_search)

    p = with_q(sub.add_parser("singular", help="singular strata and isotropy"))
    p.add_argument("--tuple", type=_parse_tuple, required=True)
    p.set_defaults(func=_cmd_singular)

    p = with_q(sub.add_parser("bounds", help="class-count bounds and pattern data"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify-paper", help="run the built-in reference fixtures")
    p.add_argument("--case", default=None, help="fixture name or glob")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    result = CommandResult(args.command, params)
    try:
        result.payload = args.func(args)
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"orbilens {args.command}: {message}", file=sys.stderr)
        result.status, result.message, result.exit_code = "error", str(message), EXIT_USAGE
    else:
        if args.command == "verify-paper" and result.payload["failed"]:
            result.exit_code = EXIT_FIXTURE_FAILED

    if result.status == "ok" and getattr(args, "output", "json") == "csv":
        stdout.write(_csv(result.payload, args.command))
    else:
        stdout.write(result.to_json() + "\n")
    return result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
