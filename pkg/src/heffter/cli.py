"""Command-line interface: ``heffter <command> ...``.

Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .constructions import AgreeableParams, classify_pair, construct
from .core import multiplier_group, multiplier_group_brute, multiplier_group_rank_one, rank_one_factors, verify_heffter
from .errors import HeffterError, ParseError, SchemaError
from .io import parse_document, render_text, serialize
from .search import SearchConfig, scan_pairs, search_rank_one

SCAN_COLUMNS = ["m", "n", "q", "prime_power", "admissible", "agreeable", "optimal", "perfect_eligible", "m_o", "n_o", "lcm_odd"]
CHECKS = ("axioms", "rank", "simple", "multipliers")


class _UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _read_array(path: str):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_document(data)


def cmd_classify(args) -> int:
    _emit_json(classify_pair(args.m, args.n).to_dict())
    return 0


def cmd_construct(args) -> int:
    params = None
    if (args.m1 is None) != (args.n1 is None):
        raise _UsageError("--m1 and --n1 must be given together")
    if args.m1 is not None:
        if args.method == "perfect":
            raise _UsageError("--m1/--n1 only apply to the agreeable construction")
        params = AgreeableParams.from_split(args.m, args.n, args.m1, args.n1)
    arr, prov = construct(args.m, args.n, args.method, params)
    if args.format == "json":
        sys.stdout.buffer.write(serialize(arr, prov))
    else:
        sys.stdout.write(render_text(arr))
    return 0


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise _UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    arr, _ = _read_array(args.file)
    report = verify_heffter(arr, rank="rank" in checks, simple="simple" in checks)
    out = report.to_dict()
    ok = True
    if "axioms" in checks:
        ok = report.is_heffter
    else:
        out["failures"] = [d for d in out["failures"] if d["check"] in ("rank_one", "globally_simple")]
    ok = ok and report.rank_one is not False and report.globally_simple is not False
    if "multipliers" in checks:
        out["multipliers"] = multiplier_group(arr).to_dict()
    _emit_json(out)
    return 0 if ok else 1


def cmd_multipliers(args) -> int:
    arr, _ = _read_array(args.file)
    if args.brute:
        group, method = multiplier_group_brute(arr), "brute"
    elif rank_one_factors(arr) is not None:
        group, method = multiplier_group_rank_one(arr), "rank_one"
    else:
        group, method = multiplier_group_brute(arr), "brute"
    out = group.to_dict()
    out["method"] = method
    _emit_json(out)
    return 0


def cmd_search(args) -> int:
    cfg = SearchConfig(args.m, args.n, args.max_candidates, args.strategy, args.seed)
    outcome = search_rank_one(cfg)
    if outcome.found is None:
        state = "space exhausted" if outcome.exhausted else "budget exhausted"
        print(f"no rank-one H({args.m},{args.n}) found: {state} after "
              f"{outcome.candidates_examined} candidates", file=sys.stderr)
        return 1
    prov = {
        "method": "search",
        "params": {"strategy": args.strategy, "seed": args.seed, "candidates_examined": outcome.candidates_examined},
    }
    if args.format == "json":
        sys.stdout.buffer.write(serialize(outcome.found, prov))
    else:
        sys.stdout.write(render_text(outcome.found))
    return 0


def _scan_row(c) -> dict:
    return {
        "m": c.m,
        "n": c.n,
        "q": c.q,
        "prime_power": f"{c.prime_power[0]}^{c.prime_power[1]}" if c.prime_power else "",
        "admissible": c.admissible,
        "agreeable": c.agreeable,
        "optimal": c.optimal_pair,
        "perfect_eligible": c.perfect_eligible,
        "m_o": c.m_o,
        "n_o": c.n_o,
        "lcm_odd": c.lcm_odd,
    }


def cmd_scan(args) -> int:
    rows = scan_pairs(args.max_q)
    if args.format == "json":
        _emit_json([c.to_dict() for c in rows])
        return 0
    w = csv.DictWriter(sys.stdout, fieldnames=SCAN_COLUMNS, lineterminator="\n")
    w.writeheader()
    for c in rows:
        w.writerow(_scan_row(c))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heffter", description="Rank-one tight Heffter arrays over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the pair (m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a rank-one H(m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["auto", "perfect", "agreeable"], default="auto")
    p.add_argument("--m1", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify an ArrayDocument")
    p.add_argument("file")
    p.add_argument("--checks", default="axioms,rank,simple")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multipliers", help="multiplier group of an ArrayDocument")
    p.add_argument("file")
    p.add_argument("--brute", action="store_true", help="test every unit instead of using the rank-one formula")
    p.set_defaults(func=cmd_multipliers)

    p = sub.add_parser("search", help="search for a rank-one H(m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--strategy", choices=["exhaustive", "seeded"], default="exhaustive")
    p.add_argument("--max-candidates", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="classify all pairs up to a field size")
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_UsageError, ParseError, SchemaError) as exc:
        print(f"heffter: {exc}", file=sys.stderr)
        return 2
    except HeffterError as exc:
        print(f"heffter: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
