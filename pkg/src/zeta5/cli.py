"""Batch command-line interface with machine-readable output envelopes.

Every subcommand prints a single envelope: schema_version, command, echoed
inputs, result payload, status.  JSON output is canonical (fixed field order,
no timestamps) and therefore bit-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .conditions import check_conditions, enumerate_pairs
from .cyclotomic import CycInt, NotNormalizable
from .residues import PrimeIdealRep, build_residue_field
from .search import find_solutions
from .splitting import KummerFieldDesc, factor_f2_prime, kummer_splitting, splitting_type
from .symbols import quintic_symbol
from .verifier import VERIFIED, verify_theorem

SCHEMA_VERSION = "1"


def _parse_cyc(text: str) -> CycInt:
    """CycInt syntax: 'c0,c1,c2,c3' or a bare integer."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) == 1:
        return CycInt.from_int(int(parts[0]))
    if len(parts) != 4:
        raise ValueError("expected a bare integer or four comma-separated coefficients")
    return CycInt(*(int(s) for s in parts))


def _parse_prime_spec(text: str) -> PrimeIdealRep:
    """Prime spec: a rational prime, or 'Q:i' for prime i of a factored q."""
    if ":" in text:
        q_text, idx_text = text.split(":", 1)
        q, idx = int(q_text), int(idx_text)
        if idx not in (1, 2):
            raise ValueError("prime index must be 1 or 2")
        return factor_f2_prime(q)[idx - 1]
    return build_residue_field(CycInt.from_int(int(text)))


def _prime_rep_dict(rep: PrimeIdealRep) -> dict:
    return {
        "generator": list(rep.generator.coeffs),
        "q": rep.q,
        "f": rep.f,
        "absolute_norm": rep.absolute_norm(),
        "modulus_poly": list(rep.field.modulus_poly),
        "zeta_image": list(rep.field.zeta_image),
    }


def _cmd_split(args) -> tuple[dict, int]:
    st = splitting_type(args.p)
    return {"p": args.p, "e": st.e, "f": st.f, "r": st.r}, 0


def _cmd_factor(args) -> tuple[dict, int]:
    pi1, pi2 = factor_f2_prime(args.q)
    return {"q": args.q, "pi1": _prime_rep_dict(pi1), "pi2": _prime_rep_dict(pi2)}, 0


def _cmd_check(args) -> tuple[dict, int]:
    return check_conditions(args.p, args.q).to_dict(), 0


def _cmd_pairs(args) -> tuple[dict, int]:
    reports = enumerate_pairs(args.p_max, args.q_max)
    return {"count": len(reports), "pairs": [r.to_dict() for r in reports]}, 0


def _cmd_symbol(args) -> tuple[dict, int]:
    alpha = _parse_cyc(args.alpha)
    rep = _parse_prime_spec(args.over)
    value = quintic_symbol(alpha, rep)
    return {"alpha": list(alpha.coeffs), "over": _prime_rep_dict(rep), "symbol": value.to_dict()}, 0


def _cmd_kummer(args) -> tuple[dict, int]:
    mu = _parse_cyc(args.mu)
    rep = _parse_prime_spec(args.over)
    split = kummer_splitting(KummerFieldDesc(mu), rep)
    return {
        "mu": list(mu.coeffs),
        "over": _prime_rep_dict(rep),
        "case": split.case,
        "symbol": split.symbol.to_dict(),
    }, 0


def _cmd_verify(args) -> tuple[dict, int]:
    cert = verify_theorem(args.p, args.q)
    return cert.to_dict(), 0 if cert.verdict == VERIFIED else 1


def _cmd_search(args) -> tuple[dict, int]:
    candidates = find_solutions(args.p, args.q, args.y_bound)
    nontrivial = [c for c in candidates if not c.trivial]
    return {
        "p": args.p,
        "q": args.q,
        "y_bound": args.y_bound,
        "candidates": [c.to_dict() for c in candidates],
        "nontrivial_count": len(nontrivial),
    }, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta5",
        description="Exact quintic-cyclotomic toolkit: splitting, symbols, "
        "hypothesis checks, proof-replay certificates and solution search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, extra=()):
        p.add_argument("--format", choices=["json", "text", *extra], default="text")

    p = sub.add_parser("split", help="splitting type (e, f, r) of a rational prime")
    p.add_argument("p", type=int)
    fmt(p)
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("factor", help="factor a prime q = 4 (mod 5) as pi1 * pi2")
    p.add_argument("q", type=int)
    fmt(p)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("check", help="hypothesis report for a pair (p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    fmt(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("pairs", help="enumerate qualifying pairs in a range")
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    fmt(p, extra=("csv",))
    p.set_defaults(handler=_cmd_pairs)

    p = sub.add_parser("symbol", help="quintic residue symbol {alpha / prime}")
    p.add_argument("--alpha", required=True, help="c0,c1,c2,c3 or a bare integer")
    p.add_argument("--over", required=True, help="rational prime, or Q:i for prime i over Q")
    fmt(p)
    p.set_defaults(handler=_cmd_symbol)

    p = sub.add_parser("kummer", help="splitting of a prime in the Kummer extension by mu^(1/5)")
    p.add_argument("--mu", required=True, help="c0,c1,c2,c3 or a bare integer")
    p.add_argument("--over", required=True, help="rational prime, or Q:i for prime i over Q")
    fmt(p)
    p.set_defaults(handler=_cmd_kummer)

    p = sub.add_parser("verify", help="replay the nonexistence argument for (p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", help="also write the json envelope to this file")
    fmt(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive solution search within |y| <= y-bound")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--y-bound", type=int, required=True)
    fmt(p)
    p.set_defaults(handler=_cmd_search)

    return parser


def _inputs_dict(args) -> dict:
    skip = {"command", "handler", "format", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render_text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def _pairs_csv(result: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "q", "order_p_mod_q4", "passes"])
    for row in result["pairs"]:
        writer.writerow([row["p"], row["q"], row["primitive_root_order"], row["overall"]])
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = _inputs_dict(args)
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "result": None,
        "status": "ok",
    }
    try:
        result, exit_code = args.handler(args)
    except (ValueError, ZeroDivisionError, ArithmeticError, NotNormalizable) as exc:
        envelope["status"] = "error"
        envelope["error_message"] = str(exc)
        print(json.dumps(envelope, indent=2) if args.format == "json"
              else "\n".join(_render_text(envelope)))
        return 1
    envelope["result"] = result

    json_text = json.dumps(envelope, indent=2)
    if args.format == "json":
        print(json_text)
    elif args.format == "csv" and args.command == "pairs":
        sys.stdout.write(_pairs_csv(result))
    else:
        print("\n".join(_render_text(envelope)))

    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json_text + "\n")
    return exit_code


def run_command(argv: list[str]) -> int:
    """Programmatic entry point; returns the process exit code."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
