"""Batch command-line surface.

Exit statuses: 0 success, 2 parse error (bad argv or unparseable object
text), 3 domain error (period mismatch, invalid window, ...), each with a
one-line diagnostic naming the error case.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import selftest
from .bn import (
    SplittingType,
    gamma_rd,
    gamma_splitting,
    splitting_d,
    splitting_type_of,
    splitting_u,
    splitting_x,
)
from .curves import (
    GENERIC,
    ChainSpec,
    G1Bundle,
    chain_tau,
    genus1_generality_report,
    wtau_points_bruteforce,
    wtau_points_via_words,
)
from .demazure import DEFAULT_ORACLE_BOUND, demazure
from .errors import DomainError, FormatError
from .formats import (
    format_chain,
    format_perm,
    format_split,
    parse_chain,
    parse_perm,
    parse_split,
    perm_to_json,
)
from .perm import (
    bruhat_leq,
    compose,
    essential_set,
    inv_count,
    inverse,
    slipface,
)
from .words import hecke_word_count, reduced_word_count, reduced_words


def _parse_box(text: str):
    try:
        apart, bpart = text.split(",")
        a0, a1 = (int(x) for x in apart.split(":"))
        b0, b1 = (int(x) for x in bpart.split(":"))
        return a0, a1, b0, b1
    except ValueError as exc:
        raise FormatError(f"bad --box (want a0:a1,b0:b1): {text!r}") from exc


def _emit_perm(p, args) -> None:
    if args.json:
        print(json.dumps(perm_to_json(p), sort_keys=True))
    else:
        print(format_perm(p))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="transperm",
        description="Calculus of transmission permutations.",
    )
    ap.add_argument("--json", action="store_true", help="emit JSON output")
    ap.add_argument(
        "--oracle-bound",
        type=int,
        default=DEFAULT_ORACLE_BOUND,
        help="candidate cap for brute-force enumerations",
    )
    ap.add_argument("--box", default=None, help="slipface table range a0:a1,b0:b1")
    ap.add_argument(
        "--count-only", action="store_true", help="print counts, not listings"
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sub.add_parser("show").add_argument("perm")
    sub.add_parser("inverse").add_argument("perm")
    for name in ("compose", "demazure", "bruhat"):
        sp = sub.add_parser(name)
        sp.add_argument("left")
        sp.add_argument("right")
    sp = sub.add_parser("slipface")
    sp.add_argument("perm")
    sp.add_argument("a", nargs="?", type=int)
    sp.add_argument("b", nargs="?", type=int)
    sub.add_parser("inv").add_argument("perm")
    sub.add_parser("ess").add_argument("perm")
    sub.add_parser("reduced-words").add_argument("perm")
    sp = sub.add_parser("hecke-count")
    sp.add_argument("perm")
    sp.add_argument("g", type=int)
    sp = sub.add_parser("gamma-rd")
    sp.add_argument("r", type=int)
    sp.add_argument("chi", type=int)
    sp = sub.add_parser("gamma-split")
    sp.add_argument("split")
    sp.add_argument("--genus", type=int, default=None, help="also report d(e)")
    sub.add_parser("split-of").add_argument("perm")
    sub.add_parser("chain-tau").add_argument("chain")
    sp = sub.add_parser("wtau-points")
    sp.add_argument("k", type=int)
    sp.add_argument("degrees", help="comma-separated component degrees")
    sp.add_argument("tau")
    sp.add_argument("--method", choices=("brute", "words"), default="brute")
    sp = sub.add_parser("genus1-report")
    sp.add_argument("k", type=int)
    sp.add_argument("bound", type=int)
    sub.add_parser("selftest")
    return ap


def _chain_from_text(text: str) -> ChainSpec:
    k, comps = parse_chain(text)
    return ChainSpec(k, tuple(G1Bundle(k, d, c) for d, c in comps))


def _chain_to_text(spec: ChainSpec) -> str:
    return format_chain(spec.k, [(b.d, b.cls) for b in spec.components])


def _sorted_chains(specs):
    return sorted(
        specs,
        key=lambda s: [(-1 if b.cls is GENERIC else b.cls) for b in s.components],
    )


def _run(args) -> None:
    cmd = args.cmd
    if cmd == "show":
        _emit_perm(parse_perm(args.perm), args)
    elif cmd == "inverse":
        _emit_perm(inverse(parse_perm(args.perm)), args)
    elif cmd == "compose":
        _emit_perm(compose(parse_perm(args.left), parse_perm(args.right)), args)
    elif cmd == "demazure":
        _emit_perm(demazure(parse_perm(args.left), parse_perm(args.right)), args)
    elif cmd == "bruhat":
        print(
            "true" if bruhat_leq(parse_perm(args.left), parse_perm(args.right))
            else "false"
        )
    elif cmd == "slipface":
        p = parse_perm(args.perm)
        if args.box is not None:
            a0, a1, b0, b1 = _parse_box(args.box)
            rows = [
                [slipface(p, a, b) for b in range(b0, b1)] for a in range(a0, a1)
            ]
            if args.json:
                print(json.dumps({"a0": a0, "b0": b0, "values": rows}))
            else:
                for row in rows:
                    print("\t".join(str(v) for v in row))
        elif args.a is None or args.b is None:
            raise FormatError("slipface needs either a and b or --box")
        else:
            print(slipface(p, args.a, args.b))
    elif cmd == "inv":
        print(inv_count(parse_perm(args.perm)))
    elif cmd == "ess":
        pairs = sorted(essential_set(parse_perm(args.perm)))
        if args.json:
            print(json.dumps([list(x) for x in pairs]))
        else:
            print(" ".join(f"({a},{b})" for a, b in pairs) if pairs else "empty")
    elif cmd == "reduced-words":
        p = parse_perm(args.perm)
        if args.count_only:
            print(reduced_word_count(p))
        else:
            for letters in reduced_words(p):
                print(",".join(str(m) for m in letters) if letters else "(empty)")
    elif cmd == "hecke-count":
        print(hecke_word_count(parse_perm(args.perm), args.g))
    elif cmd == "gamma-rd":
        _emit_perm(gamma_rd(args.r, args.chi), args)
    elif cmd == "gamma-split":
        k, entries = parse_split(args.split)
        e = SplittingType(k, entries)
        p = gamma_splitting(e)
        if args.json:
            payload = {
                "perm": perm_to_json(p),
                "u": splitting_u(e),
                "x": {m: splitting_x(e, m) for m in range(-3, 4)},
            }
            if args.genus is not None:
                payload["d"] = splitting_d(e, args.genus)
            print(json.dumps(payload, sort_keys=True))
        else:
            print(format_perm(p))
            print(f"u = {splitting_u(e)}")
            xs = " ".join(f"x({m})={splitting_x(e, m)}" for m in range(-3, 4))
            print(xs)
            if args.genus is not None:
                print(f"d = {splitting_d(e, args.genus)} (genus {args.genus})")
    elif cmd == "split-of":
        e = splitting_type_of(parse_perm(args.perm))
        print(format_split(e.k, e.entries))
    elif cmd == "chain-tau":
        _emit_perm(chain_tau(_chain_from_text(args.chain)), args)
    elif cmd == "wtau-points":
        degrees = [int(x) for x in args.degrees.split(",")]
        tau = parse_perm(args.tau)
        fn = wtau_points_bruteforce if args.method == "brute" else wtau_points_via_words
        specs = _sorted_chains(fn(args.k, degrees, tau))
        if args.count_only:
            print(len(specs))
        elif args.json:
            print(json.dumps([_chain_to_text(s) for s in specs]))
        else:
            for s in specs:
                print(_chain_to_text(s))
            if not specs:
                print("empty")
    elif cmd == "genus1-report":
        rep = genus1_generality_report(args.k, args.bound)
        if args.json:
            print(
                json.dumps(
                    {
                        "k": rep.k,
                        "bound": rep.bound,
                        "passed": rep.passed,
                        "checks": [
                            {
                                "window": list(c.window),
                                "shift": c.shift,
                                "inv": c.inv,
                                "locus_size": c.locus_size,
                                "ok": c.ok,
                            }
                            for c in rep.checks
                        ],
                        "mismatch": {
                            "k_prime": rep.mismatch.k_prime,
                            "inv_kprime": rep.mismatch.inv_kprime,
                            "locus_size": rep.mismatch.locus_size,
                            "flagged": rep.mismatch.flagged,
                        },
                    },
                    sort_keys=True,
                )
            )
        else:
            print(f"genus-1 generality, k={rep.k}, bound={rep.bound}")
            print(f"{'window':<20}{'shift':>6}{'inv':>5}{'locus':>7}{'ok':>5}")
            for c in rep.checks:
                w = ",".join(str(x) for x in c.window)
                print(f"[{w}]".ljust(20) + f"{c.shift:>6}{c.inv:>5}{c.locus_size:>7}"
                      + f"{'yes' if c.ok else 'NO':>5}")
            d = rep.mismatch
            print(
                f"mismatch demo: sigma_0 of period {d.k} has inv_{d.k_prime} = "
                f"{d.inv_kprime} but locus of size {d.locus_size} "
                f"({'flagged' if d.flagged else 'NOT FLAGGED'})"
            )
            print("PASS" if rep.passed else "FAIL")
        if not rep.passed:
            raise SystemExit(1)
    elif cmd == "selftest":
        ok = selftest.run_and_print()
        if not ok:
            raise SystemExit(1)


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse already printed a diagnostic
        return exc.code if exc.code is not None else 2
    try:
        _run(args)
    except FormatError as exc:
        print(f"parse error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:
        return exc.code if exc.code is not None else 1
    return 0


def run(argv) -> int:
    """Programmatic entry point used by the tests."""
    return main(list(argv))


if __name__ == "__main__":
    raise SystemExit(main())
