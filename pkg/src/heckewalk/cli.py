"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
With --json the payload is a single JSON document on stdout; diagnostics
always go to stderr.  Sequences are comma-separated positive integers
(e.g. 1,2,1,2), permutations comma-separated 1-based one-line notation,
and rationals p/q strings.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from fractions import Fraction

from . import closedform, hecke, seq, walk
from .perm import check_perm, pad
from .qpoly import parse_rational, rational_to_json
from .seq import check_sequence


def _parse_seq(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        return check_sequence(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad sequence {text!r}: {exc}") from exc


def _parse_perm(text: str):
    try:
        return check_perm(int(part) for part in text.strip().split(","))
    except ValueError as exc:
        raise ValueError(f"bad permutation {text!r}: {exc}") from exc


def _fmt_seq(r) -> str:
    return ",".join(map(str, r)) if r else "(empty)"


def _fmt_perm(w) -> str:
    return ",".join(map(str, w))


def _emit_json(payload) -> None:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _require_seed(args) -> int:
    """Randomized commands need an explicit seed in scripted (--json) mode."""
    if args.seed is not None:
        return args.seed
    if getattr(args, "json", False):
        raise ValueError("--seed is required with --json (reproducible scripted runs)")
    seed = secrets.randbits(64)
    print(f"note: no --seed given, using {seed}", file=sys.stderr)
    return seed


# -- subcommands -----------------------------------------------------------

def cmd_expand(args) -> int:
    r = _parse_seq(args.sequence)
    h = hecke.expand(r, args.degree, force=args.force)
    if args.json:
        _emit_json(h.to_json())
    else:
        print(f"degree {h.degree}, {len(h.terms)} terms")
        for w in sorted(h.terms):
            print(f"  {_fmt_perm(w)}    {h.terms[w]}")
    return 0


def cmd_alpha(args) -> int:
    r = _parse_seq(args.sequence)
    w = _parse_perm(args.perm)
    if args.degree is not None:
        w = pad(w, args.degree)
    value = closedform.alpha(r, w)
    if args.json:
        _emit_json({"sequence": list(r), "perm": list(w), "coeff": value.to_json()})
    else:
        print(value)
    return 0


def cmd_alpha_table(args) -> int:
    r = _parse_seq(args.sequence)
    cls = seq.classify(r)
    table = closedform.alpha_table(r, args.degree, classification=cls)
    if args.json:
        _emit_json({
            "sequence": list(r),
            "degree": args.degree or ((max(r) + 1) if r else 1),
            "classification": cls.to_json(),
            "entries": [{"perm": list(w), "coeff": table[w].to_json()}
                        for w in sorted(table)],
        })
    else:
        print(f"classification: {cls.tag}, {len(table)} entries")
        for w in sorted(table):
            print(f"  {_fmt_perm(w)}    {table[w]}")
    return 0


def cmd_verify(args) -> int:
    r = _parse_seq(args.sequence)
    report = closedform.verify(r, args.degree, force=args.force)
    if args.json:
        _emit_json(report.to_json())
    else:
        print(f"sequence {_fmt_seq(r)}: classification {report.classification.tag}")
        if report.classification.witness is not None:
            print(f"  witness {_fmt_seq(report.classification.witness)} "
                  f"({report.classification.inner})")
        if not report.entries:
            print("  no closed form to check")
        elif report.all_match:
            print(f"  all {len(report.entries)} coefficients match the expansion")
        else:
            bad = report.mismatches()
            print(f"  MISMATCH on {len(bad)} of {len(report.entries)} coefficients:")
            for w, e in sorted(bad.items()):
                print(f"    {_fmt_perm(w)}: closed {e.closed} vs expansion {e.oracle}")
    return 0 if report.all_match else 1


def cmd_tight_check(args) -> int:
    r = _parse_seq(args.sequence)
    result = seq.is_tight(r)
    if args.json:
        _emit_json({"sequence": list(r), "tight": result})
    else:
        print("tight" if result else "not tight")
    return 0


def cmd_tight_enumerate(args) -> int:
    found = seq.enumerate_tight(args.length)
    if args.json:
        _emit_json({"length": args.length, "count": len(found),
                    "sequences": [list(s) for s in found]})
    else:
        for s in found:
            print(_fmt_seq(s))
        print(f"{len(found)} tight sequences of length {args.length}", file=sys.stderr)
    return 0


def cmd_tight_classify(args) -> int:
    r = _parse_seq(args.sequence)
    cls = seq.classify(r)
    if args.json:
        _emit_json({"sequence": list(r), **cls.to_json()})
    else:
        line = cls.tag
        if cls.witness is not None:
            line += f" (witness {_fmt_seq(cls.witness)}, {cls.inner})"
        if cls.uses_inverse:
            line += " [reads inversions off w^-1]"
        print(line)
    return 0


def cmd_walk_exact(args) -> int:
    r = _parse_seq(args.sequence)
    q = parse_rational(args.q)
    dist = walk.exact_distribution(r, q, args.degree)
    if args.json:
        _emit_json(dist.to_json())
    else:
        print(f"exact walk law, q = {q}, degree {dist.degree}")
        for w in sorted(dist.probs):
            print(f"  {_fmt_perm(w)}    {dist.probs[w]}")
    return 0


def cmd_walk_simulate(args) -> int:
    r = _parse_seq(args.sequence)
    seed = _require_seed(args)
    config = walk.WalkConfig(q=parse_rational(args.q), samples=args.samples, seed=seed,
                             max_restarts_per_sample=args.max_restarts)
    dist = walk.simulate(r, config, args.degree)
    if args.json:
        payload = dist.to_json()
        payload.update(samples=args.samples, seed=seed)
        _emit_json(payload)
    else:
        print(f"simulated walk, q = {args.q}, {args.samples} samples, seed {seed}")
        for w in sorted(dist.probs):
            print(f"  {_fmt_perm(w)}    {dist.probs[w]:.6f}")
    return 0


def cmd_walk_compare(args) -> int:
    r = _parse_seq(args.sequence)
    q = parse_rational(args.q)
    seed = _require_seed(args)
    exact = walk.exact_distribution(r, q, args.degree)
    config = walk.WalkConfig(q=q, samples=args.samples, seed=seed,
                             max_restarts_per_sample=args.max_restarts)
    empirical = walk.simulate(r, config, args.degree)
    tv = walk.total_variation(exact, empirical)
    if args.json:
        _emit_json({
            "sequence": list(r),
            "q": rational_to_json(q),
            "samples": args.samples,
            "seed": seed,
            "exact": exact.to_json(),
            "empirical": empirical.to_json(),
            "total_variation": float(tv),
        })
    else:
        print(f"q = {q}, {args.samples} samples, seed {seed}")
        print(f"  {'perm':<12} {'exact':<12} empirical")
        for w in sorted(set(exact.probs) | set(empirical.probs)):
            print(f"  {_fmt_perm(w):<12} {str(exact.prob(w)):<12} {empirical.prob(w):.6f}")
        print(f"total variation distance: {float(tv):.6f}")
    return 0


# -- parser ----------------------------------------------------------------

def _add_json(p):
    p.add_argument("--json", action="store_true", help="emit a JSON document on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckewalk",
        description="Exact Hecke-algebra product expansion and the matching "
                    "random walks on the symmetric group.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand the product of (1 + [k]T_k) factors")
    p.add_argument("sequence", help="comma-separated letters, e.g. 1,2,1,2")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--force", action="store_true", help="allow degree > 9")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit a JSON document on stdout")
    group.add_argument("--table", action="store_true", help="tabular output (default)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("alpha", help="closed-form coefficient of one permutation")
    p.add_argument("sequence")
    p.add_argument("perm", help="comma-separated one-line notation, e.g. 3,1,4,2")
    p.add_argument("--degree", type=int, default=None, help="pad the permutation up to this degree")
    _add_json(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("alpha-table", help="closed-form coefficients over the whole downset")
    p.add_argument("sequence")
    p.add_argument("--degree", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=cmd_alpha_table)

    p = sub.add_parser("verify", help="check the closed form against brute-force expansion")
    p.add_argument("sequence")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--force", action="store_true", help="allow degree > 9")
    _add_json(p)
    p.set_defaults(func=cmd_verify)

    tight = sub.add_parser("tight", help="tight-sequence tools").add_subparsers(
        dest="subcommand", required=True)
    p = tight.add_parser("check", help="is the sequence tight?")
    p.add_argument("sequence")
    _add_json(p)
    p.set_defaults(func=cmd_tight_check)
    p = tight.add_parser("enumerate", help="all tight sequences of a given length")
    p.add_argument("length", type=int)
    _add_json(p)
    p.set_defaults(func=cmd_tight_enumerate)
    p = tight.add_parser("classify", help="which closed-form family covers the sequence")
    p.add_argument("sequence")
    _add_json(p)
    p.set_defaults(func=cmd_tight_classify)

    wk = sub.add_parser("walk", help="random walks on the symmetric group").add_subparsers(
        dest="subcommand", required=True)
    p = wk.add_parser("exact", help="exact walk law (rational arithmetic)")
    p.add_argument("sequence")
    p.add_argument("--q", required=True, help="rational in (0,1], e.g. 1/2")
    p.add_argument("--degree", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=cmd_walk_exact)
    for name, fn in (("simulate", cmd_walk_simulate), ("compare", cmd_walk_compare)):
        p = wk.add_parser(name, help=f"{name} the walk by Monte Carlo sampling")
        p.add_argument("sequence")
        p.add_argument("--q", required=True)
        p.add_argument("--samples", type=int, required=True)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--max-restarts", type=int, default=10**6)
        _add_json(p)
        p.set_defaults(func=fn)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
