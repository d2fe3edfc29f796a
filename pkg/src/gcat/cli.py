"""Command line entry point ``gcat``.

Exit codes: 0 success, 1 a verified property failed, 2 bad input,
3 the Groebner engine disagreed with the row-reduction or gcd oracle.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import random
import sys

from . import serialize
from .categories import GAMMA_OS, NAT
from .finset import CatKind, enumerate_homs
from .groebner import (
    SubfunctorPresentation,
    TruncationError,
    buchberger,
    hilbert_table,
    is_member,
    oracle_member,
)
from .linalg import check_prime
from .orders import find_domination
from .polys import format_poly, from_element, gcd_member, parse_poly, to_element
from .sampling import random_sequence
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3

log = logging.getLogger("gcat")


class InputError(Exception):
    pass


def _emit(text: str, path: str | None = None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _prime(text: str) -> int:
    try:
        return check_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _hilbert_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["level", "dim_standard_monomials", "dim_rank_oracle", "agree"])
    for t, std, rk, ok in rows:
        w.writerow([t, std, rk, int(ok)])
    return buf.getvalue()


def cmd_homs(args) -> int:
    kind = CatKind.parse(args.cat)
    maps = enumerate_homs(kind, args.m, args.n)
    if args.format == "json":
        out = {"kind": kind.value, "m": args.m, "n": args.n, "count": len(maps),
               "maps": serialize.finmaps_to_json(maps)}
        _emit(json.dumps(out, indent=2) + "\n")
    else:
        lines = [f"# count: {len(maps)}", "values"]
        lines += [" ".join(map(str, f.values)) for f in maps]
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_wqo(args) -> int:
    if args.input:
        seq = serialize.finmaps_from_json(serialize.load(args.input))
        codomains = {f.n for f in seq}
        if len(codomains) > 1:
            raise InputError(f"sequence mixes codomains {sorted(codomains)}")
    else:
        rng = random.Random(args.seed)
        seq = random_sequence(rng, args.budget, args.n, args.max_domain)
    result = find_domination(seq, args.budget, args.mode)
    out = {"mode": args.mode, "budget": args.budget, "length": min(len(seq), args.budget), "result": result}
    if result is not None and args.mode == "first_pair":
        i, j = result
        out["pair"] = [seq[i].to_json(), seq[j].to_json()]
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


def _load_presentation(args) -> SubfunctorPresentation:
    gens = serialize.elements_from_json(serialize.load(args.gens), args.p)
    target = args.target
    if gens:
        targets = {g.target for g in gens}
        if len(targets) > 1:
            raise InputError(f"generators have different targets {sorted(targets)}")
        if target is not None and target not in targets:
            raise InputError(f"--target {target} does not match the generators")
        cat = gens[0].cat
        return SubfunctorPresentation(gens, gens[0].target, args.width, cat, gens[0].k, args.p)
    if target is None:
        raise InputError("--target is required when there are no generators")
    return SubfunctorPresentation([], target, args.width, GAMMA_OS, args.k, args.p)


def cmd_groebner(args) -> int:
    P = _load_presentation(args)
    gb = buchberger(P)
    rows = hilbert_table(P, gb)
    _emit(serialize.dump(serialize.basis_to_json(gb)), args.out)
    if args.hilbert:
        _emit(_hilbert_csv(rows), args.hilbert)
    if args.check_oracle:
        bad = [r for r in rows if not r[3]]
        if bad:
            log.error("Hilbert mismatch at levels %s", [r[0] for r in bad])
            return EXIT_ORACLE
    return EXIT_OK


def cmd_member(args) -> int:
    gb = serialize.basis_from_json(serialize.load(args.basis))
    v = serialize.element_from_json(serialize.load(args.element), gb.p)
    ans = is_member(v, gb)
    out = {"member": ans}
    code = EXIT_OK
    if args.gens:
        gens = serialize.elements_from_json(serialize.load(args.gens), gb.p)
        P = SubfunctorPresentation(gens, gb.target, gb.width, gb.cat, gb.k, gb.p)
        ref = oracle_member(v, P)
        out["oracle"] = ref
        if ref != ans:
            code = EXIT_ORACLE
    _emit(json.dumps(out) + "\n")
    return code


def cmd_hilbert(args) -> int:
    P = _load_presentation(args)
    rows = hilbert_table(P)
    if args.format == "json":
        _emit(json.dumps([{"level": t, "dim_standard_monomials": s, "dim_rank_oracle": r, "agree": ok}
                          for t, s, r, ok in rows], indent=2) + "\n")
    else:
        _emit(_hilbert_csv(rows))
    return EXIT_OK if all(r[3] for r in rows) else EXIT_ORACLE


def cmd_verify(args) -> int:
    params = {"seed": args.seed, "trials": args.trials, "max": args.max}
    rep = run_suite(args.suite, **params)
    _emit(json.dumps(rep.to_json(), indent=2, default=repr) + "\n", args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_demo_poly(args) -> int:
    p, deg = args.p, args.deg
    gens = [parse_poly(s, p) for s in args.gens.split(",") if s.strip()]
    P = SubfunctorPresentation([to_element(g, p) for g in gens], 0, deg, NAT, 1, p)
    gb = buchberger(P)
    if p ** (deg + 1) <= 4096:
        probes = [list(c) for c in itertools.product(range(p), repeat=deg + 1)]
        mode = "exhaustive"
    else:
        rng = random.Random(args.seed)
        probes = [[rng.randrange(p) for _ in range(deg + 1)] for _ in range(args.probes)]
        mode = "random"
    disagree = []
    members = 0
    for a in probes:
        while a and a[-1] == 0:
            a.pop()
        got = is_member(to_element(a, p), gb)
        ref = gcd_member(a, gens, p)
        members += got
        if got != ref:
            disagree.append(format_poly(a))
    out = {
        "p": p,
        "degree_bound": deg,
        "generators": [format_poly(g) for g in gens],
        "basis": [format_poly(from_element(b)) for b in gb.elements],
        "hilbert": [r[1] for r in hilbert_table(P, gb)],
        "probes": len(probes),
        "probe_mode": mode,
        "members": members,
        "disagreements": disagree,
        "agrees_with_gcd": not disagree,
    }
    _emit(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if not disagree else EXIT_ORACLE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gcat", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("homs", help="list morphisms m -> n of a finite-set category")
    sp.add_argument("--cat", required=True, choices=["all", "sur", "os", "inj"])
    sp.add_argument("--from", dest="m", type=int, required=True)
    sp.add_argument("--to", dest="n", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_homs)

    sp = sub.add_parser("wqo", help="search a sequence for a dominated pair or chain")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="JSON list of maps")
    src.add_argument("--random", action="store_true", help="draw a random sequence")
    sp.add_argument("--budget", type=_positive, default=200)
    sp.add_argument("--mode", choices=["first_pair", "chain"], default="first_pair")
    sp.add_argument("--n", type=_positive, default=2)
    sp.add_argument("--max-domain", type=int, default=12)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_wqo)

    for name, func, helptext in (("groebner", cmd_groebner, "complete generators to a truncated Groebner basis"),
                                 ("hilbert", cmd_hilbert, "tabulate dimensions of F(t)")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--gens", required=True, help="JSON list of generator elements")
        sp.add_argument("--p", type=_prime, required=True)
        sp.add_argument("--width", "-T", type=_positive, required=True)
        sp.add_argument("--target", type=int)
        sp.add_argument("--k", type=int, default=1)
        if name == "groebner":
            sp.add_argument("--out", help="basis JSON path (stdout if omitted)")
            sp.add_argument("--hilbert", help="Hilbert CSV path")
            sp.add_argument("--check-oracle", action="store_true")
        else:
            sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.set_defaults(func=func)

    sp = sub.add_parser("member", help="decide membership against a basis file")
    sp.add_argument("--basis", required=True)
    sp.add_argument("--element", required=True)
    sp.add_argument("--gens", help="generators, to cross-check with the rank oracle")
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--max", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("demo", help="worked examples")
    demo = sp.add_subparsers(dest="demo", required=True)
    dp = demo.add_parser("poly", help="one-variable polynomials as modules over (N, +)")
    dp.add_argument("--gens", required=True, help='comma separated, e.g. "x^2+x+1,x^3+1"')
    dp.add_argument("--p", type=_prime, required=True)
    dp.add_argument("--deg", type=_positive, default=8)
    dp.add_argument("--probes", type=_positive, default=1000)
    dp.add_argument("--seed", type=int, default=0)
    dp.set_defaults(func=cmd_demo_poly)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, TruncationError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
