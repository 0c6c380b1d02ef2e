"""Command-line surface.

Exit codes: 0 success, 2 parse error, 3 desk-scale limit exceeded,
4 invariant-suite or splitting failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DegenerateIdeal, DeskScaleExceeded, ParseError, RatpowError
from .filtrations import (check_splitting, family_to_ideal, parse_family,
                          rational_power_filtration, symbolic_power)
from .homology import lc_length, local_cohomology_table
from .ideals import MonomialIdeal, associated_primes, ideal_from_doc, parse_ideal, power
from .rational_powers import as_index, integral_closure, rational_power, rees_valuations
from .stanley import StanleyInstance, sdepth_exact, sdepth_rational_power_sequence
from .sweeps import SweepConfig, emit, run_sweep


def _load_ideal(args) -> MonomialIdeal:
    if getattr(args, "gens", None):
        if not getattr(args, "vars", None):
            raise ParseError("--gens needs --vars")
        return parse_ideal(args.gens, tuple(v.strip() for v in args.vars.split(",")))
    if not getattr(args, "ideal", None):
        raise ParseError("an ideal is required (--ideal PATH or --gens/--vars)")
    try:
        with open(args.ideal, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.ideal}: {exc}") from exc
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return ideal_from_doc(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad ideal document: {exc}") from exc
    raise ParseError("ideal files must be JSON documents with vars and gens")


def _print_ideal(ideal: MonomialIdeal) -> None:
    print(", ".join(ideal.monomial_str(g) for g in ideal.gens))


def _add_ideal_flags(sub) -> None:
    sub.add_argument("--ideal", help="path to a JSON ideal document")
    sub.add_argument("--gens", help="inline generator list, e.g. 'x^2*y, y^3'")
    sub.add_argument("--vars", help="comma-separated variable names for --gens")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratpow",
        description="Exact rational powers, closures and symbolic powers of monomial ideals")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("power", help="generators of a rational power I^(a/b)")
    _add_ideal_flags(p)
    p.add_argument("--index", required=True, help="rational exponent a/b")

    p = subs.add_parser("closure", help="integral closure of I^n")
    _add_ideal_flags(p)
    p.add_argument("--n", type=int, default=1)

    p = subs.add_parser("symbolic", help="symbolic power of a squarefree ideal")
    _add_ideal_flags(p)
    p.add_argument("--n", type=int, default=1)

    p = subs.add_parser("family", help="convert a hyperplane family to rational powers")
    p.add_argument("--in", dest="family_path", required=True,
                   help="path to a JSON family document")
    p.add_argument("--emit-ideal", action="store_true",
                   help="also print the generators of the produced ideal")

    p = subs.add_parser("rees", help="Rees valuations and the canonical denominator")
    _add_ideal_flags(p)

    for name, expl in (("depth", "depth of R/I"), ("reg", "regularity of R/I")):
        p = subs.add_parser(name, help=expl)
        _add_ideal_flags(p)

    p = subs.add_parser("lclen", help="length of a local cohomology module of R/I")
    _add_ideal_flags(p)
    p.add_argument("--i", type=int, default=0, help="cohomological index")

    p = subs.add_parser("ass", help="associated primes of R/I")
    _add_ideal_flags(p)

    p = subs.add_parser("sdepth", help="exact Stanley depth at desk scale")
    _add_ideal_flags(p)
    p.add_argument("--quotient", action="store_true", help="use R/I instead of I")
    p.add_argument("--max-n", type=int, default=0,
                   help="also report sdepth along I^(n/e) for n up to this bound")

    p = subs.add_parser("split-check", help="verify splitting containments for rational powers")
    _add_ideal_flags(p)
    p.add_argument("--m", default="2", help="comma-separated contraction factors")
    p.add_argument("--max-n", type=int, default=4)

    p = subs.add_parser("sweep", help="invariant sweep along the filtration")
    _add_ideal_flags(p)
    p.add_argument("--invariant", required=True,
                   choices=("depth", "reg", "sdepth", "ass", "lclen", "gens"))
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--family", choices=("rational", "symbolic"), default="rational")
    p.add_argument("--i", type=int, default=0, help="cohomological index for lclen")
    p.add_argument("--emit", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="emit real timings (breaks byte reproducibility)")

    subs.add_parser("check", help="run the built-in invariant suite")
    return parser


def _run(args) -> int:
    cmd = args.command
    if cmd == "power":
        _print_ideal(rational_power(_load_ideal(args), as_index(args.index)))
    elif cmd == "closure":
        _print_ideal(integral_closure(power(_load_ideal(args), args.n)))
    elif cmd == "symbolic":
        _print_ideal(symbolic_power(_load_ideal(args), args.n))
    elif cmd == "family":
        try:
            with open(args.family_path, "r", encoding="utf-8") as fh:
                family = parse_family(fh.read())
        except OSError as exc:
            raise ParseError(f"cannot read {args.family_path}: {exc}") from exc
        res = family_to_ideal(family)
        print(f"g = {res.denominator}")
        print(f"f = {res.period}")
        print(f"e = {res.e}")
        if args.emit_ideal:
            _print_ideal(res.ideal)
    elif cmd == "rees":
        ideal = _load_ideal(args)
        data = rees_valuations(ideal)
        for v, w in data.pairs:
            print(f"v={tuple(v.weights)} v(I)={v.value_on_ideal} w={tuple(w)}")
        print(f"e = {data.e}")
    elif cmd == "depth":
        print(local_cohomology_table(_load_ideal(args)).depth)
    elif cmd == "reg":
        print(local_cohomology_table(_load_ideal(args)).regularity)
    elif cmd == "lclen":
        finite, length = lc_length(_load_ideal(args), args.i)
        print(length if finite else "infinite")
    elif cmd == "ass":
        ideal = _load_ideal(args)
        for p in sorted(associated_primes(ideal), key=lambda q: q.sorted_support()):
            print(p.label(ideal.var_names))
    elif cmd == "sdepth":
        ideal = _load_ideal(args)
        if args.max_n:
            seq = sdepth_rational_power_sequence(ideal, args.max_n,
                                                 quotient=args.quotient)
            for n, value in enumerate(seq, start=1):
                print(f"{n} {value}")
            print(f"stable = {seq[-1]}")
        else:
            kind = "quotient" if args.quotient else "ideal"
            print(sdepth_exact(StanleyInstance(kind, ideal)))
    elif cmd == "split-check":
        ideal = _load_ideal(args)
        accessor = rational_power_filtration(ideal)
        all_ok = True
        for m_text in args.m.split(","):
            report = check_splitting(accessor, int(m_text), args.max_n)
            print(f"m={m_text}: " + ("pass" if report.passed else
                                     f"fail at {report.failures[0]}"))
            all_ok = all_ok and report.passed
        if not all_ok:
            return 4
    elif cmd == "sweep":
        if args.gens:
            raise ParseError("sweep reads the ideal from --ideal PATH")
        config = SweepConfig(ideal_path=args.ideal, selector=args.invariant,
                             n_start=args.min_n, n_stop=args.max_n,
                             emit=args.emit, jobs=args.jobs, family=args.family,
                             lc_index=args.i, out=args.out, timings=args.timings)
        records = run_sweep(config)
        payload = emit(records, config.emit, include_timings=config.timings)
        if config.out:
            with open(config.out, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.buffer.write(payload)
    elif cmd == "check":
        from .checks import run_all
        if not run_all():
            return 4
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DeskScaleExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DegenerateIdeal, RatpowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
