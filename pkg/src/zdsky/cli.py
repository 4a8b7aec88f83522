"""Command-line interface: ``zdsky <command> ...`` (or ``python -m zdsky``)."""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from typing import Callable, Sequence

from .algebra import AlgebraContext, basis_product, enumerate_trips, trip_count
from .artifacts import (
    Palette,
    atomic_write,
    balloon_ride,
    build_table,
    export_csv,
    export_json,
    flipbook,
    render_image,
)
from .emanation.counts import boxkite_count
from .emanation.recipe import is_power_of_two, prepare_recipe
from .emanation.table import et_bruteforce
from .emanation.verify import (
    CheckReport,
    four_corners_check,
    french_windows_check,
    number_hub_check,
    recipe_vs_bruteforce,
    skybox_embed_check,
)
from .errors import ZdskyError
from .structures import (
    StrutContext,
    classify_boxkite,
    enumerate_candidate_boxkites,
    hidefill_probe,
    sails,
    viziers_check,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 8

log = logging.getLogger("zdsky")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'7', '9..15' (inclusive) or '9,11,13'."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"not an integer or a..b range: {text!r}") from None


def max_n() -> int:
    raw = os.environ.get("ZDSKY_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ZDSKY_MAX_N must be an integer, got {raw!r}") from None


def check_n(n: int, *, lowest: int = 1) -> int:
    limit = max_n()
    if n < lowest:
        raise UsageError(f"--n must be at least {lowest}, got {n}")
    if n > limit:
        raise UsageError(f"N={n} exceeds ZDSKY_MAX_N={limit}")
    return n


def strut_for(n: int, S: int) -> StrutContext:
    G = 1 << (n - 1)
    if not 0 < S < G:
        raise UsageError(f"--s must lie in (0, {G}) for N={n}, got {S}")
    return StrutContext.of(n, S)


def single(values: list[int], flag: str) -> int:
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single value here")
    return values[0]


def recipe_ok(S: int) -> bool:
    return S > 8 and not is_power_of_two(S)


def emit(args, text: str | bytes) -> None:
    if args.out:
        atomic_write(args.out, text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
        sys.stdout.flush()
    else:
        sys.stdout.write(text)


# --- commands -----------------------------------------------------------

def cmd_mult(args) -> int:
    n = check_n(args.n)
    ctx = AlgebraContext(n)
    for i in (args.a, args.b):
        if not 0 <= i < ctx.dim:
            raise UsageError(f"index {i} outside 0..{ctx.dim - 1} for N={n}")
    print(basis_product(ctx, args.a, args.b))
    return EXIT_OK


def cmd_trips(args) -> int:
    n = check_n(args.n, lowest=2)
    trips = enumerate_trips(AlgebraContext(n))
    if args.format == "json":
        emit(args, json.dumps({"N": n, "count": len(trips),
                               "trips": [t.as_tuple() for t in trips] if args.list else None}) + "\n")
        return EXIT_OK
    lines = [f"N={n}: {len(trips)} trips (formula {trip_count(n)})"]
    if args.list:
        lines += [str(t.as_tuple()) for t in trips]
    emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_boxkites(args) -> int:
    n = check_n(args.n, lowest=4)
    rows = []
    for S in parse_range(args.s):
        strut = strut_for(n, S)
        for bk in enumerate_candidate_boxkites(strut):
            if args.viable and not bk.functional:
                continue
            cls = classify_boxkite(bk)
            rows.append({"S": S, "zigzag": bk.zigzag.as_tuple(), "kind": cls.kind.value,
                         "reversals": cls.reversals, "letters": bk.letters,
                         "trefoils": sails(bk).trefoils})
    if args.format == "json":
        emit(args, json.dumps(rows) + "\n")
    else:
        lines = [f"S={r['S']:<4} zigzag={r['zigzag']} {r['kind']:<6} reversals={r['reversals']} "
                 f"trefoils={list(r['trefoils'])}" for r in rows]
        emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_et(args) -> int:
    n = check_n(args.n, lowest=3)
    S = single(parse_range(args.s), "--s")
    strut = strut_for(n, S)
    if args.method == "recipe" and not recipe_ok(S):
        raise UsageError(f"--method recipe needs S > 8 and not a power of two (S={S}); use --method brute")
    et = build_table(strut, args.method, args.workers)
    fmt = args.format
    if fmt == "csv":
        emit(args, export_csv(et))
    elif fmt == "json":
        emit(args, export_json(et))
    else:
        if not args.out and sys.stdout.isatty():
            raise UsageError(f"refusing to write binary {fmt} to a terminal; pass --out")
        emit(args, render_image(et, Palette(cell_px=args.px), fmt,
                                with_labels=args.labels, overlay=args.overlay))
    return EXIT_OK


def cmd_counts(args) -> int:
    n = check_n(args.n, lowest=3)
    rows = []
    for S in parse_range(args.s):
        strut = strut_for(n, S)
        c = boxkite_count(strut)
        row = {"N": n, "S": S, "band": c.band, "boxkite_count": c.count, "composed": c.composed,
               "candidates": trip_count(n - 2)}
        if recipe_ok(S):
            spec = prepare_recipe(S)
            row.update(B=spec.B, P_arr=list(spec.powers), residues=list(spec.residues))
        rows.append(row)
    if args.format == "json":
        emit(args, json.dumps(rows, indent=1) + "\n")
    else:
        emit(args, "".join(f"N={r['N']} S={r['S']:<4} {r['band']:<17} box-kites={r['boxkite_count']}"
                           f" of {r['candidates']}\n" for r in rows))
    return EXIT_OK


def _suite_viziers(args) -> list[CheckReport]:
    n = check_n(args.n, lowest=4)
    out = []
    for S in parse_range(args.s or "1..7"):
        rep = CheckReport("viziers", {"N": n, "S": S})
        for bk in enumerate_candidate_boxkites(strut_for(n, S)):
            if bk.functional:
                rep.expect(viziers_check(bk).holds, f"viziers fail on {bk.zigzag.as_tuple()}")
        out.append(rep)
    return out


def _nesting_suite(check: Callable[[int, int], CheckReport]):
    def run(args) -> list[CheckReport]:
        n = check_n(args.n, lowest=5)
        check_n(n + 1)
        out = []
        for S in parse_range(args.s or "9..15"):
            try:
                out.append(check(S, n))
            except ZdskyError as exc:
                log.warning("skipping S=%d: %s", S, exc)
        return out
    return run


def _suite_numberhub(args) -> list[CheckReport]:
    return [number_hub_check(check_n(args.n, lowest=4))]


def _suite_hidefill(args) -> list[CheckReport]:
    n = check_n(args.n, lowest=4)
    bits = parse_range(args.bits)
    base_limit = min(bits)
    expected = [i % 2 == 0 for i in range(len(bits) + 1)]
    rng = random.Random(args.seed)
    rep = CheckReport("hidefill", {"N": n, "bits": args.bits, "seed": args.seed})
    for _ in range(args.samples):
        S = rng.randrange(1, base_limit)
        pool = [u for u in range(1, base_limit) if u != S]
        while True:
            u, v = rng.sample(pool, 2)
            if u ^ v != S:
                break
        got = hidefill_probe(strut_for(n, S), u, v, bits)
        rep.expect(got == expected, f"S={S} ({u},{v}): {got}, expected {expected}")
    return [rep]


def _suite_equivalence(args) -> list[CheckReport]:
    n = check_n(args.n, lowest=5)
    out = []
    for S in parse_range(args.s or f"9..{(1 << (n - 1)) - 1}"):
        if not recipe_ok(S):
            log.warning("skipping S=%d: outside the recipe's domain", S)
            continue
        strut = strut_for(n, S)
        out.append(recipe_vs_bruteforce(strut, et_bruteforce(strut, workers=args.workers)))
    return out


SUITES: dict[str, Callable] = {
    "viziers": _suite_viziers,
    "recursion": _nesting_suite(skybox_embed_check),
    "fourcorners": _nesting_suite(four_corners_check),
    "frenchwindows": _nesting_suite(french_windows_check),
    "numberhub": _suite_numberhub,
    "hidefill": _suite_hidefill,
    "equivalence": _suite_equivalence,
}


def cmd_verify(args) -> int:
    reports = SUITES[args.suite](args)
    if not reports:
        raise UsageError("no checks ran for the given parameters")
    ok = all(r.ok for r in reports)
    text_out = sys.stderr if args.format == "json" else sys.stdout
    for r in reports:
        print(r.summary(), file=text_out)
        for d in r.diffs:
            print("    " + d, file=text_out)
    if args.format == "json":
        emit(args, json.dumps({"suite": args.suite, "ok": ok,
                               "reports": [r.as_dict() for r in reports]}, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_flipbook(args) -> int:
    n = check_n(args.n, lowest=3)
    if not args.out:
        raise UsageError("flipbook needs --out DIR")
    seq = flipbook(n, parse_range(args.s), args.out, palette=Palette(cell_px=args.px),
                   fmt=args.format, method=args.method, workers=args.workers, overlay=args.overlay)
    for value, path in seq.frames:
        print(f"S={value} {path}")
    return EXIT_OK if seq.frames else EXIT_FAIL


def cmd_balloon(args) -> int:
    S = single(parse_range(args.s), "--s")
    ns = [check_n(n, lowest=3) for n in parse_range(args.n)]
    if not args.out:
        raise UsageError("balloon needs --out DIR")
    seq = balloon_ride(S, ns, args.out, palette=Palette(cell_px=args.px), fmt=args.format,
                       method=args.method, workers=args.workers, overlay=args.overlay)
    for value, path in seq.frames:
        print(f"N={value} {path}")
    return EXIT_OK if seq.frames else EXIT_FAIL


# --- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zdsky", description="Zero-divisor emanation tables for the 2^N-ions.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *, n_type=int, n_required=True, s=False, fmt=("text", "json"),
            default_fmt=None, method=False, out=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=n_type, required=n_required, help="dimension exponent N (2^N-ions)")
        if s:
            sp.add_argument("--s", required=s == "required", help="strut constant: S, a..b or a,b,c")
        if method:
            sp.add_argument("--method", choices=("brute", "recipe"), default="brute")
            sp.add_argument("--workers", type=int, default=1, help="threads for brute-force tables")
        if out:
            sp.add_argument("--out", help="output path (default stdout)")
        sp.add_argument("--format", choices=fmt, default=default_fmt or fmt[0])
        sp.set_defaults(func=func)
        return sp

    sp = add("mult", cmd_mult, "signed product of two basis units", fmt=("text",), out=False)
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    sp = add("trips", cmd_trips, "count (or list) associative triplets")
    sp.add_argument("--list", action="store_true")

    sp = add("boxkites", cmd_boxkites, "candidate box-kites with classification", s="required")
    sp.add_argument("--viable", action="store_true", help="only viable (Type I/II) kites")

    sp = add("et", cmd_et, "build one emanation table", s="required",
             fmt=("csv", "json", "ppm", "svg"), method=True)
    sp.add_argument("--px", type=int, default=4, help="pixels per cell for images")
    sp.add_argument("--labels", action="store_true", help="draw label lines (skybox)")
    sp.add_argument("--overlay", action="store_true", help="outline nested skyboxes")

    add("counts", cmd_counts, "band and box-kite count per S", s="required")

    sp = add("verify", cmd_verify, "run a named verification suite", s=True, method=False)
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--bits", default="8,16", help="high bits added in turn by the hidefill suite")

    for name, func, help_, n_type in (("flipbook", cmd_flipbook, "frames over S at fixed N", int),
                                      ("balloon", cmd_balloon, "frames over N at fixed S", str)):
        sp = add(name, func, help_, n_type=n_type, s="required", fmt=("ppm", "svg"), method=True)
        sp.add_argument("--px", type=int, default=4)
        sp.add_argument("--overlay", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zdsky {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZdskyError as exc:
        print(f"zdsky {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
