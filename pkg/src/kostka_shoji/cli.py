"""Command-line front end: ``kostka-shoji <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .affinewords import ArcError, FlagType, build_word_sequence, concatenated_word, is_reduced, standard_flag_type
from .characters import CALIBRATED_ORIENTATION
from .kostka import kostka, kostka_single, kostka_table
from .multipartitions import Multipartition, dominates
from .pseudoroots import CACHE_ENV, build_system
from . import verify as V

DEFAULT_SEED = 20180125

CONVENTIONS = f"""kostka-shoji {__version__}
conventions:
  pseudoroot color: alpha_mn is graded by t_s with s = m mod r (residues written 1..r)
  euler characteristic: Demazure operators act on the inverted integrand
    x^mu prod (1 - t x_m/x_n)^-1; the result is inverted back so chi^lam has
    lowest weight -lam  (orientation '{CALIBRATED_ORIENTATION}')
  affine words: cumulative dims D(u) = d_1+...+d_u with D(u+r) = D(u)+d,
    vertex r+1 read as 1, letters reduced mod d
  partition-function cache size: env {CACHE_ENV}"""


@dataclass
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        threads = self.options.get("threads")
        if threads is not None and threads < 1:
            raise ValueError("--threads must be >= 1")
        for key in ("max_degree", "size"):
            value = self.options.get(key)
            if value is not None and value < 0:
                raise ValueError(f"--{key.replace('_', '-')} must be >= 0")


class UsageError(Exception):
    pass


class _VersionAction(argparse.Action):
    # argparse's own version action rewraps the text
    def __call__(self, parser, namespace, values, option_string=None):
        sys.stdout.write(CONVENTIONS + "\n")
        parser.exit()


def _parse_mp(text: str, r: int, N: int | None) -> Multipartition:
    try:
        m = Multipartition.parse(text, N)
    except ValueError as exc:
        raise UsageError(f"bad multipartition {text!r}: {exc}") from None
    if m.r != r:
        raise UsageError(f"{text!r} has {m.r} components, expected r={r}")
    return m


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kostka-shoji",
                                description="r-variable Kostka-Shoji polynomials and their checks")
    p.add_argument("--version", action=_VersionAction, nargs=0,
                   help="print the version and the pinned conventions")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kostka", help="compute one polynomial K_{lam,mu}")
    k.add_argument("--r", type=int, required=True)
    k.add_argument("--n", type=int, default=None, help="rows per component (default: longest input)")
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--mu", required=True)
    k.add_argument("--single", action="store_true", help="single-variable K(t)")
    k.add_argument("--pad-compare", action="store_true",
                   help="also compute with one extra zero row per component (exploratory)")
    fmt = k.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    t = sub.add_parser("table", help="tabulate K over all dominant pairs of a given size")
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--size", type=int, required=True)
    t.add_argument("--n", type=int, default=None, help="rows per component (default: size)")
    t.add_argument("--out", default="-")
    t.add_argument("--threads", type=int, default=1)
    t.add_argument("--format", choices=["json", "csv"], default=None)
    t.add_argument("--all-pairs", action="store_true", help="include non-dominant pairs")

    pr = sub.add_parser("pseudoroots", help="print the pseudoroot table as CSV")
    pr.add_argument("--r", type=int, required=True)
    pr.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   choices=["charge", "lemma31", "lemma32", "cor33", "triangularity",
                            "positivity", "specialization", "words"])
    v.add_argument("--r", type=int, default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--mu", default=None)
    v.add_argument("--max-degree", type=int, default=None,
                   help="t-degree cap (cor33 default 3, lemma32 default 4)")
    v.add_argument("--size", type=int, default=None)
    v.add_argument("--max", type=int, default=5, help="lemma31: largest r and N")
    v.add_argument("--max-r", type=int, default=3)
    v.add_argument("--box", type=int, default=3)
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)

    w = sub.add_parser("words", help="affine reduced-word blocks for a flag type")
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--dims", default=None, help='"d1,...,dr"')
    src = w.add_mutually_exclusive_group(required=True)
    src.add_argument("--standard-flag", type=int, metavar="N")
    src.add_argument("--i", dest="i_seq", default=None)
    w.add_argument("--a", dest="a_seq", default=None)
    w.add_argument("--verify", action="store_true")
    w.add_argument("--json", action="store_true")
    return p


def _cmd_kostka(args, out) -> int:
    lam = _parse_mp(args.lam, args.r, args.n)
    N = args.n if args.n is not None else lam.N
    mu = _parse_mp(args.mu, args.r, N)
    if lam.N != mu.N:
        width = max(lam.N, mu.N)
        lam, mu = lam.padded(width), mu.padded(width)
    if lam.total != mu.total:
        raise UsageError(f"unequal totals {lam.total} and {mu.total}")
    poly = kostka_single(lam, mu) if args.single else kostka(lam, mu).poly
    if args.json:
        row = {"lambda": str(lam), "mu": str(mu), "poly": poly.to_json(),
               "dominant": dominates(lam, mu)}
        out.write(json.dumps(row, separators=(",", ":")) + "\n")
    elif args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["lambda", "mu", "poly"])
        writer.writerow([str(lam), str(mu), str(poly)])
    else:
        out.write(f"{poly}\n")
    if args.pad_compare:
        lam2, mu2 = lam.padded(lam.N + 1), mu.padded(mu.N + 1)
        poly2 = kostka_single(lam2, mu2) if args.single else kostka(lam2, mu2).poly
        same = "same" if poly2 == poly else "differs"
        out.write(f"N={lam.N + 1}: {poly2} ({same})\n")
    return 0


def render_table(table: dict, fmt: str) -> str:
    if fmt == "json":
        rows = [{"lambda": str(lam), "mu": str(mu), "poly": poly.to_json()}
                for (lam, mu), poly in table.items()]
        return json.dumps(rows, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "mu", "poly"])
    for (lam, mu), poly in table.items():
        writer.writerow([str(lam), str(mu), str(poly)])
    return buf.getvalue()


def _cmd_table(args, out) -> int:
    N = args.n if args.n is not None else max(args.size, 1)
    fmt = args.format or ("csv" if args.out.endswith(".csv") else "json")
    table = kostka_table(args.r, N, args.size, threads=args.threads, include_all=args.all_pairs)
    text = render_table(table, fmt)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return 0


def _cmd_pseudoroots(args, out) -> int:
    sys_ = build_system(args.r, args.n)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "n", "color", "alpha"])
    for p in sys_.roots:
        writer.writerow([p.m, p.n, p.color, " ".join(map(str, p.alpha))])
    return 0


def _cmd_verify(args, out) -> int:
    suite = args.suite
    if suite == "charge":
        res = V.charge_suite(args.size if args.size is not None else 6)
    elif suite == "lemma31":
        res = V.lemma31_suite(args.max)
    elif suite == "lemma32":
        grid = None
        if args.r is not None or args.n is not None:
            rs = [args.r] if args.r is not None else [1, 2, 3]
            ns = [args.n] if args.n is not None else [1, 2, 3]
            grid = [(r, n) for r in rs for n in ns]
        res = V.lemma32_suite(grid, args.box, args.max_degree if args.max_degree is not None else 4)
    elif suite == "cor33":
        if args.r is None or args.mu is None:
            raise UsageError("cor33 needs --r and --mu")
        mu = _parse_mp(args.mu, args.r, args.n)
        res = V.cor33_suite([(mu, 3 if args.max_degree is None else args.max_degree)])
    elif suite in ("triangularity", "positivity", "specialization"):
        fn = {"triangularity": V.triangularity_suite, "positivity": V.positivity_suite,
              "specialization": V.specialization_suite}[suite]
        res = fn(args.max_r, args.size if args.size is not None else 5)
    else:
        res = V.words_suite(count=args.count, seed=args.seed)
    out.write(res.report() + f"\n  seed: {args.seed}\n")
    return 0 if res.passed else 1


def _cmd_words(args, out) -> int:
    if args.standard_flag is not None:
        ft = standard_flag_type(args.r, args.standard_flag)
    else:
        if args.a_seq is None:
            raise UsageError("--i needs --a")
        try:
            ft = FlagType(args.r, _ints(args.i_seq), _ints(args.a_seq))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.dims is not None and _ints(args.dims) != ft.dims:
        raise UsageError(f"--dims {args.dims} does not match the flag type (dims {ft.dims})")
    try:
        blocks = build_word_sequence(ft)
    except ArcError as exc:
        out.write(f"error: {exc}\n")
        return 1
    word = concatenated_word(blocks)
    whole = is_reduced(word, ft.d) if ft.d >= 2 else True
    if args.json:
        data = {"r": ft.r, "dims": list(ft.dims), "i": list(ft.i_seq), "a": list(ft.a_seq),
                "blocks": [{"n": b.n, "interval": [b.lower, b.upper], "residues": list(b.residues),
                            "word": list(b.word), "reduced": b.reduced} for b in blocks],
                "total_length": len(word), "concatenation_reduced": whole}
        out.write(json.dumps(data, separators=(",", ":")) + "\n")
    else:
        out.write(f"flag type r={ft.r} dims={ft.dims} d={ft.d} length={ft.length}\n")
        for b in blocks:
            out.write(f"n={b.n} interval=[{b.lower},{b.upper}] residues={list(b.residues)} "
                      f"word={list(b.word)} reduced={b.reduced}\n")
        out.write(f"total length {len(word)}; concatenation reduced: {whole} (informational)\n")
    if args.verify:
        bad = [b.n for b in blocks if not b.reduced or len(b.word) != b.size * (b.size + 1) // 2]
        if bad:
            out.write(f"blocks failing verification: {bad}\n")
            return 1
    return 0


COMMANDS = {"kostka": _cmd_kostka, "table": _cmd_table, "pseudoroots": _cmd_pseudoroots,
            "verify": _cmd_verify, "words": _cmd_words}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        RunConfig(args.command, vars(args), getattr(args, "seed", DEFAULT_SEED))
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
