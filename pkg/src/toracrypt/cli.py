"""Command-line surface: ingest, table1, els, t2, keys, apen, grid, primes,
verify-claims.

Exit codes: 0 success, 1 claim failure, 2 usage error, 3 I/O or format
error.  All subcommands emit TSV or JSON; grid-shaped output additionally
supports a text rendering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import claims as claims_mod
from . import els as els_mod
from . import numth, permute, stats
from .corpus import (
    ALPHABET,
    CorpusFormatError,
    LetterStream,
    MarkerError,
    TransliterationError,
    annotation_for,
    encode_pattern,
    extract_t2,
    letter_histogram,
    load_corpus,
    load_offset_annotations,
)
from .els import SkipRange
from .grid import (
    BOTTOM_UP,
    TOP_DOWN,
    arrange,
    factor_rectangles,
    find_row_orders,
    format_bit_grid,
    format_grid,
    permute_rows,
    read_column,
    render_bit_grid,
)

CACHE_ENV = "TORACRYPT_CACHE"

T2_ROWS, T2_COLS, T2_MIDDLE_COL = 5, 17, 8


def _cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "toracrypt"


def _read_corpus(path: str, fmt: str) -> LetterStream:
    data = Path(path).read_bytes()
    if fmt == "auto":
        fmt = "latin" if data.isascii() else "hebrew"
    return load_corpus(data, fmt, source_tag=os.path.basename(path))


def _emit(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    else:
        print("\t".join(columns))
        for row in rows:
            print("\t".join(str(row[c]) for c in columns))


def _add_corpus_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--corpus-format",
        choices=["auto", "hebrew", "latin"],
        default="auto",
        help="input encoding (auto: latin when pure ASCII)",
    )


def _add_format(parser: argparse.ArgumentParser, extra=()) -> None:
    parser.add_argument("--format", choices=["tsv", "json", *extra], default="tsv")


def cmd_ingest(args) -> int:
    stream = _read_corpus(args.path, args.corpus_format)
    checksum = stream.checksum()
    cache_path = ""
    if not args.no_cache:
        cache = _cache_dir()
        cache.mkdir(parents=True, exist_ok=True)
        target = cache / f"{checksum[:16]}.stream"
        target.write_text(stream.to_latin(wrap=100) + "\n", encoding="ascii")
        cache_path = str(target)
    histogram = {ALPHABET.latin[code]: n for code, n in letter_histogram(stream).items()}
    t2_length = ""
    if len(stream.marker_indices) == 2:
        t2_length = len(extract_t2(stream, expected_length=None))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "path": args.path,
                    "length": len(stream),
                    "markers": list(stream.marker_indices),
                    "checksum": checksum,
                    "t2_length": t2_length or None,
                    "cache_path": cache_path or None,
                    "histogram": histogram,
                },
                indent=2,
            )
        )
    else:
        print(f"path\t{args.path}")
        print(f"length\t{len(stream)}")
        print(f"markers\t{len(stream.marker_indices)}")
        for idx in stream.marker_indices:
            print(f"marker_index\t{idx}")
        print(f"checksum\t{checksum}")
        if t2_length != "":
            print(f"t2_length\t{t2_length}")
        if cache_path:
            print(f"cache_path\t{cache_path}")
        for letter, count in histogram.items():
            print(f"letter:{letter}\t{count}")
    return 0


def cmd_table1(args) -> int:
    stream = _read_corpus(args.path, args.corpus_format)
    rows = []
    if args.per_class:
        for skip in range(1, args.skips + 1):
            for cls, rep in stats.max_ngram_per_class(stream, args.n, skip):
                rows.append(
                    {
                        "skip": skip,
                        "class": cls,
                        "count": rep.best_count,
                        "gram": ALPHABET.to_latin(rep.best_gram),
                    }
                )
        _emit(rows, ["skip", "class", "count", "gram"], args.format)
    else:
        for skip in range(1, args.skips + 1):
            rep = stats.max_ngram(stream, args.n, skip)
            rows.append(
                {
                    "skip": skip,
                    "count": rep.best_count,
                    "gram": ALPHABET.to_latin(rep.best_gram),
                }
            )
        _emit(rows, ["skip", "count", "gram"], args.format)
    return 0


def _match_row(stream, pattern, match, back, fwd, annotations=None) -> dict:
    try:
        extended = els_mod.extend(stream, match, back, fwd)
        prefix = ALPHABET.to_latin(extended[:back])
        core = ALPHABET.to_latin(extended[back : back + match.length])
        suffix = ALPHABET.to_latin(extended[back + match.length :])
        context = f"{prefix}|{core}|{suffix}"
    except IndexError:
        context = ""
    row = {
        "pattern": pattern.latin,
        "start": match.start,
        "skip": match.skip,
        "length": match.length,
        "context": context,
    }
    if annotations is not None:
        row["verse"] = annotation_for(annotations, match.start)
    return row


def cmd_els(args) -> int:
    stream = _read_corpus(args.path, args.corpus_format)
    pattern = encode_pattern(args.pattern)
    back, fwd = args.extend_back, args.extend_fwd
    annotations = None
    if args.verses:
        annotations = load_offset_annotations(Path(args.verses).read_text(encoding="utf-8"))
    rows = []
    skip_range = SkipRange(args.min_skip, args.max_skip, include_negative=not args.no_negative)
    if args.skip is not None:
        for match in els_mod.find_at_skip(stream, pattern, args.skip):
            rows.append(_match_row(stream, pattern, match, back, fwd, annotations))
    else:
        match = els_mod.find_minimal(stream, pattern, skip_range)
        if match is not None:
            rows.append(_match_row(stream, pattern, match, back, fwd, annotations))
    columns = ["pattern", "start", "skip", "length", "context"]
    if annotations is not None:
        columns.append("verse")
    if args.proximity_to:
        other = encode_pattern(args.proximity_to)
        m1 = els_mod.find_minimal(stream, pattern, skip_range)
        m2 = els_mod.find_minimal(stream, other, skip_range)
        if m1 is not None and m2 is not None:
            rows.append(_match_row(stream, other, m2, back, fwd, annotations))
            gap_row = {
                "pattern": f"gap({pattern.latin},{other.latin})",
                "start": "",
                "skip": "",
                "length": "",
                "context": str(els_mod.proximity(m1, m2)),
            }
            if annotations is not None:
                gap_row["verse"] = ""
            rows.append(gap_row)
    _emit(rows, columns, args.format)
    return 0


def _t2_grid_of(args):
    stream = _read_corpus(args.path, args.corpus_format)
    t2 = extract_t2(stream, expected_length=T2_ROWS * T2_COLS)
    return arrange(t2, T2_ROWS, T2_COLS)


def cmd_t2_show(args) -> int:
    g = _t2_grid_of(args)
    if args.format == "text-grid":
        print(format_grid(g, rtl=args.rtl, mark_col=T2_MIDDLE_COL))
    else:
        rows = [
            {"row": r, "letters": ALPHABET.to_latin(g.row(r))} for r in range(g.rows)
        ]
        _emit(rows, ["row", "letters"], args.format)
    return 0


def cmd_t2_find_orders(args) -> int:
    g = _t2_grid_of(args)
    target = encode_pattern(args.target)
    direction = BOTTOM_UP if args.bottom_up else TOP_DOWN
    orders = find_row_orders(g, args.col, target, direction)
    rows = [
        {"index": i, "order": ",".join(str(r) for r in order)}
        for i, order in enumerate(orders)
    ]
    _emit(rows, ["index", "order"], args.format)
    if args.render:
        for order in orders:
            print()
            print(format_grid(permute_rows(g, order), rtl=args.rtl, mark_col=args.col))
    return 0


def cmd_t2_apply_order(args) -> int:
    g = _t2_grid_of(args)
    order = _parse_order(args.order, g.rows)
    pg = permute_rows(g, order)
    if args.format == "text-grid":
        print(format_grid(pg, rtl=args.rtl, mark_col=T2_MIDDLE_COL))
    else:
        rows = [{"row": r, "letters": ALPHABET.to_latin(pg.row(r))} for r in range(pg.rows)]
        _emit(rows, ["row", "letters"], args.format)
    return 0


def _parse_order(text: str | None, rows: int) -> tuple[int, ...]:
    if not text:
        return tuple(range(rows))
    return tuple(int(part) for part in text.split(","))


def _load_key_file(path: str) -> permute.PermutationKey:
    try:
        return permute.load_key(path)
    except ValueError as exc:
        raise CorpusFormatError(f"{path}: {exc}") from exc


def cmd_keys_build_library(args) -> int:
    library = permute.build_t2_library()
    rows = [{"index": i, "label": key.label} for i, key in enumerate(library.keys)]
    if args.format == "json":
        print(json.dumps({"n": library.n, "size": len(library), "keys": rows}, indent=2))
    else:
        print(f"n\t{library.n}")
        print(f"size\t{len(library)}")
        for row in rows:
            print(f"{row['index']}\t{row['label']}")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, key in enumerate(library.keys):
            permute.save_key(key, out / f"t2key_{i:03d}.key")
    return 0


def cmd_keys_apply(args) -> int:
    key = _load_key_file(args.key)
    stream = _read_corpus(args.path, args.corpus_format)
    letters = permute.apply_key(key, stream).to_latin()
    if args.format == "json":
        print(json.dumps({"key": key.label, "letters": letters}, indent=2))
    else:
        print(letters)
    return 0


def cmd_keys_compose(args) -> int:
    keys = [_load_key_file(p) for p in args.keys]
    composed = keys[0]
    for key in keys[1:]:
        composed = permute.compose(composed, key)
    if args.out:
        permute.save_key(composed, args.out)
    else:
        sys.stdout.write(permute.dump_key(composed))
    return 0


def cmd_keys_inverse(args) -> int:
    key = permute.inverse(_load_key_file(args.key))
    if args.out:
        permute.save_key(key, args.out)
    else:
        sys.stdout.write(permute.dump_key(key))
    return 0


def cmd_keys_order(args) -> int:
    key = _load_key_file(args.key)
    order = permute.key_order(key)
    if args.format == "json":
        print(json.dumps({"key": key.label, "order": order}, indent=2))
    else:
        print(order)
    return 0


def cmd_apen(args) -> int:
    stream = _read_corpus(args.path, args.corpus_format)
    value = f"{stats.approx_entropy(stream, args.m):.9f}"
    if args.format == "json":
        print(json.dumps({"m": args.m, "apen": value}, indent=2))
    else:
        print(value)
    return 0


def cmd_grid_render(args) -> int:
    stream = _read_corpus(args.path, args.corpus_format)
    g = arrange(stream, args.rows, args.cols)
    if args.format == "text-grid":
        print(format_grid(g, rtl=args.rtl, mark_col=args.mark_col))
    else:
        rows = [{"row": r, "letters": ALPHABET.to_latin(g.row(r))} for r in range(g.rows)]
        _emit(rows, ["row", "letters"], args.format)
    return 0


def cmd_grid_bits(args) -> int:
    text = Path(args.path).read_text(encoding="ascii")
    bits = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch not in "01":
            raise CorpusFormatError(f"character {ch!r} at position {i} is not a bit")
        bits.append(int(ch))
    g = render_bit_grid(bits, args.rows, args.cols)
    if args.format == "text-grid":
        print(format_bit_grid(g))
    else:
        rows = [{"row": r, "bits": "".join(str(b) for b in g.row(r))} for r in range(g.rows)]
        _emit(rows, ["row", "bits"], args.format)
    return 0


def cmd_grid_rects(args) -> int:
    rows = [{"rows": r, "cols": c} for r, c in factor_rectangles(args.n)]
    _emit(rows, ["rows", "cols"], args.format)
    return 0


def cmd_primes(args) -> int:
    rows = []
    for n in args.numbers:
        fact = numth.factorize(n) if n >= 2 else None
        rows.append(
            {
                "n": n,
                "prime": numth.is_prime(n),
                "emirp": numth.is_emirp(n),
                "reversal": numth.reverse_decimal(n),
                "semiprime": numth.is_semiprime(n),
                "factorization": " * ".join(
                    f"{p}^{e}" if e > 1 else str(p) for p, e in fact.factors
                )
                if fact
                else "",
            }
        )
    _emit(rows, ["n", "prime", "emirp", "reversal", "semiprime", "factorization"], args.format)
    return 0


def cmd_verify_claims(args) -> int:
    corpus = None
    if args.corpus:
        corpus = _read_corpus(args.corpus, args.corpus_format)
    results = claims_mod.run_claims(corpus)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "id": r.claim_id,
                        "status": r.status,
                        "detail": r.detail,
                        "description": r.description,
                    }
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        for r in results:
            print(f"{r.status}\t{r.claim_id}\t{r.detail}")
    return 1 if claims_mod.has_failures(results) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toracrypt",
        description="letter-stream cryptanalysis: ELS search, n-gram statistics, "
        "grid transposition keys and arithmetic claim checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load a corpus file and report its summary")
    p.add_argument("path")
    _add_corpus_format(p)
    _add_format(p)
    p.add_argument("--no-cache", action="store_true", help="do not write the stream cache")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("table1", help="max n-gram count per skip distance")
    p.add_argument("path")
    _add_corpus_format(p)
    _add_format(p)
    p.add_argument("--skips", type=int, default=5, help="report skips 1..SKIPS")
    p.add_argument("-n", type=int, default=4, dest="n", help="gram size")
    p.add_argument(
        "--per-class",
        action="store_true",
        help="count each residue class separately instead of pooling",
    )
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("els", help="equidistant letter sequence search")
    p.add_argument("path")
    p.add_argument("pattern")
    _add_corpus_format(p)
    _add_format(p)
    p.add_argument("--skip", type=int, default=None, help="fixed skip (default: minimal search)")
    p.add_argument("--minimal", action="store_true", help="minimal-skip search (the default)")
    p.add_argument("--min-skip", type=int, default=2)
    p.add_argument("--max-skip", type=int, default=1000)
    p.add_argument("--no-negative", action="store_true", help="positive skips only")
    p.add_argument("--extend-back", type=int, default=0)
    p.add_argument("--extend-fwd", type=int, default=0)
    p.add_argument("--proximity-to", default=None, help="second pattern for a span-gap report")
    p.add_argument(
        "--verses",
        default=None,
        help="offset-annotation sidecar (TSV: start, end, label) for a verse column",
    )
    p.set_defaults(func=cmd_els)

    p = sub.add_parser("t2", help="the 85-letter block between the inverted nuns")
    t2_sub = p.add_subparsers(dest="t2_command", required=True)

    q = t2_sub.add_parser("show", help="render the 5x17 grid")
    q.add_argument("path")
    _add_corpus_format(q)
    q.add_argument("--format", choices=["text-grid", "tsv", "json"], default="text-grid")
    q.add_argument("--rtl", action="store_true", help="right-to-left column display")
    q.set_defaults(func=cmd_t2_show)

    q = t2_sub.add_parser("find-orders", help="row orders that spell a target down a column")
    q.add_argument("path")
    q.add_argument("target")
    _add_corpus_format(q)
    _add_format(q)
    q.add_argument("--col", type=int, default=T2_MIDDLE_COL)
    q.add_argument("--bottom-up", action="store_true")
    q.add_argument("--render", action="store_true", help="also render each permuted grid")
    q.add_argument("--rtl", action="store_true")
    q.set_defaults(func=cmd_t2_find_orders)

    q = t2_sub.add_parser("apply-order", help="render the grid under a row order")
    q.add_argument("path")
    _add_corpus_format(q)
    q.add_argument("--format", choices=["text-grid", "tsv", "json"], default="text-grid")
    q.add_argument("--order", default=None, help="comma-separated row order (default identity)")
    q.add_argument("--rtl", action="store_true")
    q.set_defaults(func=cmd_t2_apply_order)

    p = sub.add_parser("keys", help="transposition key library and algebra")
    keys_sub = p.add_subparsers(dest="keys_command", required=True)

    q = keys_sub.add_parser("build-library", help="enumerate the 85-position grid key family")
    _add_format(q)
    q.add_argument("--out-dir", default=None, help="write each key to a .key file")
    q.set_defaults(func=cmd_keys_build_library)

    q = keys_sub.add_parser("apply", help="apply a key file to a stream")
    q.add_argument("key")
    q.add_argument("path")
    _add_corpus_format(q)
    _add_format(q)
    q.set_defaults(func=cmd_keys_apply)

    q = keys_sub.add_parser("compose", help="compose key files (rightmost applies first)")
    q.add_argument("keys", nargs="+")
    q.add_argument("-o", "--out", default=None)
    q.set_defaults(func=cmd_keys_compose)

    q = keys_sub.add_parser("inverse", help="invert a key file")
    q.add_argument("key")
    q.add_argument("-o", "--out", default=None)
    q.set_defaults(func=cmd_keys_inverse)

    q = keys_sub.add_parser("order", help="multiplicative order of a key")
    q.add_argument("key")
    _add_format(q)
    q.set_defaults(func=cmd_keys_order)

    p = sub.add_parser("apen", help="approximate entropy of a stream")
    p.add_argument("path")
    _add_corpus_format(p)
    _add_format(p)
    p.add_argument("-m", type=int, default=1, dest="m", help="window length")
    p.set_defaults(func=cmd_apen)

    p = sub.add_parser("grid", help="grid arrangement utilities")
    grid_sub = p.add_subparsers(dest="grid_command", required=True)

    q = grid_sub.add_parser("render", help="arrange a stream into rows x cols")
    q.add_argument("path")
    _add_corpus_format(q)
    q.add_argument("--rows", type=int, required=True)
    q.add_argument("--cols", type=int, required=True)
    q.add_argument("--format", choices=["text-grid", "tsv", "json"], default="text-grid")
    q.add_argument("--rtl", action="store_true")
    q.add_argument("--mark-col", type=int, default=None)
    q.set_defaults(func=cmd_grid_render)

    q = grid_sub.add_parser("bits", help="render a 0/1 file as #/. art")
    q.add_argument("path")
    q.add_argument("--rows", type=int, required=True)
    q.add_argument("--cols", type=int, required=True)
    q.add_argument("--format", choices=["text-grid", "tsv", "json"], default="text-grid")
    q.set_defaults(func=cmd_grid_bits)

    q = grid_sub.add_parser("rects", help="factor rectangles of a length")
    q.add_argument("n", type=int)
    _add_format(q)
    q.set_defaults(func=cmd_grid_rects)

    p = sub.add_parser("primes", help="primality / emirp / factorization report")
    p.add_argument("numbers", nargs="+", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("verify-claims", help="run the claims registry")
    p.add_argument("--corpus", default=None)
    _add_corpus_format(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify_claims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except TransliterationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CorpusFormatError, MarkerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
