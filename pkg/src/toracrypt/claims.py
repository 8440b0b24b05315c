"""Registry of verifiable corpus and arithmetic claims.

The claim list lives in data/claims.json so it can be extended without
touching code.  Corpus-dependent claims degrade to SKIP when no corpus
is supplied; they never silently pass.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import els, numth, stats
from .corpus import ALPHABET, LetterStream, encode_pattern, extract_t2
from .els import SkipRange
from .grid import BOTTOM_UP, arrange, find_row_orders, factor_rectangles, permute_rows, read_column

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    status: str
    detail: str
    description: str


def load_registry() -> list[dict]:
    text = resources.files("toracrypt.data").joinpath("claims.json").read_text("utf-8")
    return json.loads(text)["claims"]


def _check_prime(corpus, args):
    got = numth.is_prime(args["n"])
    return got == args["expected"], f"is_prime({args['n']}) = {got}"


def _check_emirp(corpus, args):
    n = args["n"]
    got = numth.is_emirp(n)
    rev = numth.reverse_decimal(n)
    ok = got == args["expected"] and rev == args.get("reversal", rev)
    return ok, f"is_emirp({n}) = {got}, reversal {rev}"


def _check_factorization(corpus, args):
    result = numth.factorize(args["n"])
    expect = tuple((p, e) for p, e in args["factors"])
    primes_ok = all(numth.is_prime(p) for p, _ in result.factors)
    ok = result.factors == expect and primes_ok and result.recompose() == args["n"]
    shown = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in result.factors)
    return ok, f"{args['n']} = {shown}"


def _check_semiprime(corpus, args):
    got = numth.is_semiprime(args["n"])
    return got == args["expected"], f"is_semiprime({args['n']}) = {got}"


def _check_rectangles(corpus, args):
    got = factor_rectangles(args["n"])
    expect = [tuple(p) for p in args["pairs"]]
    return got == expect, f"rectangles({args['n']}) = {got}"


def _check_corpus_length(corpus, args):
    return len(corpus) == args["expected"], f"length {len(corpus)}, expected {args['expected']}"


def _check_corpus_length_prime(corpus, args):
    got = numth.is_prime(len(corpus))
    return got, f"is_prime({len(corpus)}) = {got}"


def _check_marker_count(corpus, args):
    count = len(corpus.marker_indices)
    return count == args["expected"], f"{count} markers, expected {args['expected']}"


def _t2_grid(corpus):
    t2 = extract_t2(corpus, expected_length=85)
    return arrange(t2, 5, 17)


def _check_t2_length(corpus, args):
    t2 = extract_t2(corpus)
    return len(t2) == args["expected"], f"T2 has {len(t2)} letters, expected {args['expected']}"


def _check_max_ngram(corpus, args):
    rep = stats.max_ngram(corpus, args["n"], args["skip"])
    gram = ALPHABET.to_latin(rep.best_gram)
    ok = rep.best_count == args["count"]
    if "gram" in args:
        ok = ok and gram == args["gram"]
    return ok, f"max {args['n']}-gram at skip {args['skip']}: {gram} x {rep.best_count}"


def _check_t2_middle_column(corpus, args):
    column = read_column(_t2_grid(corpus), args["col"])
    have = sorted(column)
    need = sorted(encode_pattern(args["contains"]).symbols)
    ok = True
    remaining = list(have)
    for code in need:
        if code in remaining:
            remaining.remove(code)
        else:
            ok = False
    return ok, f"column {args['col']} reads {ALPHABET.to_latin(column)}"


def _check_t2_row_orders(corpus, args):
    g = _t2_grid(corpus)
    target = encode_pattern(args["target"])
    orders = find_row_orders(g, args["col"], target)
    verified = all(
        read_column(permute_rows(g, order), args["col"]) == target.symbols for order in orders
    )
    ok = len(orders) == args["count"] and verified
    return ok, f"{len(orders)} row orders for {args['target']}, self-verified: {verified}"


def _check_t2_column_word(corpus, args):
    g = _t2_grid(corpus)
    orders = find_row_orders(g, args["orders_col"], encode_pattern(args["orders_target"]))
    word = encode_pattern(args["word"]).symbols
    hits = []
    for order in orders:
        pg = permute_rows(g, order)
        for c in range(pg.cols):
            if read_column(pg, c, BOTTOM_UP) == word:
                hits.append((order, c))
    detail = f"{args['word']} found at {hits}" if hits else f"{args['word']} not found"
    return bool(hits), detail


def _minimal(corpus, args, pattern_key="pattern"):
    pattern = encode_pattern(args[pattern_key])
    rng = SkipRange(args["min_skip"], args["max_skip"], include_negative=True)
    return pattern, els.find_minimal(corpus, pattern, rng)


def _check_minimal_els(corpus, args):
    _, match = _minimal(corpus, args)
    if match is None:
        return False, f"no ELS for {args['pattern']} in range"
    return abs(match.skip) == args["skip"], f"minimal skip {match.skip} at start {match.start}"


def _check_els_extension(corpus, args):
    _, match = _minimal(corpus, args)
    if match is None:
        return False, f"no ELS for {args['pattern']} in range"
    back, fwd = args["back"], args["fwd"]
    extended = els.extend(corpus, match, back, fwd)
    prefix = ALPHABET.to_latin(extended[:back])
    suffix = ALPHABET.to_latin(extended[len(extended) - fwd :])
    ok = prefix == args["prefix"] and suffix == args["suffix"]
    return ok, f"context {prefix}|{args['pattern']}|{suffix}"


def _check_els_proximity(corpus, args):
    _, m1 = _minimal(corpus, args, "pattern_a")
    _, m2 = _minimal(corpus, args, "pattern_b")
    if m1 is None or m2 is None:
        return False, "one of the patterns has no ELS in range"
    gap = els.proximity(m1, m2)
    return gap < args["max_gap"], f"span gap {gap} letters"


_CHECKS = {
    "prime": _check_prime,
    "emirp": _check_emirp,
    "factorization": _check_factorization,
    "semiprime": _check_semiprime,
    "rectangles": _check_rectangles,
    "corpus-length": _check_corpus_length,
    "corpus-length-prime": _check_corpus_length_prime,
    "marker-count": _check_marker_count,
    "t2-length": _check_t2_length,
    "max-ngram": _check_max_ngram,
    "t2-middle-column": _check_t2_middle_column,
    "t2-row-orders": _check_t2_row_orders,
    "t2-column-word": _check_t2_column_word,
    "minimal-els": _check_minimal_els,
    "els-extension": _check_els_extension,
    "els-proximity": _check_els_proximity,
}


def run_claims(corpus: LetterStream | None) -> list[ClaimResult]:
    """Evaluate every registered claim; corpus claims SKIP without a corpus."""
    results = []
    for claim in load_registry():
        cid = claim["id"]
        desc = claim["description"]
        if claim["needs_corpus"] and corpus is None:
            results.append(ClaimResult(cid, SKIP, "no corpus supplied", desc))
            continue
        try:
            ok, detail = _CHECKS[claim["check"]](corpus, claim["args"])
        except Exception as exc:  # a structurally unusable corpus fails the claim
            results.append(ClaimResult(cid, FAIL, f"{type(exc).__name__}: {exc}", desc))
            continue
        results.append(ClaimResult(cid, PASS if ok else FAIL, detail, desc))
    return results


def has_failures(results: list[ClaimResult]) -> bool:
    return any(r.status == FAIL for r in results)
