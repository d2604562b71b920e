"""Command-line front end: transforms, convolutions, Moebius tables, and
verification suites.

Moment inputs are JSON documents; rationals travel as strings like "3/4" so
no floating point ever enters.  Exit codes: 0 success, 1 verification
failure, 2 usage or parse error.  Timing goes to stderr so stdout is
byte-stable for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .cumulants import (
    CumulantFunction,
    GeneralMoments,
    MomentFunction,
    SequenceHat,
    SymbolicHat,
    cumulants_from_moments,
    cumulants_via_mobius,
    moment_cumulant_split,
    moments_from_cumulants,
)
from .convolve import filtered_convolve
from .mobius import mobius_closed, mobius_incidence_series, mobius_recursive, mobius_table
from .partitions import Partition, enumerate_admissible
from .scalar import Scalar
from .sgalgebra import (
    GeometricWeight,
    TruncatedSeries,
    check_cumulant_gf_formula,
    check_gf_factorization,
    check_norm_bounds,
    cumulant_gf,
    moment_gf,
)
from .words import iter_words, parse_word, render_word, words_of_length


class ParseError(ValueError):
    """Malformed input document or word."""


class GeneralBackingRejectedError(ParseError):
    """The command requires hat-backed (sequence or symbolic) moments."""


class UnknownSuiteError(ParseError):
    """Unrecognized verification suite name."""


SUITES = ("additivity", "inversion", "mobius", "gf-identity", "norms", "all")


# -- moment specifications ---------------------------------------------------


@dataclass
class MomentSpec:
    """A parsed moment description: sequence, symbolic, or general backing."""

    backing: str
    function: MomentFunction
    doc: dict

    @property
    def is_hat(self) -> bool:
        return self.backing in ("sequence", "symbolic")


def _fraction_from_json(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: rationals must be strings like \"3/4\" or integers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: bad rational {value!r}: {exc}") from None
    raise ParseError(f"{where}: bad rational {value!r}")


def parse_moment_spec(doc) -> MomentSpec:
    """Build a MomentSpec from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("moment spec must be a JSON object")
    backing = doc.get("backing")
    if backing == "sequence":
        values = doc.get("values")
        if not isinstance(values, list) or not values:
            raise ParseError("sequence backing needs a nonempty \"values\" list")
        fractions = [_fraction_from_json(v, f"values[{i}]") for i, v in enumerate(values)]
        normalized = {"backing": "sequence", "values": [str(q) for q in fractions]}
        return MomentSpec("sequence", SequenceHat(fractions), normalized)
    if backing == "symbolic":
        family = doc.get("family")
        if family not in ("mu", "nu"):
            raise ParseError("symbolic backing needs \"family\": \"mu\" or \"nu\"")
        return MomentSpec("symbolic", SymbolicHat(family),
                          {"backing": "symbolic", "family": family})
    if backing == "general":
        moments = doc.get("moments")
        if not isinstance(moments, dict):
            raise ParseError("general backing needs a \"moments\" object")
        table = {}
        for key, value in moments.items():
            try:
                word = parse_word(key)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
            q = _fraction_from_json(value, f"moments[{key!r}]")
            if not word:
                if q != 1:
                    raise ParseError("the empty word \"1\" must map to 1")
                continue
            table[word] = q
        normalized = {
            "backing": "general",
            "moments": {render_word(w): str(q) for w, q in sorted(table.items())},
        }
        return MomentSpec("general", GeneralMoments(table), normalized)
    raise ParseError(f"unknown backing {backing!r}; expected sequence, symbolic or general")


def render_moment_spec(spec: MomentSpec) -> dict:
    """The normalized JSON document; parse(render(x)) == x."""
    return spec.doc


def load_moment_spec(path: str) -> MomentSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return parse_moment_spec(doc)


# -- rendering helpers ---------------------------------------------------------


def _print_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells)).rstrip()
    print(fmt(headers))
    print(fmt(["-" * w for w in widths]))
    for row in rows:
        print(fmt(row))


# -- commands ------------------------------------------------------------------


def cmd_cumulants(args) -> int:
    spec = load_moment_spec(args.moments)
    L = cumulants_from_moments(spec.function, args.max_len)
    rows = []
    for n in range(1, args.max_len + 1):
        for s in words_of_length(n):
            rows.append((render_word(s), str(spec.function(s)), str(L(s))))
    if args.format == "json":
        payload = {
            "max_len": args.max_len,
            "rows": [{"word": w, "moment": m, "cumulant": c} for w, m, c in rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        _print_table(["word", "moment", "cumulant"], [list(r) for r in rows])
    return 0


def cmd_convolve(args) -> int:
    mu_spec = load_moment_spec(args.mu)
    nu_spec = load_moment_spec(args.nu)
    for spec, name in ((mu_spec, "--mu"), (nu_spec, "--nu")):
        if not spec.is_hat:
            raise GeneralBackingRejectedError(
                f"{name}: convolution requires sequence or symbolic backing"
            )
    if args.word is not None:
        try:
            words = [parse_word(args.word)]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    elif args.restrict:
        words = [args.restrict * n for n in range(args.max_len + 1)]
    else:
        words = list(iter_words(args.max_len))
    rows = [
        (render_word(s), str(filtered_convolve(mu_spec.function, nu_spec.function, s)))
        for s in words
    ]
    if args.format == "json":
        print(json.dumps({"rows": [{"word": w, "moment": m} for w, m in rows]}, indent=2))
    else:
        _print_table(["word", "moment"], [list(r) for r in rows])
    return 0


def cmd_mobius(args) -> int:
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if not word:
        raise ParseError("the Moebius table needs a nonempty word")
    rows = [
        (u.render(), str(blocks), str(shuffles), str(value))
        for u, blocks, shuffles, value in mobius_table(word)
    ]
    if args.format == "json":
        payload = {
            "word": render_word(word),
            "rows": [
                {"partition": p, "blocks": int(b), "shuffles": int(a), "mobius": int(m)}
                for p, b, a, m in rows
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        _print_table(["partition", "b", "a", "m"], [list(r) for r in rows])
    return 0


def cmd_gf(args) -> int:
    spec = load_moment_spec(args.moments)
    L = cumulants_from_moments(spec.function, args.max_len)
    mgf = moment_gf(spec.function, args.max_len)
    lgf = cumulant_gf(L, args.max_len)
    mrows = [(render_word(s), str(mgf.coefficient(s))) for s in iter_words(args.max_len)]
    lrows = [(render_word(s), str(lgf.coefficient(s))) for s in iter_words(args.max_len) if s]
    if args.format == "json":
        payload = {
            "max_len": args.max_len,
            "moment_gf": {w: c for w, c in mrows},
            "cumulant_gf": {w: c for w, c in lrows},
        }
        print(json.dumps(payload, indent=2))
    else:
        _print_table(["word", "moment_gf", "cumulant_gf"],
                     [[w, c, dict(lrows).get(w, "0")] for w, c in mrows])
    return 0


# -- verification suites --------------------------------------------------------


@dataclass
class VerifyReport:
    suite: str
    max_len: int
    seed: int
    instances: int
    passed: bool
    counterexample: tuple[str, str, str] | None
    elapsed: float

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"suite={self.suite} max_len={self.max_len} seed={self.seed} "
            f"instances={self.instances} result={status}"
        ]
        if self.counterexample:
            word, lhs, rhs = self.counterexample
            out.append(f"  counterexample word={word}: {lhs} != {rhs}")
        return out


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def _random_hat(rng: random.Random, max_len: int) -> SequenceHat:
    return SequenceHat([_random_fraction(rng) for _ in range(max_len)])


def _random_general(rng: random.Random, max_len: int) -> GeneralMoments:
    table = {}
    for n in range(1, max_len + 1):
        for s in words_of_length(n):
            table[s] = _random_fraction(rng)
    return GeneralMoments(table)


def _suite_additivity(max_len: int, seed: int, trials: int) -> VerifyReport:
    rng = random.Random(seed)
    start = time.perf_counter()
    counterexample = None
    done = 0
    for _ in range(trials):
        mu_state = _random_hat(rng, max_len)
        nu_state = _random_hat(rng, max_len)
        conv = {}
        for n in range(1, max_len + 1):
            for s in words_of_length(n):
                conv[s] = filtered_convolve(mu_state, nu_state, s)
        l_conv = cumulants_from_moments(GeneralMoments(conv), max_len)
        l_mu = cumulants_from_moments(mu_state, max_len)
        l_nu = cumulants_from_moments(nu_state, max_len)
        for s in conv:
            lhs = l_conv(s)
            rhs = l_mu(s) + l_nu(s)
            if lhs != rhs:
                counterexample = (render_word(s), str(lhs), str(rhs))
                break
        done += 1
        if counterexample:
            break
    return VerifyReport("additivity", max_len, seed, done,
                        counterexample is None, counterexample,
                        time.perf_counter() - start)


def _suite_inversion(max_len: int, seed: int, trials: int) -> VerifyReport:
    rng = random.Random(seed)
    start = time.perf_counter()
    counterexample = None
    done = 0
    for _ in range(trials):
        M = _random_general(rng, max_len)
        L = cumulants_from_moments(M, max_len)
        back = moments_from_cumulants(L, max_len)
        for n in range(1, max_len + 1):
            for s in words_of_length(n):
                if back(s) != M(s):
                    counterexample = (render_word(s), str(back(s)), str(M(s)))
                    break
                via = cumulants_via_mobius(M, s)
                if via != L(s):
                    counterexample = (render_word(s), str(via), str(L(s)))
                    break
            if counterexample:
                break
        done += 1
        if counterexample:
            break
    return VerifyReport("inversion", max_len, seed, done,
                        counterexample is None, counterexample,
                        time.perf_counter() - start)


def _suite_mobius(max_len: int, seed: int, trials: int) -> VerifyReport:
    start = time.perf_counter()
    counterexample = None
    done = 0
    for n in range(1, max_len + 1):
        for s in words_of_length(n):
            top = Partition.one_block(s)
            for u in enumerate_admissible(s):
                recursive = mobius_recursive(u, top)
                series = mobius_incidence_series(u, top)
                closed = mobius_closed(u)
                if not (recursive == series == closed):
                    counterexample = (
                        f"{render_word(s)} {u.render()}",
                        f"recursion={recursive} series={series}",
                        f"closed={closed}",
                    )
                    break
                done += 1
            if counterexample:
                break
        if counterexample:
            break
    return VerifyReport("mobius", max_len, seed, done,
                        counterexample is None, counterexample,
                        time.perf_counter() - start)


def _suite_gf_identity(max_len: int, seed: int, trials: int) -> VerifyReport:
    rng = random.Random(seed)
    start = time.perf_counter()
    counterexample = None
    done = 0
    states: list[MomentFunction] = [SymbolicHat("mu"), _random_hat(rng, max_len)]
    for state in states:
        for check in (check_gf_factorization, check_cumulant_gf_formula):
            report = check(state, max_len)
            done += 1
            if not report.ok:
                counterexample = report.first_failure
                break
        if counterexample:
            break
    return VerifyReport("gf-identity", max_len, seed, done,
                        counterexample is None, counterexample,
                        time.perf_counter() - start)


def _suite_norms(max_len: int, seed: int, trials: int) -> VerifyReport:
    rng = random.Random(seed)
    start = time.perf_counter()
    counterexample = None
    done = 0

    def run_instance(f, g, W, Q, label):
        nonlocal counterexample, done
        report = check_norm_bounds(f, g, W, Q)
        done += 1
        if not report.ok:
            counterexample = (label, report.summary(), "bounds violated")

    flat = GeometricWeight(Fraction(1))
    fixed = TruncatedSeries(max_len, {"": 1, "z": Fraction(1, 4), "w": Fraction(1, 4)})
    run_instance(fixed, TruncatedSeries.unit(max_len), flat, 2, "fixed-quarter")

    for i in range(trials):
        if counterexample:
            break
        Q = Fraction(rng.randint(3, 8), 2)
        budget = 2 - Fraction(1) / Q - 1  # norm mass available beyond the unit
        table = {"": Fraction(1)}
        remaining = budget
        for s in iter_words(max_len):
            if not s or rng.random() < 0.5:
                continue
            portion = remaining * Fraction(rng.randint(0, 3), 12)
            if portion:
                table[s] = portion if rng.random() < 0.5 else -portion
                remaining -= portion
        f = TruncatedSeries(max_len, table)
        gtable = {"": Fraction(1)}
        gremaining = Q - 1 - Fraction(1, 2)
        for n in range(1, max_len + 1):
            portion = gremaining * Fraction(rng.randint(0, 2), 8)
            if portion:
                gtable["z" * n] = portion
                gremaining -= portion
        g = TruncatedSeries(max_len, gtable)
        run_instance(f, g, flat, Q, f"random-{i}")

    return VerifyReport("norms", max_len, seed, done,
                        counterexample is None, counterexample,
                        time.perf_counter() - start)


_SUITE_RUNNERS = {
    "additivity": _suite_additivity,
    "inversion": _suite_inversion,
    "mobius": _suite_mobius,
    "gf-identity": _suite_gf_identity,
    "norms": _suite_norms,
}


def run_verify(suite: str, max_len: int, seed: int, trials: int) -> list[VerifyReport]:
    if suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    names = list(_SUITE_RUNNERS) if suite == "all" else [suite]
    return [_SUITE_RUNNERS[name](max_len, seed, trials) for name in names]


def cmd_verify(args) -> int:
    reports = run_verify(args.suite, args.max_len, args.seed, args.trials)
    for report in reports:
        for line in report.lines():
            print(line)
        print(f"[timing] {report.suite}: {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


# -- entry point -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zwcumulants",
        description="Exact moment-cumulant calculus on words over {z, w}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cumulants", help="moment and cumulant table for a moment spec")
    p.add_argument("--moments", required=True, help="path to a moment spec JSON file")
    p.add_argument("--max-len", dest="max_len", type=int, default=4)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("convolve", help="filtered convolution of two hat states")
    p.add_argument("--mu", required=True, help="path to the first moment spec")
    p.add_argument("--nu", required=True, help="path to the second moment spec")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="single word, e.g. zwz (use 1 for the empty word)")
    group.add_argument("--max-len", dest="max_len", type=int)
    p.add_argument("--restrict", choices=("z", "w"))
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("mobius", help="Moebius/shuffle table of a word's lattice")
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("gf", help="moment and cumulant generating functions")
    p.add_argument("--moments", required=True)
    p.add_argument("--max-len", dest="max_len", type=int, default=4)
    p.add_argument("--format", "--out", dest="format", choices=("table", "json"),
                   default="json")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-len", dest="max_len", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
