"""Command-line front end: ``keytabloid <subcommand> ...``.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
With ``--json`` errors are printed to stdout as ``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import (decompose_into_keys, decomposition_sum, format_decomposition,
                         key_polynomial, specialized_macdonald)
from .compositions import format_composition, orbit_reduced_word, parse_composition
from .crystal import build_crystal
from .embeddings import embed
from .errors import DomainError, KeyTabloidError
from .graphs import dumps, graph_to_dot, graph_to_json
from .tabloid import Tabloid, enumerate_sskd, reading_word
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _composition(text: str):
    try:
        return parse_composition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="keytabloid", description="Affine Demazure crystals on key tabloids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enum", help="list SSKD(a)")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--alphabet", type=_positive)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--json", action="store_true")

    s = sub.add_parser("crystal", help="export the crystal on SSKD(a)")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.add_argument("--finite-only", action="store_true", help="drop label-0 edges")
    s.add_argument("--json", action="store_true", help="JSON error payloads")

    s = sub.add_parser("char", help="E_a(X;q,0) in polynomial text format")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("key", help="key polynomial kappa_b")
    s.add_argument("--comp", type=_composition, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("decompose", help="split E_a into q-graded key polynomials")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("embed", help="apply E_i to one tabloid")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--i", type=_nonneg, required=True, dest="index")
    s.add_argument("--input", required=True, help="tabloid JSON file, or - for stdin")
    s.add_argument("--json", action="store_true", help="JSON error payloads")

    s = sub.add_parser("orbit", help="shortest word carrying eta to a")
    s.add_argument("--shape", type=_composition, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", help="run the invariant sweeps")
    s.add_argument("--max-rows", type=_positive, default=4)
    s.add_argument("--max-degree", type=_nonneg, default=6)
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timing", action="store_true", help="suite timings on stderr")
    return p


def _poly_json(P) -> list:
    return [{"q": d, "exponent": list(exp), "coeff": c} for d, exp, c in P.sorted_terms()]


def _cmd_enum(args, out):
    S = enumerate_sskd(args.shape, args.alphabet)
    if args.count:
        out.write(f"{len(S)}\n")
    elif args.json:
        out.write(json.dumps([T.to_json() for T in S]) + "\n")
    else:
        for T in S:
            rows = "/".join(",".join(map(str, row)) for row in T.rows)
            out.write(f"{''.join(map(str, reading_word(T)))}\t{rows}\n")
    return 0


def _cmd_crystal(args, out):
    G = build_crystal(args.shape)
    if args.finite_only:
        G = G.restricted(range(1, G.n))
    out.write(graph_to_dot(G) if args.format == "dot" else dumps(graph_to_json(G)))
    return 0


def _cmd_char(args, out):
    P = specialized_macdonald(args.shape)
    if args.json:
        out.write(dumps({"shape": list(args.shape), "text": str(P), "terms": _poly_json(P)}))
    else:
        out.write(f"{P}\n")
    return 0


def _cmd_key(args, out):
    P = key_polynomial(args.comp)
    if args.json:
        out.write(dumps({"comp": list(args.comp), "text": str(P), "terms": _poly_json(P)}))
    else:
        out.write(f"{P}\n")
    return 0


def _cmd_decompose(args, out):
    terms = decompose_into_keys(args.shape)
    if args.json:
        total = decomposition_sum(terms, len(args.shape))
        out.write(dumps({"shape": list(args.shape),
                         "terms": [{"q": d, "key": list(b)} for d, b in terms],
                         "character": str(total)}))
    else:
        out.write(format_decomposition(terms))
    return 0


def _cmd_embed(args, out):
    try:
        if args.input == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {args.input}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON in {args.input}: {exc.msg}") from None
    T = Tabloid.from_json(data)
    if T.shape != args.shape:
        raise DomainError(f"input has shape {format_composition(T.shape)}, "
                          f"expected {format_composition(args.shape)}")
    if args.index >= T.n:
        raise DomainError(f"index {args.index} out of range for n={T.n}")
    out.write(json.dumps(embed(T, args.index).to_json()) + "\n")
    return 0


def _cmd_orbit(args, out):
    word = orbit_reduced_word(args.shape)
    if args.json:
        out.write(json.dumps({"shape": list(args.shape), "word": list(word)}) + "\n")
    else:
        out.write(format_composition(word) + "\n")
    return 0


def _cmd_verify(args, out):
    suites = SUITES if args.suite == "all" else (args.suite,)
    results, timing = run_suites(args.max_rows, args.max_degree, suites)
    failed = [r for r in results if not r.ok]
    if args.json:
        out.write(dumps({"max_rows": args.max_rows, "max_degree": args.max_degree,
                         "suites": list(suites), "ok": not failed,
                         "checks": [r.to_json() for r in results]}))
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write(f"{'OK' if not failed else 'FAILED'}: {len(results) - len(failed)} of "
                  f"{len(results)} checks passed\n")
    if args.timing:
        for name, sec in timing.items():
            sys.stderr.write(f"{name}: {sec:.1f}s\n")
    return 1 if failed else 0


_COMMANDS = {"enum": _cmd_enum, "crystal": _cmd_crystal, "char": _cmd_char, "key": _cmd_key,
             "decompose": _cmd_decompose, "embed": _cmd_embed, "orbit": _cmd_orbit,
             "verify": _cmd_verify}


def _error(kind: str, message: str, as_json: bool, out, err):
    if as_json:
        out.write(json.dumps({"error": kind, "message": message}) + "\n")
    else:
        err.write(f"error: {message}\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _error("usage", str(exc), as_json, out, err)
        if not as_json:
            err.write(parser.format_usage())
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except KeyTabloidError as exc:
        _error(type(exc).__name__, str(exc), as_json, out, err)
        return 1


def main() -> None:
    sys.exit(run())
