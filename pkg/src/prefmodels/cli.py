"""Batch command line front-end.

Exit status: 0 positive answer / OK, 1 negative answer / violation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import applications as apps
from .fileformats import (
    ParseError,
    format_structure,
    read_defaults,
    read_obligations,
    read_selection,
    read_structure,
    read_theory,
)
from .logic import Alphabet, Formula, FormulaSyntaxError, ModelSet, classical_entails, members, models_of, parse_formula
from .representation import DomainError, ViolationWitness, check_properties, synthesize_structure
from .structures import mu_of_structure


class UsageError(Exception):
    pass


def _query(text: str, what: str = "<query>") -> Formula:
    try:
        return parse_formula(text)
    except FormulaSyntaxError as e:
        raise ParseError(e.reason, 1, e.column, what) from None


def _alphabet(args, *formulas: Formula) -> Alphabet:
    extra = [a for a in (args.atoms or "").split(",") if a]
    try:
        return Alphabet.of(*formulas, extra=extra)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit_models(out: TextIO, bits: ModelSet, alphabet: Alphabet, fmt: str) -> None:
    for m in members(bits):
        if fmt == "tsv":
            out.write(f"{m}\t{alphabet.bitstring(m)}\t{alphabet.render_model(m)}\n")
        else:
            out.write(f"{alphabet.bitstring(m)}  {alphabet.render_model(m)}\n")


def _answer(out: TextIO, yes: bool) -> int:
    out.write("YES\n" if yes else "NO\n")
    return 0 if yes else 1


def cmd_models(args, out: TextIO) -> int:
    theory = read_theory(args.theory)
    alphabet = _alphabet(args, *theory)
    bits = models_of(theory, alphabet)
    _emit_models(out, bits, alphabet, args.format)
    return 0 if bits else 1


def cmd_entail(args, out: TextIO) -> int:
    theory = read_theory(args.theory)
    q = _query(args.query)
    alphabet = _alphabet(args, q, *theory)
    return _answer(out, classical_entails(theory, q, alphabet))


def cmd_nml_entail(args, out: TextIO) -> int:
    theory = read_theory(args.theory)
    s = read_structure(args.structure)
    q = _query(args.query)
    alphabet = _alphabet(args, q, *theory)
    if s.models >> alphabet.n_models:
        raise UsageError(
            f"{args.structure}: structure mentions model {s.models.bit_length() - 1} "
            f"but the alphabet {','.join(alphabet.atoms)} has only {alphabet.n_models} models"
        )
    minimal = mu_of_structure(s, models_of(theory, alphabet))
    code = _answer(out, minimal & ~models_of([q], alphabet) == 0)
    out.write("minimal models:\n")
    _emit_models(out, minimal, alphabet, args.format)
    return code


def cmd_defaults(args, out: TextIO) -> int:
    dt = read_defaults(args.defaults)
    given: list[Formula] = read_theory(args.theory) if args.theory else []
    given += [_query(g, "<given>") for g in args.given]
    q = _query(args.query)
    extra = {a for a in (args.atoms or "").split(",") if a} | set(q.atoms())
    try:
        minimal, alphabet = apps.default_minimal_models(dt, given, extra)
    except ValueError as e:
        raise UsageError(str(e)) from None
    code = _answer(out, minimal & ~models_of([q], alphabet) == 0)
    out.write("minimal models:\n")
    _emit_models(out, minimal, alphabet, args.format)
    return code


def cmd_deontic(args, out: TextIO) -> int:
    obs = read_obligations(args.obligations)
    facts = read_theory(args.theory) if args.theory else []
    q = _query(args.query) if args.query else None
    alphabet = _alphabet(args, *facts, *obs.obligations, *([q] if q else []))
    mode = "count" if args.count else "subset"
    ideal = apps.ideal_worlds(facts, obs, mode, alphabet)
    code = 0 if ideal else 1
    if q is not None:
        code = _answer(out, ideal & ~models_of([q], alphabet) == 0)
    out.write(f"ideal worlds ({mode}):\n")
    _emit_models(out, ideal, alphabet, args.format)
    return code


def _witness(out: TextIO, w: ViolationWitness, fmt: str) -> int:
    if fmt == "tsv":
        sub = "" if w.x_sub is None else ",".join(map(str, members(w.x_sub)))
        out.write(f"{w.kind}\t{','.join(map(str, members(w.x)))}\t{sub}\t{w.model}\n")
    else:
        out.write(f"{w}\n")
    return 1


def cmd_check_mu(args, out: TextIO) -> int:
    sel = read_selection(args.mu)
    try:
        w = check_properties(sel)
    except DomainError as e:
        raise UsageError(f"{args.mu}: {e}") from None
    if w is None:
        out.write("OK\n")
        return 0
    return _witness(out, w, args.format)


def cmd_synthesize(args, out: TextIO) -> int:
    sel = read_selection(args.mu)
    if not sel.is_full_powerset():
        raise UsageError(f"{args.mu}: every subset of the universe must appear exactly once")
    result = synthesize_structure(sel)
    if isinstance(result, ViolationWitness):
        return _witness(out, result, args.format)
    out.write("VERIFIED\n" if result.verified else "NOT VERIFIED\n")
    for m, k in result.copies_per_model.items():
        out.write(f"{m}\t{k}\n" if args.format == "tsv" else f"copies {m}: {k}\n")
    if args.emit:
        Path(args.emit).write_text(format_structure(result.structure), encoding="utf-8")
    return 0 if result.verified else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prefmodels", description="Preferential model semantics toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "tsv"], default="text")
    common.add_argument("--atoms", help="comma-separated atoms added to the alphabet")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("models", parents=[common], help="list the models of a theory")
    p.add_argument("-t", "--theory", required=True)
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("entail", parents=[common], help="classical consequence")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("-q", "--query", required=True)
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("nml-entail", parents=[common], help="preferential consequence over a structure file")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("-s", "--structure", required=True)
    p.add_argument("-q", "--query", required=True)
    p.set_defaults(func=cmd_nml_entail)

    p = sub.add_parser("defaults", parents=[common], help="default reasoning with abnormality minimization")
    p.add_argument("-d", "--defaults", required=True)
    p.add_argument("-t", "--theory", help="extra premises, one per line")
    p.add_argument("-g", "--given", action="append", default=[], help="extra premise (repeatable)")
    p.add_argument("-q", "--query", required=True)
    p.set_defaults(func=cmd_defaults)

    p = sub.add_parser("deontic", parents=[common], help="ideal worlds under obligations")
    p.add_argument("-o", "--obligations", required=True)
    p.add_argument("-t", "--theory")
    p.add_argument("-q", "--query")
    p.add_argument("--count", action="store_true", help="compare worlds by number of violations")
    p.set_defaults(func=cmd_deontic)

    p = sub.add_parser("check-mu", parents=[common], help="check (mu-subset) and (mu-PR) on a table")
    p.add_argument("-m", "--mu", required=True)
    p.set_defaults(func=cmd_check_mu)

    p = sub.add_parser("synthesize", parents=[common], help="build a structure realizing a table")
    p.add_argument("-m", "--mu", required=True)
    p.add_argument("--emit", metavar="STRUCT_OUT")
    p.set_defaults(func=cmd_synthesize)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, UsageError, OSError) as e:
        err.write(f"error: {e}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
