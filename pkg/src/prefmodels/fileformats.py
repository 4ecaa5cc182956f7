"""Readers and writers for the plain-text input files.

theory       one formula per line
structure    ``copies: 0:0 1:0 1:1`` then ``0:0 < 1:0`` lines (left preferred)
selection    ``universe: 0 1`` then ``{0,1} -> {0}`` lines
defaults     ``default: bird => fly`` lines mixed with fact lines
obligations  ``ought: !murder`` lines

``#`` starts a comment everywhere.  Every reader raises ``ParseError`` with a
1-based line and column.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from .applications import DefaultTheory, ObligationSet
from .logic import FormulaSyntaxError, Formula, ModelSet, format_set, parse_formula
from .representation import MAX_UNIVERSE
from .structures import Copy, PreferentialStructure, SelectionFunction


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1, source: str = "<input>"):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        super().__init__(f"{source}:{line}:{column}: {message}")


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield lineno, body


def _formula(text: str, lineno: int, offset: int, source: str) -> Formula:
    try:
        return parse_formula(text)
    except FormulaSyntaxError as e:
        raise ParseError(e.reason, lineno, offset + e.column, source) from None


def _read(path: str | Path) -> tuple[str, str]:
    return Path(path).read_text(encoding="utf-8"), str(path)


# --- theories ----------------------------------------------------------------


def parse_theory_text(text: str, source: str = "<input>") -> list[Formula]:
    return [_formula(body, lineno, 0, source) for lineno, body in _lines(text)]


def read_theory(path: str | Path) -> list[Formula]:
    return parse_theory_text(*_read(path))


# --- structures --------------------------------------------------------------

_COPY_RE = re.compile(r"(\d+):(\d+)")


def _copy(tok: str, lineno: int, col: int, source: str) -> Copy:
    m = _COPY_RE.fullmatch(tok)
    if m is None:
        raise ParseError(f"expected model:tag, got {tok!r}", lineno, col, source)
    return Copy(int(m.group(1)), int(m.group(2)))


def _tokens(body: str, start: int = 0) -> Iterator[tuple[str, int]]:
    for m in re.finditer(r"\S+", body[start:]):
        yield m.group(), start + m.start() + 1


def parse_structure_text(text: str, source: str = "<input>") -> PreferentialStructure:
    copies: list[Copy] | None = None
    prefers = []
    for lineno, body in _lines(text):
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if stripped.startswith("copies:"):
            if copies is not None:
                raise ParseError("duplicate 'copies:' line", lineno, indent + 1, source)
            copies = []
            for tok, col in _tokens(body, indent + len("copies:")):
                c = _copy(tok, lineno, col, source)
                if c in copies:
                    raise ParseError(f"duplicate copy {c}", lineno, col, source)
                copies.append(c)
            continue
        if copies is None:
            raise ParseError("expected 'copies:' line first", lineno, indent + 1, source)
        toks = list(_tokens(body))
        if len(toks) != 3 or toks[1][0] != "<":
            raise ParseError("expected 'm:t < m:t'", lineno, indent + 1, source)
        a = _copy(toks[0][0], lineno, toks[0][1], source)
        b = _copy(toks[2][0], lineno, toks[2][1], source)
        for c, col in ((a, toks[0][1]), (b, toks[2][1])):
            if c not in copies:
                raise ParseError(f"copy {c} not declared", lineno, col, source)
        if a == b:
            raise ParseError(f"reflexive pair {a} < {a}", lineno, toks[0][1], source)
        prefers.append((a, b))
    if copies is None:
        raise ParseError("missing 'copies:' line", 1, 1, source)
    return PreferentialStructure(frozenset(copies), frozenset(prefers))


def read_structure(path: str | Path) -> PreferentialStructure:
    return parse_structure_text(*_read(path))


def format_structure(s: PreferentialStructure) -> str:
    lines = ["copies: " + " ".join(str(c) for c in sorted(s.copies))]
    lines += [f"{a} < {b}" for a, b in sorted(s.prefers, key=lambda p: (p[1], p[0]))]
    return "\n".join(lines) + "\n"


# --- selection tables --------------------------------------------------------

_SET_RE = re.compile(r"\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}")


def _set(body: str, pos: int, lineno: int, source: str) -> tuple[ModelSet, int]:
    while pos < len(body) and body[pos].isspace():
        pos += 1
    m = _SET_RE.match(body, pos)
    if m is None:
        raise ParseError("expected a set like {0,1}", lineno, pos + 1, source)
    bits = 0
    if m.group(1):
        for tok in m.group(1).split(","):
            bits |= 1 << int(tok)
    return bits, m.end()


def parse_selection_text(text: str, source: str = "<input>") -> SelectionFunction:
    universe: ModelSet | None = None
    table: dict[ModelSet, ModelSet] = {}
    for lineno, body in _lines(text):
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if stripped.startswith("universe:"):
            if universe is not None:
                raise ParseError("duplicate 'universe:' line", lineno, indent + 1, source)
            universe = 0
            for tok, col in _tokens(body, indent + len("universe:")):
                if not tok.isdigit():
                    raise ParseError(f"expected a model index, got {tok!r}", lineno, col, source)
                universe |= 1 << int(tok)
            if bin(universe).count("1") > MAX_UNIVERSE:
                raise ParseError(f"universe has more than {MAX_UNIVERSE} models", lineno, indent + 1, source)
            continue
        if universe is None:
            raise ParseError("expected 'universe:' line first", lineno, indent + 1, source)
        key, pos = _set(body, 0, lineno, source)
        arrow = body.find("->", pos)
        if arrow < 0 or body[pos:arrow].strip():
            raise ParseError("expected '->'", lineno, pos + 1, source)
        value, end = _set(body, arrow + 2, lineno, source)
        if body[end:].strip():
            raise ParseError("trailing text", lineno, end + 1, source)
        if key & ~universe:
            raise ParseError(f"{format_set(key)} is not a subset of the universe", lineno, indent + 1, source)
        if key in table:
            raise ParseError(f"duplicate entry for {format_set(key)}", lineno, indent + 1, source)
        table[key] = value
    if universe is None:
        raise ParseError("missing 'universe:' line", 1, 1, source)
    return SelectionFunction(universe, table)


def read_selection(path: str | Path) -> SelectionFunction:
    return parse_selection_text(*_read(path))


def format_selection(sel: SelectionFunction) -> str:
    lines = ["universe: " + " ".join(str(m) for m in range(sel.universe.bit_length()) if sel.universe >> m & 1)]
    lines += [f"{format_set(x)} -> {format_set(sel(x))}" for x in sel.domain]
    return "\n".join(lines) + "\n"


# --- defaults and obligations ------------------------------------------------


def parse_defaults_text(text: str, source: str = "<input>") -> DefaultTheory:
    facts = []
    rules = []
    for lineno, body in _lines(text):
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if stripped.startswith("default:"):
            start = indent + len("default:")
            rest = body[start:]
            if "=>" not in rest:
                raise ParseError("expected 'default: <formula> => <formula>'", lineno, start + 1, source)
            split = rest.index("=>")
            pre = _formula(rest[:split], lineno, start, source)
            con = _formula(rest[split + 2 :], lineno, start + split + 2, source)
            rules.append((pre, con))
        else:
            facts.append(_formula(body, lineno, 0, source))
    dt = DefaultTheory.build(facts, rules)
    try:
        dt.validate()
    except ValueError as e:
        raise ParseError(str(e), 1, 1, source) from None
    return dt


def read_defaults(path: str | Path) -> DefaultTheory:
    return parse_defaults_text(*_read(path))


def parse_obligations_text(text: str, source: str = "<input>") -> ObligationSet:
    obs = []
    for lineno, body in _lines(text):
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        if not stripped.startswith("ought:"):
            raise ParseError("expected 'ought: <formula>'", lineno, indent + 1, source)
        start = indent + len("ought:")
        obs.append(_formula(body[start:], lineno, start, source))
    return ObligationSet(tuple(obs))


def read_obligations(path: str | Path) -> ObligationSet:
    return parse_obligations_text(*_read(path))
