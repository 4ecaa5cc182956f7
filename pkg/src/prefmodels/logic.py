"""Propositional formulas, parsing, model enumeration and classical consequence.

Models are integers: bit ``i`` of a model index is the truth value of the
``i``-th atom of the alphabet (atoms sorted by name).  A set of models is
itself an integer used as a bit set over the ``2**n`` model indices, so
union/intersection/complement are ``|``, ``&`` and ``^ universe``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_ATOMS = 16

ModelSet = int
"""Bit set over model indices (bit ``m`` set iff model ``m`` is a member)."""


class FormulaSyntaxError(ValueError):
    """Malformed formula text.  ``pos`` is the 0-based offset into the text."""

    def __init__(self, message: str, text: str, pos: int, line: int = 1):
        self.text = text
        self.pos = pos
        self.line = line
        self.column = pos + 1
        self.reason = message
        super().__init__(f"{message} at position {pos} (line {line}, column {self.column})")


class UnknownAtomError(ValueError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"unknown atom {atom!r}")


# ---------------------------------------------------------------------------
# Alphabet


@dataclass(frozen=True)
class Alphabet:
    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        names = tuple(sorted(set(atoms)))
        if not 1 <= len(names) <= MAX_ATOMS:
            raise ValueError(f"alphabet must have between 1 and {MAX_ATOMS} atoms, got {len(names)}")
        for name in names:
            if not _ATOM_RE.fullmatch(name):
                raise ValueError(f"invalid atom name {name!r}")
        object.__setattr__(self, "atoms", names)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(names)})

    @classmethod
    def of(cls, *formulas: "Formula", extra: Iterable[str] = ()) -> "Alphabet":
        """Smallest alphabet covering the given formulas (plus ``extra`` atoms)."""
        names = set(extra)
        for f in formulas:
            names |= f.atoms()
        if not names:
            names = {"p"}
        return cls(names)

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAtomError(name) from None

    @property
    def n_models(self) -> int:
        return 1 << len(self.atoms)

    @property
    def universe(self) -> ModelSet:
        return (1 << self.n_models) - 1

    def models(self) -> range:
        return range(self.n_models)

    def atom_set(self, name: str) -> ModelSet:
        """Models in which ``name`` is true."""
        i = self.index(name)
        bits = 0
        for m in range(self.n_models):
            if m >> i & 1:
                bits |= 1 << m
        return bits

    def bitstring(self, m: int) -> str:
        """Truth values in alphabet order, e.g. ``'101'`` for p, !q, r."""
        return "".join("1" if m >> i & 1 else "0" for i in range(len(self.atoms)))

    def render_model(self, m: int) -> str:
        return " ".join(a if m >> i & 1 else "!" + a for i, a in enumerate(self.atoms))

    def model(self, true_atoms: Iterable[str]) -> int:
        """Model index in which exactly ``true_atoms`` hold."""
        m = 0
        for a in true_atoms:
            m |= 1 << self.index(a)
        return m


# ---------------------------------------------------------------------------
# Formula AST


class Formula:
    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        out: set[str] = set()
        stack: list[Formula] = [self]
        while stack:
            f = stack.pop()
            if isinstance(f, Atom):
                out.add(f.name)
            else:
                stack.extend(f.children())
        return frozenset(out)

    def children(self) -> tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Implies(_Binary):
    pass


class Iff(_Binary):
    pass


Theory = Sequence[Formula]


# ---------------------------------------------------------------------------
# Parsing and rendering

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|([!&|()])|([a-z][a-zA-Z0-9_]*)|([TF])(?![a-zA-Z0-9_]))")

# binding strength, loosest first
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_AT_LEVEL = {v: k for k, v in _PREC.items()}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet | None):
        self.text = text
        self.alphabet = alphabet
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def error(self, msg: str) -> FormulaSyntaxError:
        tok, pos = self.tokens[self.i]
        what = "end of input" if tok == "" else repr(tok)
        return FormulaSyntaxError(f"{msg}, found {what}", self.text, pos)

    def parse(self) -> Formula:
        f = self.binary(1)
        if self.peek() != "":
            raise self.error("expected end of input")
        return f

    def binary(self, level: int) -> Formula:
        if level > 4:
            return self.unary()
        left = self.binary(level + 1)
        cls = _AT_LEVEL[level]
        sym = _SYMBOL[cls]
        if cls is Implies:
            if self.peek() == sym:
                self.i += 1
                return Implies(left, self.binary(level))
            return left
        while self.peek() == sym:
            self.i += 1
            left = cls(left, self.binary(level + 1))
        return left

    def unary(self) -> Formula:
        tok, _ = self.tokens[self.i]
        if tok == "!":
            self.i += 1
            return Not(self.unary())
        if tok == "(":
            self.i += 1
            f = self.binary(1)
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.i += 1
            return f
        if tok == "T":
            self.i += 1
            return Top()
        if tok == "F":
            self.i += 1
            return Bot()
        if tok and _ATOM_RE.fullmatch(tok):
            if self.alphabet is not None and tok not in self.alphabet:
                raise UnknownAtomError(tok)
            self.i += 1
            return Atom(tok)
        raise self.error("expected a formula")


def parse_formula(text: str, alphabet: Alphabet | None = None) -> Formula:
    """Parse ``text``; with an alphabet, atoms outside it raise ``UnknownAtomError``.

    Without an alphabet any atom is accepted (collect them with ``Alphabet.of``).
    """
    return _Parser(text, alphabet).parse()


def render(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Not):
        inner = render(f.child)
        if isinstance(f.child, _Binary):
            inner = f"({inner})"
        return "!" + inner
    cls = type(f)
    prec = _PREC[cls]
    left, right = render(f.left), render(f.right)
    lp = _PREC.get(type(f.left), 9)
    rp = _PREC.get(type(f.right), 9)
    if cls is Implies:  # right-associative
        if lp <= prec:
            left = f"({left})"
        if rp < prec:
            right = f"({right})"
    else:  # left-associative
        if lp < prec:
            left = f"({left})"
        if rp <= prec:
            right = f"({right})"
    return f"{left} {_SYMBOL[cls]} {right}"


def parse_theory(text: str, alphabet: Alphabet | None = None) -> list[Formula]:
    """One formula per line; ``#`` comments and blank lines are skipped.

    Syntax errors are re-raised with the line number of the offending line.
    """
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            out.append(parse_formula(body, alphabet))
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(e.reason, line, e.pos, lineno) from None
    return out


# ---------------------------------------------------------------------------
# Semantics


def evaluate(m: int, f: Formula, alphabet: Alphabet) -> bool:
    """Truth value of ``f`` in model ``m``."""
    if isinstance(f, Atom):
        return bool(m >> alphabet.index(f.name) & 1)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not evaluate(m, f.child, alphabet)
    a = evaluate(m, f.left, alphabet)
    b = evaluate(m, f.right, alphabet)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    if isinstance(f, Iff):
        return a == b
    raise TypeError(f"not a formula: {f!r}")


def _extension(f: Formula, alphabet: Alphabet, atom_sets: dict[str, int]) -> ModelSet:
    # all models at once, one bit-parallel operation per node
    full = alphabet.universe
    if isinstance(f, Atom):
        if f.name not in atom_sets:
            atom_sets[f.name] = alphabet.atom_set(f.name)
        return atom_sets[f.name]
    if isinstance(f, Top):
        return full
    if isinstance(f, Bot):
        return 0
    if isinstance(f, Not):
        return full ^ _extension(f.child, alphabet, atom_sets)
    a = _extension(f.left, alphabet, atom_sets)
    b = _extension(f.right, alphabet, atom_sets)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return (full ^ a) | b
    if isinstance(f, Iff):
        return full ^ (a ^ b)
    raise TypeError(f"not a formula: {f!r}")


def models_of(theory: Iterable[Formula], alphabet: Alphabet) -> ModelSet:
    """Models satisfying every formula; the empty theory yields the whole universe."""
    atom_sets: dict[str, int] = {}
    bits = alphabet.universe
    for f in theory:
        bits &= _extension(f, alphabet, atom_sets)
    return bits


def classical_entails(theory: Sequence[Formula], f: Formula, alphabet: Alphabet | None = None) -> bool:
    if alphabet is None:
        alphabet = Alphabet.of(f, *theory)
    return is_subset(models_of(theory, alphabet), models_of([f], alphabet))


def consequence_set(theory: Sequence[Formula], alphabet: Alphabet) -> ModelSet:
    """Canonical form of the classical closure: two theories have the same
    consequences iff their model sets coincide."""
    return models_of(theory, alphabet)


# ---------------------------------------------------------------------------
# Bit-set helpers


def is_subset(a: ModelSet, b: ModelSet) -> bool:
    return a & ~b == 0


def members(bits: ModelSet) -> Iterator[int]:
    """Model indices in ascending order."""
    m = 0
    while bits:
        if bits & 1:
            yield m
        bits >>= 1
        m += 1


def from_members(ms: Iterable[int]) -> ModelSet:
    bits = 0
    for m in ms:
        bits |= 1 << m
    return bits


def subsets(bits: ModelSet) -> list[ModelSet]:
    """All subsets of ``bits`` in ascending numeric order."""
    out = []
    sub = bits
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & bits
    out.reverse()
    return out


def lowest(bits: ModelSet) -> int:
    """Smallest member of a nonempty set."""
    return (bits & -bits).bit_length() - 1


def format_set(bits: ModelSet) -> str:
    return "{" + ",".join(str(m) for m in members(bits)) + "}"


Expr = Union[str, Formula]


def as_formula(x: Expr) -> Formula:
    return parse_formula(x) if isinstance(x, str) else x


def as_theory(xs: Iterable[Expr]) -> list[Formula]:
    return [as_formula(x) for x in xs]
