"""Modal formulas: AST, parser, printer and subformula machinery.

Grammar (ASCII)::

    formula := disj ('->' formula)?           right associative
    disj    := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := ('~' | '!' | '[]' | '<>') unary | atom | 'bot' | '_|_' | '(' formula ')'

``<>A`` is sugar for ``~[]~A`` and never appears in the tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Box:
    arg: "Formula"


Formula = Union[Bot, Atom, Not, And, Or, Imp, Box]
BINARY = (And, Or, Imp)

BOT = Bot()
TOP = Imp(BOT, BOT)


def dia(a: Formula) -> Formula:
    return Not(Box(Not(a)))


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def boxes(a: Formula, n: int) -> Formula:
    for _ in range(n):
        a = Box(a)
    return a


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.text = text


_TOKEN = re.compile(
    r"\s*(?:(?P<atom>[a-z][a-z0-9_]*)|(?P<op>_\|_|->|\[\]|<>|[~!&|()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = len(text) - len(text[pos:].lstrip())
            if rest >= len(text):
                break
            raise ParseError(f"unexpected character {text[rest]!r}", rest, text)
        if m.group("atom") is not None:
            kind = "bot" if m.group("atom") == "bot" else "atom"
            tokens.append((kind, m.group("atom"), m.start("atom")))
        else:
            tok = m.group("op")
            tokens.append(("bot" if tok == "_|_" else tok, tok, m.start("op")))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, value, offset = self.tokens[self.i]
        found = "end of input" if kind == "eof" else repr(value)
        raise ParseError(f"expected {what}, found {found}", offset, self.text)

    def formula(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.formula())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.peek() == "|":
            self.take()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind = self.peek()
        if kind in ("~", "!"):
            self.take()
            return Not(self.unary())
        if kind == "[]":
            self.take()
            return Box(self.unary())
        if kind == "<>":
            self.take()
            return dia(self.unary())
        if kind == "atom":
            return Atom(self.take()[1])
        if kind == "bot":
            self.take()
            return BOT
        if kind == "(":
            self.take()
            inner = self.formula()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("a formula")


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula; raises :class:`ParseError` with the offending offset."""
    p = _Parser(text)
    result = p.formula()
    if p.peek() != "eof":
        p.fail("end of input")
    return result


# binding strength used by the printer
_PREC = {Imp: 1, Or: 2, And: 3}
_SYMBOL = {Imp: "->", Or: "|", And: "&"}


def _prec(a: Formula) -> int:
    return _PREC.get(type(a), 4)


def to_text(a: Formula, diamonds: bool = False) -> str:
    """Print ``a`` in the parser's grammar with as few parentheses as round-tripping allows.

    With ``diamonds=True`` every ``~[]~B`` is written ``<>B``.
    """
    def wrap(b: Formula, ok: bool) -> str:
        s = to_text(b, diamonds)
        return s if ok else f"({s})"

    if isinstance(a, Bot):
        return "bot"
    if isinstance(a, Atom):
        return a.name
    if isinstance(a, Not):
        if diamonds and isinstance(a.arg, Box) and isinstance(a.arg.arg, Not):
            return "<>" + wrap(a.arg.arg.arg, _prec(a.arg.arg.arg) >= 4)
        return "~" + wrap(a.arg, _prec(a.arg) >= 4)
    if isinstance(a, Box):
        return "[]" + wrap(a.arg, _prec(a.arg) >= 4)
    p = _PREC[type(a)]
    if isinstance(a, Imp):
        left_ok, right_ok = _prec(a.left) > p, _prec(a.right) >= p
    else:
        left_ok, right_ok = _prec(a.left) >= p, _prec(a.right) > p
    return f"{wrap(a.left, left_ok)} {_SYMBOL[type(a)]} {wrap(a.right, right_ok)}"


def to_unicode(a: Formula) -> str:
    s = to_text(a, diamonds=True)
    for old, new in (("->", "→"), ("[]", "□"), ("<>", "◇"), ("~", "¬"),
                     ("&", "∧"), ("|", "∨"), ("bot", "⊥")):
        s = s.replace(old, new)
    return s


def children(a: Formula) -> tuple[Formula, ...]:
    if isinstance(a, (Not, Box)):
        return (a.arg,)
    if isinstance(a, BINARY):
        return (a.left, a.right)
    return ()


def _postorder(a: Formula) -> Iterator[Formula]:
    for c in children(a):
        yield from _postorder(c)
    yield a


def subformulas(a: Formula) -> list[Formula]:
    """Sub(a) in post-order with first-occurrence dedup; proper subformulas come first."""
    return list(dict.fromkeys(_postorder(a)))


def complement(b: Formula) -> Formula:
    return b.arg if isinstance(b, Not) else Not(b)


def closure(a: Formula) -> list[Formula]:
    """Sub(a) together with the complement of each member."""
    sub = subformulas(a)
    return list(dict.fromkeys(sub + [complement(b) for b in sub]))


def chi(a: Formula) -> Formula:
    """Replace every box by a diamond."""
    if isinstance(a, (Bot, Atom)):
        return a
    if isinstance(a, Not):
        return Not(chi(a.arg))
    if isinstance(a, Box):
        return dia(chi(a.arg))
    return type(a)(chi(a.left), chi(a.right))


def atoms(a: Formula) -> list[str]:
    return [b.name for b in subformulas(a) if isinstance(b, Atom)]


def boxed(a: Formula) -> list[Box]:
    """The box formulas of Sub(a), in Sub order."""
    return [b for b in subformulas(a) if isinstance(b, Box)]


def size(a: Formula) -> int:
    return 1 + sum(size(c) for c in children(a))


def modal_depth(a: Formula) -> int:
    inner = max((modal_depth(c) for c in children(a)), default=0)
    return inner + 1 if isinstance(a, Box) else inner


def count_boxes(a: Formula) -> int:
    return int(isinstance(a, Box)) + sum(count_boxes(c) for c in children(a))


def count_negations(a: Formula) -> int:
    return int(isinstance(a, Not)) + sum(count_negations(c) for c in children(a))
