"""Hilbert proofs for N, NR, NF, NRF and their checker.

Rules: ``taut`` (any propositional tautology, checked through the abstraction),
``ax4`` (``[]B -> [][]B``, NF/NRF only), ``mp i j`` (line j is ``line i -> this``),
``nec i`` (this is ``[]`` of line i) and ``ros i`` (line i is ``~C`` and this is
``~[]C``, NR/NRF only).

Text format, one step per line, 0-based step indices, ``#`` comments::

    ~bot      ; taut
    ~[]bot    ; ros 0
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Union

from .logics import Logic
from .propcore import abstraction, is_tautology
from .syntax import Box, Formula, Imp, Not, ParseError, parse, to_text


@dataclass(frozen=True)
class Taut:
    pass


@dataclass(frozen=True)
class Ax4:
    pass


@dataclass(frozen=True)
class MP:
    i: int
    j: int


@dataclass(frozen=True)
class Nec:
    i: int


@dataclass(frozen=True)
class Ros:
    i: int


Just = Union[Taut, Ax4, MP, Nec, Ros]


@dataclass(frozen=True)
class Line:
    formula: Formula
    just: Just


@dataclass(frozen=True)
class Proof:
    lines: tuple[Line, ...]

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula

    @classmethod
    def of(cls, *steps: tuple[Formula | str, Just]) -> "Proof":
        return cls(tuple(Line(parse(f) if isinstance(f, str) else f, j) for f, j in steps))


@dataclass(frozen=True)
class ProofCheck:
    accepted: bool
    line: int | None = None
    rule: str | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted

    def describe(self) -> str:
        if self.accepted:
            return "accepted"
        return f"rejected at line {self.line} ({self.rule}): {self.reason}"


def _rule_name(j: Just) -> str:
    return type(j).__name__.lower()


def _check_line(logic: Logic, lines: tuple[Line, ...], k: int) -> str | None:
    """Reason line ``k`` is not licensed, or None."""
    f, j = lines[k].formula, lines[k].just

    def earlier(i: int) -> Formula:
        if not 0 <= i < k:
            raise IndexError(f"step {i} is not an earlier line")
        return lines[i].formula

    try:
        if isinstance(j, Taut):
            if not is_tautology(abstraction(f)):
                return "not a propositional tautology"
        elif isinstance(j, Ax4):
            if not logic.four:
                return f"axiom Ax4 unavailable in {logic}"
            if not (isinstance(f, Imp) and isinstance(f.left, Box) and f.right == Box(f.left)):
                return "not an instance of []B -> [][]B"
        elif isinstance(j, MP):
            minor, major = earlier(j.i), earlier(j.j)
            if major != Imp(minor, f):
                return f"line {j.j} is not (line {j.i} -> this formula)"
        elif isinstance(j, Nec):
            if f != Box(earlier(j.i)):
                return f"not the necessitation of line {j.i}"
        elif isinstance(j, Ros):
            if not logic.rosser:
                return f"rule Ros unavailable in {logic}"
            premise = earlier(j.i)
            if not isinstance(premise, Not):
                return f"line {j.i} is not a negation"
            if f != Not(Box(premise.arg)):
                return f"not ~[]C for premise ~C on line {j.i}"
        else:
            return f"unknown justification {j!r}"
    except IndexError as exc:
        return str(exc)
    return None


def check_proof(logic: Logic, pf: Proof) -> ProofCheck:
    logic = Logic(logic)
    if not pf.lines:
        return ProofCheck(False, None, None, "empty proof")
    for k, line in enumerate(pf.lines):
        reason = _check_line(logic, pf.lines, k)
        if reason is not None:
            return ProofCheck(False, k, _rule_name(line.just), reason)
    return ProofCheck(True)


class ProofSyntaxError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_ARITY = {"taut": (Taut, 0), "ax4": (Ax4, 0), "mp": (MP, 2), "nec": (Nec, 1), "ros": (Ros, 1)}


def parse_justification(text: str) -> Just:
    parts = text.split()
    if not parts or parts[0].lower() not in _ARITY:
        raise ValueError(f"unknown rule {text.strip()!r}")
    cls, arity = _ARITY[parts[0].lower()]
    if len(parts) - 1 != arity:
        raise ValueError(f"{parts[0]} takes {arity} step index(es)")
    try:
        return cls(*(int(p) for p in parts[1:]))
    except ValueError:
        raise ValueError(f"bad step index in {text.strip()!r}") from None


def parse_proof(text: str) -> Proof:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ";" not in body:
            raise ProofSyntaxError(lineno, "expected '<formula> ; <rule>'")
        ftext, jtext = body.rsplit(";", 1)
        try:
            formula = parse(ftext.strip())
        except ParseError as exc:
            raise ProofSyntaxError(lineno, str(exc)) from exc
        try:
            just = parse_justification(jtext)
        except ValueError as exc:
            raise ProofSyntaxError(lineno, str(exc)) from exc
        lines.append(Line(formula, just))
    return Proof(tuple(lines))


def format_justification(j: Just) -> str:
    if isinstance(j, MP):
        return f"mp {j.i} {j.j}"
    if isinstance(j, (Nec, Ros)):
        return f"{_rule_name(j)} {j.i}"
    return _rule_name(j)


def format_proof(pf: Proof) -> str:
    return "".join(f"{to_text(l.formula)} ; {format_justification(l.just)}\n" for l in pf.lines)


@dataclass(frozen=True)
class LibraryProof:
    name: str
    logic: Logic
    expect_accept: bool
    expect_reason: str
    proof: Proof


def _header(text: str, key: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and line[1:].strip().startswith(key + ":"):
            return line[1:].strip()[len(key) + 1:].strip()
    raise ValueError(f"missing '# {key}:' header")


def proof_library() -> list[LibraryProof]:
    """The shipped handwritten proofs with their expected outcomes."""
    out = []
    folder = resources.files("nprov").joinpath("data/proofs")
    for entry in sorted(folder.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".prf"):
            continue
        text = entry.read_text()
        expect = _header(text, "expect")
        verdict, _, reason = expect.partition(" ")
        out.append(LibraryProof(entry.name[:-4], Logic.parse(_header(text, "logic")),
                                verdict == "accept", reason.strip(), parse_proof(text)))
    return out
