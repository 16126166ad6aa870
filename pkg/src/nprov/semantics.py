"""Finite N-frames and N-models.

An N-frame carries one accessibility relation per formula: ``relations[B]`` is
the relation read by ``[]B``. Formulas missing from the map have the empty
relation, so only the relations indexed by boxed subformulas of the formula
under study need to be stored.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .logics import Logic
from .syntax import (And, Atom, Bot, Box, Formula, Imp, Not, Or, atoms, boxed,
                     parse, subformulas, to_text)


@dataclass(frozen=True)
class NFrame:
    worlds: tuple[int, ...]
    relations: Mapping[Formula, frozenset[tuple[int, int]]] = field(default_factory=dict)

    def __post_init__(self):
        worlds = tuple(self.worlds)
        if not worlds:
            raise ValueError("an N-frame needs at least one world")
        if len(set(worlds)) != len(worlds):
            raise ValueError("duplicate world ids")
        ws = set(worlds)
        rels = {}
        for b, pairs in self.relations.items():
            pairs = frozenset((int(x), int(y)) for x, y in pairs)
            for x, y in pairs:
                if x not in ws or y not in ws:
                    raise ValueError(f"relation for {to_text(b)} mentions unknown world in {(x, y)}")
            rels[b] = pairs
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "relations", rels)
        succ = {}
        for b, pairs in rels.items():
            table: dict[int, list[int]] = {w: [] for w in worlds}
            for x, y in sorted(pairs):
                table[x].append(y)
            succ[b] = {w: tuple(ys) for w, ys in table.items()}
        object.__setattr__(self, "_succ", succ)

    def successors(self, b: Formula, x: int) -> tuple[int, ...]:
        table = self._succ.get(b)
        return table[x] if table is not None else ()

    def relation(self, b: Formula) -> frozenset[tuple[int, int]]:
        return self.relations.get(b, frozenset())


@dataclass(frozen=True)
class NModel:
    frame: NFrame
    valuation: Mapping[int, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        ws = set(self.frame.worlds)
        val = {}
        for w, names in self.valuation.items():
            if w not in ws:
                raise ValueError(f"valuation mentions unknown world {w}")
            val[w] = frozenset(names)
        object.__setattr__(self, "valuation", val)

    @property
    def worlds(self) -> tuple[int, ...]:
        return self.frame.worlds

    def true_atoms(self, w: int) -> frozenset[str]:
        return self.valuation.get(w, frozenset())


def extension(m: NModel, a: Formula) -> frozenset[int]:
    """The set of worlds of ``m`` forcing ``a``, computed bottom-up over Sub(a)."""
    ws = m.worlds
    everything = frozenset(ws)
    ext: dict[Formula, frozenset[int]] = {}
    for b in subformulas(a):
        if isinstance(b, Bot):
            e = frozenset()
        elif isinstance(b, Atom):
            e = frozenset(w for w in ws if b.name in m.true_atoms(w))
        elif isinstance(b, Not):
            e = everything - ext[b.arg]
        elif isinstance(b, And):
            e = ext[b.left] & ext[b.right]
        elif isinstance(b, Or):
            e = ext[b.left] | ext[b.right]
        elif isinstance(b, Imp):
            e = (everything - ext[b.left]) | ext[b.right]
        else:
            inner = ext[b.arg]
            e = frozenset(w for w in ws if all(y in inner for y in m.frame.successors(b.arg, w)))
        ext[b] = e
    return ext[a]


def forces(m: NModel, w: int, a: Formula) -> bool:
    if w not in m.frame.worlds:
        raise KeyError(f"unknown world {w}")
    return w in extension(m, a)


def valid_in_model(m: NModel, a: Formula) -> bool:
    return len(extension(m, a)) == len(m.worlds)


class BudgetExceeded(RuntimeError):
    pass


def valuations(worlds: Iterable[int], names: Iterable[str]) -> Iterable[dict[int, frozenset[str]]]:
    """Every valuation of ``names`` over ``worlds``."""
    worlds = list(worlds)
    names = list(names)
    cells = [(w, p) for w in worlds for p in names]
    for bits in itertools.product((False, True), repeat=len(cells)):
        val: dict[int, set[str]] = {w: set() for w in worlds}
        for (w, p), on in zip(cells, bits):
            if on:
                val[w].add(p)
        yield {w: frozenset(s) for w, s in val.items()}


def valid_in_frame(f: NFrame, a: Formula, budget: int = 1 << 22) -> bool:
    """Validity in every model on ``f``; only the atoms of ``a`` are varied."""
    names = atoms(a)
    if 2 ** (len(names) * len(f.worlds)) > budget:
        raise BudgetExceeded(f"{2 ** (len(names) * len(f.worlds))} valuations exceed budget {budget}")
    return all(valid_in_model(NModel(f, val), a) for val in valuations(f.worlds, names))


# frame conditions

def _serial_witness(f: NFrame, b: Formula) -> int | None:
    for x in f.worlds:
        if not f.successors(b, x):
            return x
    return None


def _transitive_witness(f: NFrame, b: Formula) -> tuple[int, int, int] | None:
    for x in f.worlds:
        direct = set(f.successors(b, x))
        for y in f.successors(Box(b), x):
            for z in f.successors(b, y):
                if z not in direct:
                    return (x, y, z)
    return None


def is_serial_for(f: NFrame, b: Formula) -> bool:
    """Every world has a successor along the relation indexed by ``b``."""
    return _serial_witness(f, b) is None


def is_transitive_for(f: NFrame, b: Formula) -> bool:
    """x ~[]b~> y and y ~b~> z imply x ~b~> z."""
    return _transitive_witness(f, b) is None


class Violation(NamedTuple):
    condition: str  # "serial" or "transitive"
    formula: Formula
    witness: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.condition} fails for {to_text(self.formula)} at worlds {self.witness}"


@dataclass
class ConditionReport:
    logic: Logic
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def check_conditions(f: NFrame, logic: Logic, a: Formula) -> ConditionReport:
    """Check the Sub(a)-restricted frame conditions that ``logic`` demands."""
    logic = Logic(logic)
    out = []
    sub = set(subformulas(a))
    for box in boxed(a):
        b = box.arg
        if logic.rosser:
            x = _serial_witness(f, b)
            if x is not None:
                out.append(Violation("serial", b, (x,)))
        if logic.four and isinstance(b, Box) and b in sub:
            # []b = [][]c is in Sub(a), so c must be transitive
            c = b.arg
            t = _transitive_witness(f, c)
            if t is not None:
                out.append(Violation("transitive", c, t))
    return ConditionReport(logic, out)


# serialization

def model_to_dict(m: NModel) -> dict:
    return {
        "worlds": list(m.worlds),
        "relations": {to_text(b): [list(p) for p in sorted(pairs)]
                      for b, pairs in m.frame.relations.items()},
        "valuation": {str(w): sorted(m.true_atoms(w)) for w in m.worlds if m.true_atoms(w)},
    }


def model_from_dict(data: dict) -> NModel:
    try:
        worlds = tuple(int(w) for w in data["worlds"])
        relations = {parse(k): frozenset(tuple(p) for p in v)
                     for k, v in data.get("relations", {}).items()}
        valuation = {int(w): frozenset(v) for w, v in data.get("valuation", {}).items()}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed model: {exc}") from exc
    return NModel(NFrame(worlds, relations), valuation)


def model_to_json(m: NModel, **kwargs) -> str:
    return json.dumps(model_to_dict(m), **kwargs)


def model_from_json(text: str) -> NModel:
    return model_from_dict(json.loads(text))


def model_to_dot(m: NModel, name: str = "model") -> str:
    lines = [f"digraph {name} {{"]
    for w in m.worlds:
        label = ",".join(sorted(m.true_atoms(w)))
        lines.append(f'  w{w} [label="{w}: {{{label}}}"];')
    for b, pairs in m.frame.relations.items():
        label = to_text(b).replace('"', '\\"')
        for x, y in sorted(pairs):
            lines.append(f'  w{x} -> w{y} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
