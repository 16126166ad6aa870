"""Decision procedure for N, NR, NF and NRF.

World types are boolean assignments to Sub(A) that respect the connectives;
for NF/NRF they must also satisfy ``[]B -> [][]B`` whenever ``[][]B`` is a
subformula. Starting from all of them we repeatedly delete any type that
cannot be given the successors it needs:

* a false ``[]B`` needs some surviving type with ``B`` false;
* for NR/NRF, a true ``[]B`` needs some surviving type with ``B`` true.

``A`` is valid iff no surviving type makes it false. Otherwise the survivors
(cut down to a small witness-closed subset) are turned into a countermodel
with the canonical relation ``X ~B~> Y  iff  []B not in X or B in Y``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .logics import Logic
from .program import Program, compile_program
from .semantics import NFrame, NModel, check_conditions, forces, model_to_dict
from .syntax import Atom, Box, Formula, subformulas, to_text


class CountermodelError(AssertionError):
    """An Invalid verdict whose model does not refute the formula (internal bug)."""


@dataclass(frozen=True)
class WorldType:
    formulas: tuple[Formula, ...]
    values: tuple[bool, ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __getitem__(self, b: Formula) -> bool:
        index = self._index if self._index is not None else {f: i for i, f in enumerate(self.formulas)}
        return self.values[index[b]]

    def true_formulas(self) -> list[Formula]:
        return [f for f, v in zip(self.formulas, self.values) if v]

    def as_dict(self) -> dict[Formula, bool]:
        return dict(zip(self.formulas, self.values))


@dataclass
class Verdict:
    logic: Logic
    formula: Formula
    valid: bool
    countermodel: NModel | None = None
    refuting_world: int | None = None
    complete: bool = True
    method: str = "fixpoint"

    @property
    def kind(self) -> str:
        return "valid" if self.valid else "invalid"

    def to_dict(self) -> dict:
        out = {"logic": str(self.logic), "formula": to_text(self.formula), "verdict": self.kind}
        if not self.complete:
            out["complete"] = False
        if not self.valid:
            out["countermodel"] = model_to_dict(self.countermodel)
            out["refuting_world"] = self.refuting_world
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def verify(self) -> None:
        """Raise :class:`CountermodelError` unless an Invalid verdict carries a genuine countermodel."""
        if self.valid:
            return
        m, w = self.countermodel, self.refuting_world
        if m is None or w is None:
            raise CountermodelError("invalid verdict without a countermodel")
        if forces(m, w, self.formula):
            raise CountermodelError(f"world {w} forces {to_text(self.formula)}")
        report = check_conditions(m.frame, self.logic, self.formula)
        if not report.ok:
            raise CountermodelError("; ".join(v.describe() for v in report.violations))


def _type_rows(prog: Program, logic: Logic, jit=None) -> tuple[np.ndarray, np.ndarray]:
    table = kernels.type_table(prog.op, prog.left, prog.right, prog.free, prog.n_free, jit=jit)
    alive = np.ones(table.shape[0], dtype=np.bool_)
    if logic.four:
        for outer, inner in prog.nested:
            alive &= ~table[:, inner] | table[:, outer]
    return table, alive


def _as_types(prog: Program, table: np.ndarray, rows) -> list[WorldType]:
    return [WorldType(prog.sub, tuple(bool(v) for v in table[r]), prog.index) for r in rows]


def world_types(a: Formula, logic: Logic) -> list[WorldType]:
    """All connective-respecting assignments over Sub(a), 4-closed for NF/NRF."""
    logic = Logic(logic)
    prog = compile_program(a)
    table, alive = _type_rows(prog, logic)
    return _as_types(prog, table, np.flatnonzero(alive))


def surviving_types(a: Formula, logic: Logic, jit=None) -> list[WorldType]:
    """The fixpoint of the elimination (the candidate canonical worlds)."""
    logic = Logic(logic)
    prog = compile_program(a)
    table, alive = _type_rows(prog, logic, jit)
    alive = kernels.eliminate(table, alive, prog.box_pos, prog.child_pos, logic.rosser, jit=jit)
    return _as_types(prog, table, np.flatnonzero(alive))


def _witness_closure(prog: Program, table: np.ndarray, alive: np.ndarray, start: int,
                     serial: bool) -> list[int]:
    """A small subset of the survivors, containing ``start``, closed under the witness demands."""
    chosen = [start]
    changed = True
    while changed:
        changed = False
        for b, c in zip(prog.box_pos, prog.child_pos):
            for need in (False, True):
                if need and not serial:
                    continue
                rows = table[chosen]
                demanded = (rows[:, b] == need).any()
                if demanded and not (rows[:, c] == need).any():
                    pool = np.flatnonzero(alive & (table[:, c] == need))
                    chosen.append(int(pool[0]))
                    changed = True
    return chosen


def _successors(logic: Logic, types: Sequence[WorldType], x: WorldType, box: Box) -> list[int]:
    b = box.arg
    if x[box]:
        if logic is Logic.N:
            return []
        return [i for i, y in enumerate(types) if y[b]]
    if logic.four:
        return list(range(len(types)))
    return [i for i, y in enumerate(types) if not y[b]]


def extract_model(types: Sequence[WorldType], a: Formula, logic: Logic) -> NModel:
    """Build the N-model whose world ``i`` is ``types[i]``.

    Raises ``ValueError`` if the types are not over Sub(a) or miss a witness.
    """
    logic = Logic(logic)
    types = list(types)
    if not types:
        raise ValueError("no world types")
    sub = tuple(subformulas(a))
    for t in types:
        if tuple(t.formulas) != sub:
            raise ValueError("world type is not over Sub(A)")
    box_list = [b for b in sub if isinstance(b, Box)]
    for box in box_list:
        b = box.arg
        if any(not t[box] for t in types) and all(t[b] for t in types):
            raise ValueError(f"no world refutes {to_text(b)} although some world refutes {to_text(box)}")
        if logic.rosser and any(t[box] for t in types) and not any(t[b] for t in types):
            raise ValueError(f"no world satisfies {to_text(b)}; seriality for it would fail")
    relations = {}
    for box in box_list:
        pairs = []
        for i, x in enumerate(types):
            pairs.extend((i, j) for j in _successors(logic, types, x, box))
        relations[box.arg] = frozenset(pairs)
    valuation = {i: frozenset(f.name for f in t.true_formulas() if isinstance(f, Atom))
                 for i, t in enumerate(types)}
    return NModel(NFrame(tuple(range(len(types))), relations), valuation)


def decide(logic: Logic, a: Formula, jit=None) -> Verdict:
    """Decide ``logic |- a``; an Invalid verdict carries a verified countermodel refuted at world 0."""
    logic = Logic(logic)
    prog = compile_program(a)
    table, alive = _type_rows(prog, logic, jit)
    alive = kernels.eliminate(table, alive, prog.box_pos, prog.child_pos, logic.rosser, jit=jit)
    refuters = np.flatnonzero(alive & ~table[:, prog.root])
    if not refuters.size:
        return Verdict(logic, a, True)
    rows = _witness_closure(prog, table, alive, int(refuters[0]), logic.rosser)
    model = extract_model(_as_types(prog, table, rows), a, logic)
    verdict = Verdict(logic, a, False, model, 0)
    verdict.verify()
    return verdict
