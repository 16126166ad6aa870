"""Flat array encoding of Sub(A) consumed by the numeric kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .syntax import And, Atom, Bot, Box, Formula, Imp, Not, Or, subformulas

BOT, ATOM, NOT, AND, OR, IMP, BOX = range(7)
_OPCODE = {Bot: BOT, Atom: ATOM, Not: NOT, And: AND, Or: OR, Imp: IMP, Box: BOX}


@dataclass(frozen=True, eq=False)
class Program:
    formula: Formula
    sub: tuple[Formula, ...]
    index: dict
    op: np.ndarray      # int64 opcode per subformula
    left: np.ndarray    # child position or -1
    right: np.ndarray
    slot: np.ndarray    # atom number for atoms, box number for boxes, else -1
    free: np.ndarray    # bit of the world-type label: atoms first, then boxes; -1 if derived
    atom_names: tuple[str, ...]
    box_pos: np.ndarray     # Sub position of each box, in box-number order
    child_pos: np.ndarray   # Sub position of each box's argument
    nested: np.ndarray      # rows (outer box pos, inner box pos) with outer = [][]c, inner = []c

    @property
    def root(self) -> int:
        return len(self.sub) - 1

    @property
    def n_atoms(self) -> int:
        return len(self.atom_names)

    @property
    def n_boxes(self) -> int:
        return int(self.box_pos.size)

    @property
    def n_free(self) -> int:
        return self.n_atoms + self.n_boxes

    def nested_slots(self) -> np.ndarray:
        """Nested pairs as box numbers (relation indices) instead of Sub positions."""
        if not self.nested.size:
            return np.zeros((0, 2), dtype=np.int64)
        return self.slot[self.nested]


def compile_program(a: Formula) -> Program:
    sub = tuple(subformulas(a))
    index = {b: i for i, b in enumerate(sub)}
    n = len(sub)
    op = np.empty(n, dtype=np.int64)
    left = np.full(n, -1, dtype=np.int64)
    right = np.full(n, -1, dtype=np.int64)
    slot = np.full(n, -1, dtype=np.int64)
    names: list[str] = []
    box_pos: list[int] = []
    for i, b in enumerate(sub):
        op[i] = _OPCODE[type(b)]
        if isinstance(b, Atom):
            slot[i] = len(names)
            names.append(b.name)
        elif isinstance(b, (Not, Box)):
            left[i] = index[b.arg]
            if isinstance(b, Box):
                slot[i] = len(box_pos)
                box_pos.append(i)
        elif not isinstance(b, Bot):
            left[i] = index[b.left]
            right[i] = index[b.right]
    free = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        if op[i] == ATOM:
            free[i] = slot[i]
        elif op[i] == BOX:
            free[i] = len(names) + slot[i]
    nested = [(i, left[i]) for i in box_pos if op[left[i]] == BOX]
    return Program(
        formula=a, sub=sub, index=index, op=op, left=left, right=right, slot=slot, free=free,
        atom_names=tuple(names),
        box_pos=np.array(box_pos, dtype=np.int64),
        child_pos=np.array([left[i] for i in box_pos], dtype=np.int64),
        nested=np.array(nested, dtype=np.int64).reshape(-1, 2),
    )
