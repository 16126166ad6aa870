"""Formula corpora: exhaustive enumeration by size and seeded random generation."""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from typing import Iterator, Sequence

from .syntax import (BOT, And, Atom, Box, Formula, Imp, Not, Or, atoms, modal_depth,
                     parse, subformulas)

UNARY = (Not, Box)
BINARY = (And, Or, Imp)


@lru_cache(maxsize=None)
def _of_size(n: int, leaves: tuple[Formula, ...]) -> tuple[Formula, ...]:
    if n == 1:
        return leaves
    out: list[Formula] = []
    for op in UNARY:
        out.extend(op(a) for a in _of_size(n - 1, leaves))
    for k in range(1, n - 1):
        for op in BINARY:
            for a in _of_size(k, leaves):
                out.extend(op(a, b) for b in _of_size(n - 1 - k, leaves))
    return tuple(out)


def enumerate_formulas(max_nodes: int, leaves: Sequence[Formula] = (Atom("p"), Atom("q"), BOT)
                       ) -> Iterator[Formula]:
    """Every formula with at most ``max_nodes`` AST nodes, smallest first."""
    leaves = tuple(leaves)
    for n in range(1, max_nodes + 1):
        yield from _of_size(n, leaves)


class FormulaGenerator:
    """Seeded random formulas with bounded size, atom count and box depth."""

    def __init__(self, seed: int, atom_pool: Sequence[str] = ("p", "q", "r"),
                 max_sub: int = 14, max_atoms: int | None = None, max_box_depth: int = 3,
                 max_height: int = 5):
        self.rng = random.Random(seed)
        self.atom_pool = tuple(atom_pool)
        self.max_sub = max_sub
        self.max_atoms = max_atoms
        self.max_box_depth = max_box_depth
        self.max_height = max_height

    def _grow(self, height: int, box_budget: int, root: bool = False) -> Formula:
        shapes = [] if root else ["atom", "bot"]
        if height > 0:
            shapes += ["not", "and", "or", "imp"]
            if box_budget > 0:
                shapes.append("box")
        shape = self.rng.choice(shapes)
        if shape == "atom":
            return Atom(self.rng.choice(self.atom_pool))
        if shape == "bot":
            return BOT
        if shape == "not":
            return Not(self._grow(height - 1, box_budget))
        if shape == "box":
            return Box(self._grow(height - 1, box_budget - 1))
        op = {"and": And, "or": Or, "imp": Imp}[shape]
        return op(self._grow(height - 1, box_budget), self._grow(height - 1, box_budget))

    def accept(self, a: Formula) -> bool:
        if len(subformulas(a)) > self.max_sub or modal_depth(a) > self.max_box_depth:
            return False
        return self.max_atoms is None or len(atoms(a)) <= self.max_atoms

    def formula(self) -> Formula:
        while True:
            a = self._grow(self.rng.randint(1, self.max_height), self.max_box_depth, root=True)
            if self.accept(a):
                return a

    def formulas(self, count: int) -> list[Formula]:
        return [self.formula() for _ in range(count)]


def read_formula_file(text: str) -> list[Formula]:
    """One formula per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            out.append(parse(body))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out


def regression_corpus() -> list[Formula]:
    text = resources.files("nprov").joinpath("data/regression.txt").read_text()
    return read_formula_file(text)
