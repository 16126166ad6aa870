"""Propositional abstraction of modal formulas and a small tautology checker.

Atoms and boxed formulas are propositionally atomic; each one is replaced by a
fresh propositional variable named after its printed form, so the mapping is
injective. Tautology checking splits on variables DPLL-style, simplifying the
formula after every assignment (no clause conversion).
"""

from __future__ import annotations

from typing import Iterable, Union

from .syntax import BOT, And, Atom, Bot, Box, Formula, Imp, Not, Or, to_text


def prop_var(phi: Formula) -> Atom:
    return Atom(f"p_{{{to_text(phi)}}}")


def abstraction(a: Formula) -> Formula:
    if isinstance(a, Bot):
        return a
    if isinstance(a, (Atom, Box)):
        return prop_var(a)
    if isinstance(a, Not):
        return Not(abstraction(a.arg))
    return type(a)(abstraction(a.left), abstraction(a.right))


Partial = Union[bool, Formula]


def _simplify(f: Formula, var: str, value: bool) -> Partial:
    """Substitute ``value`` for ``var`` and fold constants."""
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return value if f.name == var else f
    if isinstance(f, Box):
        raise TypeError("modal formula passed to the propositional core; abstract it first")
    if isinstance(f, Not):
        x = _simplify(f.arg, var, value)
        return (not x) if isinstance(x, bool) else Not(x)
    left = _simplify(f.left, var, value)
    right = _simplify(f.right, var, value)
    if isinstance(f, And):
        if left is False or right is False:
            return False
        if left is True:
            return right
        if right is True:
            return left
        return And(left, right)
    if isinstance(f, Or):
        if left is True or right is True:
            return True
        if left is False:
            return right
        if right is False:
            return left
        return Or(left, right)
    # implication
    if left is False or right is True:
        return True
    if left is True:
        return right
    if right is False:
        return Not(left)
    return Imp(left, right)


def _first_var(f: Formula) -> str | None:
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            return g.name
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or, Imp)):
            stack.append(g.right)
            stack.append(g.left)
    return None


def _holds_always(f: Partial, want: bool) -> bool:
    """True iff every assignment gives ``f`` the value ``want``."""
    if isinstance(f, bool):
        return f == want
    if isinstance(f, Bot):
        return not want
    var = _first_var(f)
    if var is None:
        return _holds_always(_simplify(f, "", False), want)
    return (_holds_always(_simplify(f, var, True), want)
            and _holds_always(_simplify(f, var, False), want))


def is_tautology(f: Formula) -> bool:
    return _holds_always(f, True)


def is_satisfiable(f: Formula) -> bool:
    return not _holds_always(f, False)


def conjoin(fs: Iterable[Formula]) -> Formula:
    items = list(fs)
    if not items:
        return Imp(BOT, BOT)
    out = items[0]
    for g in items[1:]:
        out = And(out, g)
    return out


def tautological_consequence(xs: Iterable[Formula], phi: Formula) -> bool:
    """Whether the abstraction of ``phi`` follows propositionally from the abstractions of ``xs``."""
    xs = list(xs)
    if not xs:
        return is_tautology(abstraction(phi))
    return is_tautology(Imp(conjoin(abstraction(x) for x in xs), abstraction(phi)))
