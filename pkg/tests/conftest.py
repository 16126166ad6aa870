import itertools

import pytest
from hypothesis import strategies as st

from nprov.syntax import BOT, And, Atom, Box, Imp, Not, Or, subformulas

leaves = st.sampled_from([Atom("p"), Atom("q"), BOT])


def formulas(max_leaves=6, atom_names=("p", "q")):
    base = st.one_of(st.sampled_from([Atom(n) for n in atom_names]), st.just(BOT))
    return st.recursive(
        base,
        lambda kids: st.one_of(
            st.builds(Not, kids),
            st.builds(Box, kids),
            st.builds(And, kids, kids),
            st.builds(Or, kids, kids),
            st.builds(Imp, kids, kids),
        ),
        max_leaves=max_leaves,
    )


def small_formulas(max_sub=7):
    return formulas(4).filter(lambda a: len(subformulas(a)) <= max_sub)


def truth_table_tautology(f, value_of):
    """Reference tautology test by full truth-table enumeration."""
    names = sorted({a.name for a in subformulas(f) if isinstance(a, Atom)})
    for bits in itertools.product((False, True), repeat=len(names)):
        if not value_of(f, dict(zip(names, bits))):
            return False
    return True


def prop_value(f, env):
    if isinstance(f, Atom):
        return env[f.name]
    if f == BOT:
        return False
    if isinstance(f, Not):
        return not prop_value(f.arg, env)
    if isinstance(f, And):
        return prop_value(f.left, env) and prop_value(f.right, env)
    if isinstance(f, Or):
        return prop_value(f.left, env) or prop_value(f.right, env)
    if isinstance(f, Imp):
        return (not prop_value(f.left, env)) or prop_value(f.right, env)
    raise TypeError(f)


@pytest.fixture(scope="session")
def nontransitive_frame():
    """Worlds x=0, y=1, z=2; the [][]a relation is {(x,y)} and the []a relation is {(y,z)}."""
    from nprov.semantics import NFrame
    a = Atom("a")
    return NFrame((0, 1, 2), {Box(Box(a)): {(0, 1)}, Box(a): {(1, 2)}})
