import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import formulas
from nprov.logics import Logic
from nprov.semantics import (NFrame, NModel, check_conditions, extension, forces,
                             is_serial_for, is_transitive_for, model_from_json, model_to_dot,
                             model_to_json, valid_in_frame, valid_in_model)
from nprov.syntax import BOT, TOP, Atom, Box, Not, Or, boxed, parse, subformulas

p, a = Atom("p"), Atom("a")


def one_world(atoms=()):
    return NModel(NFrame((0,)), {0: frozenset(atoms)})


def test_box_bot_vacuous():
    assert forces(one_world(), 0, Box(BOT))


def test_failing_successor():
    m = NModel(NFrame((0, 1), {p: {(0, 1)}}), {})
    assert not forces(m, 0, Box(p))
    assert forces(m, 1, Box(p))


def test_unknown_world():
    with pytest.raises(KeyError):
        forces(one_world(), 5, p)


def test_frame_invariants():
    with pytest.raises(ValueError):
        NFrame(())
    with pytest.raises(ValueError):
        NFrame((0,), {p: {(0, 1)}})
    with pytest.raises(ValueError):
        NModel(NFrame((0,)), {3: {"p"}})


def test_nontransitive_frame(nontransitive_frame):
    f = parse("[][]a -> [][][]a")
    m = NModel(nontransitive_frame, {})
    assert forces(m, 0, f)
    assert valid_in_model(m, f)
    assert valid_in_frame(nontransitive_frame, f)
    assert not is_transitive_for(nontransitive_frame, Box(a))
    assert not is_serial_for(nontransitive_frame, Box(a))


def test_valid_in_model_examples():
    assert valid_in_model(one_world(), Or(p, Not(p)))
    assert not valid_in_model(one_world(), p)


def test_valid_in_frame_examples():
    # two valuations of p on one world with no relations; p false refutes []p -> p
    f = parse("[]p -> p")
    frame = NFrame((0,))
    by_hand = [valid_in_model(NModel(frame, {0: s}), f) for s in (frozenset(), frozenset("p"))]
    assert by_hand == [False, True]
    assert valid_in_frame(frame, f) is False
    assert valid_in_frame(NFrame((0, 1), {p: {(0, 1)}}), TOP)


def test_serial_and_transitive_examples():
    assert is_serial_for(NFrame((0,), {p: {(0, 0)}}), p)
    assert not is_serial_for(NFrame((0,)), p)
    assert is_transitive_for(NFrame((0, 1, 2)), p)
    f = NFrame((1, 2, 3), {Box(p): {(1, 2)}, p: {(2, 3), (1, 3)}})
    assert is_transitive_for(f, p)


def test_check_conditions_examples():
    assert check_conditions(NFrame((0,)), Logic.N, parse("[]p")).ok
    r = check_conditions(NFrame((0,)), Logic.NR, Box(p))
    assert not r.ok
    assert r.violations[0].condition == "serial" and r.violations[0].formula == p
    x, y, z = 0, 1, 2
    frame = NFrame((x, y, z), {Box(p): {(x, y)}, p: {(y, z)}})
    r = check_conditions(frame, Logic.NF, parse("[][]p"))
    assert [(v.condition, v.formula, v.witness) for v in r.violations] == [("transitive", p, (x, y, z))]
    # NRF reports both kinds
    r = check_conditions(frame, Logic.NRF, parse("[][]p"))
    assert {v.condition for v in r.violations} == {"serial", "transitive"}


@st.composite
def models(draw, max_worlds=3):
    n = draw(st.integers(1, max_worlds))
    worlds = tuple(range(n))
    pairs = st.frozensets(st.tuples(st.sampled_from(worlds), st.sampled_from(worlds)))
    keys = draw(st.lists(formulas(3), max_size=4, unique=True))
    relations = {k: draw(pairs) for k in keys}
    valuation = {w: draw(st.frozensets(st.sampled_from(["p", "q", "r"]))) for w in worlds}
    return NModel(NFrame(worlds, relations), valuation)


@settings(max_examples=150)
@given(formulas(6), models(), st.data())
def test_irrelevant_relations_and_atoms(f, m, data):
    """Relations of formulas C with []C outside Sub(f), and atoms outside f, do not matter."""
    sub = set(subformulas(f))
    relevant = {b.arg for b in boxed(f)}
    relations = {k: v for k, v in m.frame.relations.items() if k in relevant}
    junk_key = data.draw(formulas(4))
    if junk_key not in relevant:
        relations[junk_key] = frozenset((w, w) for w in m.worlds)
    valuation = {w: frozenset(n for n in m.true_atoms(w) if Atom(n) in sub) | {"zz"}
                 for w in m.worlds}
    mutated = NModel(NFrame(m.worlds, relations), valuation)
    assert extension(m, f) == extension(mutated, f)


@given(formulas(5), models(), st.data())
def test_shrinking_relation_keeps_box_true(f, m, data):
    b = Box(f)
    before = extension(m, b)
    shrunk = {k: frozenset(pr for pr in v if data.draw(st.booleans())) if k == f else v
              for k, v in m.frame.relations.items()}
    m2 = NModel(NFrame(m.worlds, shrunk), m.valuation)
    if extension(m2, f) == extension(m, f):
        assert before <= extension(m2, b)


@settings(max_examples=50)
@given(formulas(4), models(max_worlds=2))
def test_frame_validity_implies_model_validity(f, m):
    if valid_in_frame(m.frame, f):
        assert valid_in_model(m, f)


@given(models())
def test_json_round_trip(m):
    m2 = model_from_json(model_to_json(m))
    assert m2.frame.worlds == m.frame.worlds
    assert {k: v for k, v in m2.frame.relations.items()} == dict(m.frame.relations)
    assert all(m2.true_atoms(w) == m.true_atoms(w) for w in m.worlds)


def test_json_format():
    m = NModel(NFrame((0, 1), {p: {(0, 1)}}), {0: {"p"}})
    assert json.loads(model_to_json(m)) == {
        "worlds": [0, 1], "relations": {"p": [[0, 1]]}, "valuation": {"0": ["p"]}}
    dot = model_to_dot(m)
    assert 'w0 -> w1 [label="p"]' in dot and dot.startswith("digraph")
