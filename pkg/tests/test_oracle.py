import pytest
from hypothesis import given, settings

from conftest import formulas
from nprov.decide import decide
from nprov.logics import ALL_LOGICS, Logic
from nprov.oracle import brute_force_decide, small_model_bound
from nprov.semantics import BudgetExceeded, check_conditions, forces
from nprov.syntax import TOP, Box, parse, subformulas

N, NR, NF, NRF = ALL_LOGICS


def test_consistency_examples():
    a = parse("~[]bot")
    v = brute_force_decide(N, a, max_worlds=1)
    assert not v.valid and v.countermodel.worlds == (0,)
    assert brute_force_decide(NR, a, max_worlds=2).valid


def test_bounded_flag():
    a = Box(TOP)
    assert small_model_bound(N, a) > 1
    v = brute_force_decide(N, a, max_worlds=1)
    assert v.valid and not v.complete
    assert v.to_dict()["complete"] is False
    assert brute_force_decide(N, a).complete


def test_bound_formula():
    a = parse("[]p -> [][]p")  # two boxes, three free labels
    assert small_model_bound(N, a) == 3
    assert small_model_bound(NR, a) == 5
    assert small_model_bound(NR, parse("[]bot")) == 2
    assert small_model_bound(N, parse("p | ~p")) == 1


def test_argument_errors():
    with pytest.raises(ValueError):
        brute_force_decide(N, TOP, max_worlds=0)
    with pytest.raises(ValueError):
        brute_force_decide(N, TOP, method="magic")


def test_budget():
    a = parse("[]p & []q & [][]p & [](p -> q)")
    with pytest.raises(BudgetExceeded):
        brute_force_decide(NR, a, method="exhaustive", budget=1000)
    with pytest.raises(BudgetExceeded):
        brute_force_decide(NRF, parse("[]p -> [][]p & []q & []~q"), method="canonical", budget=1)


@pytest.mark.parametrize("text", ["[]p -> [][]p", "~[]bot", "[]p -> ~[]~p", "[](p & q) -> []p"])
@pytest.mark.parametrize("logic", ALL_LOGICS)
def test_methods_agree_on_examples(logic, text):
    a = parse(text)
    ca = brute_force_decide(logic, a, method="canonical")
    assert ca.valid == decide(logic, a).valid
    try:
        ex = brute_force_decide(logic, a, method="exhaustive", budget=1 << 24)
    except BudgetExceeded:
        return  # too many models at the full bound; the random test covers smaller cases
    assert ex.valid == ca.valid


@settings(max_examples=100, deadline=None)
@given(formulas(4))
def test_methods_agree(a):
    if len(subformulas(a)) > 6:
        return
    for logic in ALL_LOGICS:
        try:
            ex = brute_force_decide(logic, a, method="exhaustive", budget=1 << 22)
        except (BudgetExceeded, OverflowError):
            continue
        ca = brute_force_decide(logic, a, method="canonical")
        assert ex.valid == ca.valid


@settings(max_examples=100, deadline=None)
@given(formulas(5))
def test_countermodels_are_genuine(a):
    for logic in ALL_LOGICS:
        v = brute_force_decide(logic, a, method="canonical")
        if not v.valid:
            assert not forces(v.countermodel, v.refuting_world, a)
            assert check_conditions(v.countermodel.frame, logic, a).ok


def test_logic_accepts_strings():
    assert brute_force_decide("NR", parse("~[]bot")).logic is Logic.NR
