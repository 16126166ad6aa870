"""Brute-force validity checking by searching small finite models.

Two search strategies, both independent of the type-elimination decider:

``exhaustive``
    Enumerate every N-model with up to ``max_worlds`` worlds: every valuation
    of the atoms of A and every relation for every boxed subformula of A
    (the relations of other formulas cannot affect A). Models failing the
    Sub(A)-restricted frame conditions are skipped. Cost is
    ``2**(n*atoms + boxes*n*n)`` models for ``n`` worlds.

``canonical``
    Enumerate sets of distinct world labels (assignments to the atoms and
    boxed subformulas of A), growing each set one demanded witness at a time,
    and model-check the canonical model on the set::

        x ~B~> y   iff   x labels []B false, or y makes B true

    Any countermodel M meeting the frame conditions can be cut down to one of
    these: keep a refuting world plus one world for each demand "some world
    refutes B" (and, for NR/NRF, "some world satisfies B"), relabel, and use
    the canonical relation. So ``1 + demands`` worlds always suffice, which is
    the completeness bound reported by :func:`small_model_bound`.

Every countermodel returned is re-checked with :mod:`nprov.semantics`.
"""

from __future__ import annotations

from .decide import Verdict
from .kernels import decode_model, model_bits, scan_models
from .logics import Logic
from .program import ATOM, BOT, BOX, IMP, NOT, OR, AND, Program, compile_program
from .semantics import (BudgetExceeded, NFrame, NModel, check_conditions, extension,
                        forces)
from .syntax import Formula

DEFAULT_BUDGET = 10 ** 7
EXHAUSTIVE_AUTO_LIMIT = 1 << 16


def small_model_bound(logic: Logic, a: Formula) -> int:
    """World count that makes a bounded search complete for ``logic``."""
    logic = Logic(logic)
    prog = compile_program(a)
    demands = prog.n_boxes * (2 if logic.rosser else 1)
    return min(1 + demands, 1 << prog.n_free)


def exhaustive_cost(prog: Program, max_worlds: int) -> int:
    return sum(1 << model_bits(n, prog.n_atoms, prog.n_boxes) for n in range(1, max_worlds + 1))


def _exhaustive(prog: Program, logic: Logic, max_worlds: int, budget: int, jit):
    cost = exhaustive_cost(prog, max_worlds)
    if cost > budget:
        raise BudgetExceeded(f"exhaustive search needs {cost} models, budget is {budget}")
    for n in range(1, max_worlds + 1):
        code = scan_models(prog, n, logic.rosser, logic.four, jit=jit)
        if code >= 0:
            valuation, rels = decode_model(prog, n, code)
            relations = {prog.sub[int(prog.box_pos[j])].arg: pairs for j, pairs in rels.items()}
            model = NModel(NFrame(tuple(range(n)), relations), valuation)
            refuter = min(set(model.worlds) - extension(model, prog.formula))
            return model, refuter
    return None


def _label_extensions(prog: Program) -> tuple[list[int], int]:
    """Extension of each subformula over label space, as int bitmasks (bit r = label r)."""
    n_labels = 1 << prog.n_free
    full = (1 << n_labels) - 1
    ext: list[int] = []
    for i, o in enumerate(prog.op):
        if o == BOT:
            e = 0
        elif o == ATOM or o == BOX:
            f = int(prog.free[i])
            half = 1 << f
            block = ((1 << half) - 1) << half
            e = 0
            for start in range(0, n_labels, 2 * half):
                e |= block << start
        elif o == NOT:
            e = full & ~ext[prog.left[i]]
        elif o == AND:
            e = ext[prog.left[i]] & ext[prog.right[i]]
        elif o == OR:
            e = ext[prog.left[i]] | ext[prog.right[i]]
        elif o == IMP:
            e = (full & ~ext[prog.left[i]]) | ext[prog.right[i]]
        ext.append(e)
    return ext, full


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _canonical_model(prog: Program, ext: list[int], labels: list[int]) -> NModel:
    def holds(i: int, label: int) -> bool:
        return (ext[i] >> label) & 1 == 1

    worlds = tuple(range(len(labels)))
    relations = {}
    for b, c in zip(prog.box_pos, prog.child_pos):
        pairs = []
        for x, lx in enumerate(labels):
            for y, ly in enumerate(labels):
                if not holds(b, lx) or holds(c, ly):
                    pairs.append((x, y))
        relations[prog.sub[int(b)].arg] = frozenset(pairs)
    valuation = {}
    for x, lx in enumerate(labels):
        valuation[x] = frozenset(name for t, name in enumerate(prog.atom_names)
                                 if (lx >> t) & 1)
    return NModel(NFrame(worlds, relations), valuation)


def _canonical(prog: Program, logic: Logic, max_worlds: int, budget: int):
    ext, full = _label_extensions(prog)
    demands = []
    for b, c in zip(prog.box_pos, prog.child_pos):
        demands.append((full & ~ext[b], full & ~ext[c]))  # refuted box needs a refuter of its argument
        if logic.rosser:
            demands.append((ext[b], ext[c]))  # true box needs a satisfier (seriality)
    seen: set[int] = set()
    order: dict[int, list[int]] = {}
    nodes = 0

    def search(s: int, size: int):
        nonlocal nodes
        if s in seen:
            return None
        seen.add(s)
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"canonical search visited more than {budget} label sets")
        for trigger, witness in demands:
            if s & trigger and not s & witness:
                if size == max_worlds:
                    return None
                for u in _bits(witness):
                    order[s | (1 << u)] = order[s] + [u]
                    hit = search(s | (1 << u), size + 1)
                    if hit is not None:
                        return hit
                return None
        model = _canonical_model(prog, ext, order[s])
        if not forces(model, 0, prog.formula) and check_conditions(model.frame, logic, prog.formula).ok:
            return model
        return None

    for v in _bits(full & ~ext[prog.root]):
        order[1 << v] = [v]
        model = search(1 << v, 1)
        if model is not None:
            return model, 0
    return None


def brute_force_decide(logic: Logic, a: Formula, max_worlds: int | None = None,
                       budget: int = DEFAULT_BUDGET, method: str = "auto", jit=None) -> Verdict:
    """Search for a countermodel with at most ``max_worlds`` worlds.

    ``max_worlds`` defaults to :func:`small_model_bound`; a Valid verdict with a
    smaller bound is flagged ``complete=False``. ``method`` is ``"exhaustive"``,
    ``"canonical"`` or ``"auto"`` (exhaustive when it costs at most
    :data:`EXHAUSTIVE_AUTO_LIMIT` models). Raises :class:`BudgetExceeded` when
    the chosen search would exceed ``budget`` models or label sets.
    """
    logic = Logic(logic)
    prog = compile_program(a)
    bound = small_model_bound(logic, a)
    if max_worlds is None:
        max_worlds = bound
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    if method == "auto":
        method = "exhaustive" if exhaustive_cost(prog, max_worlds) <= EXHAUSTIVE_AUTO_LIMIT else "canonical"
    if method == "exhaustive":
        found = _exhaustive(prog, logic, max_worlds, budget, jit)
    elif method == "canonical":
        found = _canonical(prog, logic, max_worlds, budget)
    else:
        raise ValueError(f"unknown method {method!r}")
    if found is None:
        return Verdict(logic, a, True, complete=max_worlds >= bound, method=method)
    model, refuter = found
    verdict = Verdict(logic, a, False, model, refuter, method=method)
    verdict.verify()
    return verdict
