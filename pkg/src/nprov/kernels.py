"""Hot loops, each in a numba and a pure-numpy flavour.

* ``type_table``: truth value of every subformula under every world-type label.
* ``eliminate``: greatest fixpoint of the witness conditions over a type table.
* ``scan_models``: literal enumeration of small N-models encoded as integers.

The public functions dispatch on ``jit`` (default: :data:`nprov._jit.JIT_ENABLED`).
Both flavours return identical results; the test suite checks this.
"""

from __future__ import annotations

import numpy as np

from . import _jit
from ._jit import njit
from .program import AND, ATOM, BOT, BOX, IMP, NOT, OR


def _use_jit(jit):
    return _jit.JIT_ENABLED if jit is None else (jit and _jit.NUMBA_AVAILABLE)


# type table

@njit(cache=True)
def _type_table_jit(op, left, right, free, k):
    rows = 1 << k
    n = op.size
    out = np.empty((rows, n), dtype=np.bool_)
    for r in range(rows):
        for i in range(n):
            o = op[i]
            if o == BOT:
                out[r, i] = False
            elif o == ATOM or o == BOX:
                out[r, i] = ((r >> free[i]) & 1) == 1
            elif o == NOT:
                out[r, i] = not out[r, left[i]]
            elif o == AND:
                out[r, i] = out[r, left[i]] and out[r, right[i]]
            elif o == OR:
                out[r, i] = out[r, left[i]] or out[r, right[i]]
            else:
                out[r, i] = (not out[r, left[i]]) or out[r, right[i]]
    return out


def _type_table_numpy(op, left, right, free, k):
    rows = np.arange(1 << k, dtype=np.int64)
    out = np.empty((rows.size, op.size), dtype=np.bool_)
    for i, o in enumerate(op):
        if o == BOT:
            out[:, i] = False
        elif o == ATOM or o == BOX:
            out[:, i] = ((rows >> free[i]) & 1) == 1
        elif o == NOT:
            out[:, i] = ~out[:, left[i]]
        elif o == AND:
            out[:, i] = out[:, left[i]] & out[:, right[i]]
        elif o == OR:
            out[:, i] = out[:, left[i]] | out[:, right[i]]
        elif o == IMP:
            out[:, i] = ~out[:, left[i]] | out[:, right[i]]
    return out


def type_table(op, left, right, free, k, jit=None) -> np.ndarray:
    """Boolean matrix ``(2**k, len(op))``: row ``r`` reads label bit ``free[i]`` for atoms and boxes."""
    fn = _type_table_jit if _use_jit(jit) else _type_table_numpy
    return fn(op, left, right, free, k)


# fixpoint elimination

@njit(cache=True)
def _eliminate_jit(table, alive, box_pos, child_pos, serial):
    alive = alive.copy()
    rows = table.shape[0]
    changed = True
    while changed:
        changed = False
        for j in range(box_pos.size):
            b = box_pos[j]
            c = child_pos[j]
            has_false = False
            has_true = False
            for r in range(rows):
                if alive[r]:
                    if table[r, c]:
                        has_true = True
                    else:
                        has_false = True
                    if has_true and has_false:
                        break
            if has_false and (has_true or not serial):
                continue
            for r in range(rows):
                if alive[r]:
                    if (not table[r, b] and not has_false) or (serial and table[r, b] and not has_true):
                        alive[r] = False
                        changed = True
    return alive


def _eliminate_numpy(table, alive, box_pos, child_pos, serial):
    alive = alive.copy()
    changed = True
    while changed:
        changed = False
        for b, c in zip(box_pos, child_pos):
            col = table[:, c]
            has_false = bool(np.any(alive & ~col))
            has_true = bool(np.any(alive & col))
            kill = np.zeros_like(alive)
            if not has_false:
                kill |= ~table[:, b]
            if serial and not has_true:
                kill |= table[:, b]
            kill &= alive
            if kill.any():
                alive &= ~kill
                changed = True
    return alive


def eliminate(table, alive, box_pos, child_pos, serial, jit=None) -> np.ndarray:
    """Drop rows until every surviving false box has a surviving false argument
    (and, when ``serial``, every true box a true argument)."""
    fn = _eliminate_jit if _use_jit(jit) else _eliminate_numpy
    return fn(table, alive, box_pos, child_pos, bool(serial))


# literal model enumeration
#
# A model on n worlds is an integer code: bits [0, n*a) hold the valuation
# (atom t at world w is bit t*n + w), then each box j owns n*n bits holding
# the successor mask of every world for the relation that box reads.

@njit(cache=True)
def _scan_models_jit(op, left, right, slot, n_atoms, n_boxes, n, root,
                     serial, nested, start, stop):
    full = (1 << n) - 1
    nsub = op.size
    ext = np.zeros(nsub, dtype=np.int64)
    succ = np.zeros((max(n_boxes, 1), n), dtype=np.int64)
    off = n * n_atoms
    for code in range(start, stop):
        for j in range(n_boxes):
            for x in range(n):
                succ[j, x] = (code >> (off + (j * n + x) * n)) & full
        ok = True
        if serial:
            for j in range(n_boxes):
                for x in range(n):
                    if succ[j, x] == 0:
                        ok = False
        if ok:
            for t in range(nested.shape[0]):
                outer = nested[t, 0]
                inner = nested[t, 1]
                for x in range(n):
                    for y in range(n):
                        if ((succ[outer, x] >> y) & 1) == 1 and (succ[inner, y] & ~succ[inner, x]) != 0:
                            ok = False
        if not ok:
            continue
        for i in range(nsub):
            o = op[i]
            if o == BOT:
                ext[i] = 0
            elif o == ATOM:
                ext[i] = (code >> (slot[i] * n)) & full
            elif o == NOT:
                ext[i] = full & ~ext[left[i]]
            elif o == AND:
                ext[i] = ext[left[i]] & ext[right[i]]
            elif o == OR:
                ext[i] = ext[left[i]] | ext[right[i]]
            elif o == IMP:
                ext[i] = (full & ~ext[left[i]]) | ext[right[i]]
            else:
                m = 0
                bad = full & ~ext[left[i]]
                for x in range(n):
                    if (succ[slot[i], x] & bad) == 0:
                        m |= 1 << x
                ext[i] = m
        if ext[root] != full:
            return code
    return -1


def _scan_models_numpy(op, left, right, slot, n_atoms, n_boxes, n, root,
                       serial, nested, start, stop, chunk=1 << 16):
    full = np.int64((1 << n) - 1)
    off = n * n_atoms
    for lo in range(start, stop, chunk):
        codes = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        succ = np.empty((max(n_boxes, 1), n, codes.size), dtype=np.int64)
        for j in range(n_boxes):
            for x in range(n):
                succ[j, x] = (codes >> (off + (j * n + x) * n)) & full
        ok = np.ones(codes.size, dtype=bool)
        if serial:
            for j in range(n_boxes):
                ok &= np.all(succ[j] != 0, axis=0)
        for outer, inner in nested:
            for x in range(n):
                for y in range(n):
                    reach = ((succ[outer, x] >> y) & 1) == 1
                    ok &= ~(reach & ((succ[inner, y] & ~succ[inner, x]) != 0))
        ext = np.zeros((op.size, codes.size), dtype=np.int64)
        for i, o in enumerate(op):
            if o == ATOM:
                ext[i] = (codes >> (slot[i] * n)) & full
            elif o == NOT:
                ext[i] = full & ~ext[left[i]]
            elif o == AND:
                ext[i] = ext[left[i]] & ext[right[i]]
            elif o == OR:
                ext[i] = ext[left[i]] | ext[right[i]]
            elif o == IMP:
                ext[i] = (full & ~ext[left[i]]) | ext[right[i]]
            elif o == BOX:
                bad = full & ~ext[left[i]]
                for x in range(n):
                    ext[i] |= np.where((succ[slot[i], x] & bad) == 0, np.int64(1 << x), np.int64(0))
        hit = np.flatnonzero(ok & (ext[root] != full))
        if hit.size:
            return int(codes[hit[0]])
    return -1


def model_bits(n_worlds: int, n_atoms: int, n_boxes: int) -> int:
    return n_worlds * n_atoms + n_boxes * n_worlds * n_worlds


def scan_models(prog, n_worlds, serial, transitive, start=0, stop=None, jit=None) -> int:
    """First code in ``[start, stop)`` encoding a countermodel meeting the conditions, else -1."""
    bits = model_bits(n_worlds, prog.n_atoms, prog.n_boxes)
    if bits > 62:
        raise OverflowError(f"{bits}-bit model codes do not fit in int64")
    if stop is None:
        stop = 1 << bits
    nested = prog.nested_slots() if transitive else np.zeros((0, 2), dtype=np.int64)
    args = (prog.op, prog.left, prog.right, prog.slot, prog.n_atoms, prog.n_boxes,
            n_worlds, prog.root, bool(serial), np.ascontiguousarray(nested), start, stop)
    fn = _scan_models_jit if _use_jit(jit) else _scan_models_numpy
    return int(fn(*args))


def decode_model(prog, n_worlds: int, code: int):
    """(valuation, relations) of an encoded model, with relations keyed by box number."""
    full = (1 << n_worlds) - 1
    valuation = {w: frozenset(name for t, name in enumerate(prog.atom_names)
                              if (code >> (t * n_worlds + w)) & 1)
                 for w in range(n_worlds)}
    off = n_worlds * prog.n_atoms
    relations = {}
    for j in range(prog.n_boxes):
        pairs = []
        for x in range(n_worlds):
            row = (code >> (off + (j * n_worlds + x) * n_worlds)) & full
            pairs.extend((x, y) for y in range(n_worlds) if (row >> y) & 1)
        relations[j] = frozenset(pairs)
    return valuation, relations
