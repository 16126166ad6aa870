"""Compare the numba kernels with the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Compilation happens before timing, so the numbers are steady-state.
"""

import argparse
import time

import numpy as np

from nprov import _jit, kernels
from nprov.corpus import FormulaGenerator
from nprov.decide import decide
from nprov.logics import ALL_LOGICS
from nprov.program import compile_program
from nprov.syntax import Atom, Imp, boxes, parse


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    p, q = Atom("p"), Atom("q")
    big = boxes(p, 13)
    mixed = Imp(boxes(p, 6), boxes(q, 5))
    prog_big, prog_mixed = compile_program(big), compile_program(mixed)
    scan = compile_program(parse("[]p -> [][]p"))
    corpus = FormulaGenerator(5, max_sub=14).formulas(200)

    def table(prog):
        return lambda jit: kernels.type_table(prog.op, prog.left, prog.right, prog.free,
                                              prog.n_free, jit=jit)

    def elim(prog):
        t = kernels.type_table(prog.op, prog.left, prog.right, prog.free, prog.n_free, jit=False)
        alive = np.ones(t.shape[0], dtype=bool)
        return lambda jit: kernels.eliminate(t, alive, prog.box_pos, prog.child_pos, True, jit=jit)

    def decide_all(jit):
        for a in corpus:
            for logic in ALL_LOGICS:
                decide(logic, a, jit=jit)

    return [
        ("type_table, 2^14 rows", table(prog_big)),
        ("eliminate, 2^14 rows", elim(prog_big)),
        ("eliminate, 2^13 rows, two chains", elim(prog_mixed)),
        ("scan_models, 3 worlds, 2^21 codes",
         lambda jit: kernels.scan_models(scan, 3, True, True, jit=jit)),
        ("decide, 200 random formulas x 4 logics", decide_all),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _jit.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'case':42s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fn in cases():
        fn(True)  # compile
        fast = best_of(lambda: fn(True), args.repeat)
        slow = best_of(lambda: fn(False), args.repeat)
        print(f"{name:42s} {fast * 1e3:9.2f}ms {slow * 1e3:9.2f}ms {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
