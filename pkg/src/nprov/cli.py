"""Command-line front end.

Exit status: 0 valid / accepted / no disagreement, 1 invalid / rejected /
disagreement, 2 usage, I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .corpus import FormulaGenerator, read_formula_file, regression_corpus
from .decide import Verdict, decide
from .logics import ALL_LOGICS, Logic
from .oracle import DEFAULT_BUDGET, brute_force_decide
from .proofs import ProofSyntaxError, check_proof, parse_proof
from .semantics import (BudgetExceeded, check_conditions, extension, model_from_json,
                        model_to_dot, model_to_json)
from .syntax import ParseError, parse, to_text

MODES = ("decide", "check-model", "check-proof", "oracle", "corpus")
EMITS = ("text", "json", "dot")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    mode: str
    logic: Logic | None = None
    formula: str | None = None
    file: str | None = None
    emit: str = "text"
    seed: int = 0
    count: int = 10
    max_worlds: int | None = None
    budget: int = DEFAULT_BUDGET
    max_sub: int = 14


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc


def _formula_arg(cfg: RunConfig):
    if cfg.formula is None:
        raise UsageError("--formula is required for this mode")
    try:
        return parse(cfg.formula)
    except ParseError as exc:
        raise UsageError(f"formula: {exc}") from exc


def _formulas(cfg: RunConfig):
    if cfg.formula is not None:
        return [_formula_arg(cfg)]
    if cfg.file is None:
        raise UsageError("give --formula or --file")
    try:
        return read_formula_file(_read(cfg.file))
    except ValueError as exc:
        raise UsageError(f"{cfg.file}: {exc}") from exc


def _need_logic(cfg: RunConfig) -> Logic:
    if cfg.logic is None:
        raise UsageError(f"--logic is required for mode {cfg.mode}")
    return cfg.logic


def _emit_verdict(v: Verdict, emit: str, out: TextIO, batch: bool) -> None:
    if emit == "json":
        out.write(v.to_json() + "\n")
    elif emit == "dot":
        if v.valid:
            out.write(f"// {to_text(v.formula)}: valid in {v.logic}\n")
        else:
            out.write(f"// {to_text(v.formula)}: refuted at world {v.refuting_world}\n")
            out.write(model_to_dot(v.countermodel))
    elif batch:
        out.write(f"{to_text(v.formula)}\t{v.kind}\n")
    else:
        out.write(v.kind + "\n")
        if not v.valid:
            out.write(f"refuting world: {v.refuting_world}\n")
            out.write("countermodel: " + model_to_json(v.countermodel, sort_keys=True) + "\n")


def _run_decide(cfg: RunConfig, out: TextIO) -> int:
    logic = _need_logic(cfg)
    formulas = _formulas(cfg)
    verdicts = [decide(logic, a) for a in formulas]
    for v in verdicts:
        _emit_verdict(v, cfg.emit, out, batch=cfg.formula is None)
    return 0 if all(v.valid for v in verdicts) else 1


def _run_check_model(cfg: RunConfig, out: TextIO) -> int:
    if cfg.file is None:
        raise UsageError("--file MODEL.json is required for check-model")
    a = _formula_arg(cfg)
    try:
        model = model_from_json(_read(cfg.file))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"{cfg.file}: {exc}") from exc
    ext = extension(model, a)
    report = check_conditions(model.frame, cfg.logic, a) if cfg.logic else None
    valid = len(ext) == len(model.worlds)
    conditions_ok = report is None or report.ok
    if cfg.emit == "json":
        data = {
            "formula": to_text(a),
            "forces": {str(w): w in ext for w in model.worlds},
            "valid": valid,
        }
        if report is not None:
            data["logic"] = str(report.logic)
            data["conditions"] = [
                {"condition": v.condition, "formula": to_text(v.formula), "witness": list(v.witness)}
                for v in report.violations]
        out.write(json.dumps(data) + "\n")
    elif cfg.emit == "dot":
        out.write(model_to_dot(model))
    else:
        for w in model.worlds:
            out.write(f"world {w}: {'forces' if w in ext else 'does not force'} {to_text(a)}\n")
        out.write("valid in model\n" if valid else "not valid in model\n")
        if report is not None:
            if report.ok:
                out.write(f"frame conditions for {report.logic}: ok\n")
            for v in report.violations:
                out.write(f"frame conditions for {report.logic}: {v.describe()}\n")
    return 0 if valid and conditions_ok else 1


def _run_check_proof(cfg: RunConfig, out: TextIO) -> int:
    logic = _need_logic(cfg)
    if cfg.file is None:
        raise UsageError("--file PROOF is required for check-proof")
    try:
        pf = parse_proof(_read(cfg.file))
    except ProofSyntaxError as exc:
        raise UsageError(f"{cfg.file}: {exc}") from exc
    result = check_proof(logic, pf)
    if cfg.emit == "json":
        data = {"logic": str(logic), "accepted": result.accepted}
        if result.accepted:
            data["conclusion"] = to_text(pf.conclusion)
        else:
            data.update(line=result.line, rule=result.rule, reason=result.reason)
        out.write(json.dumps(data) + "\n")
    else:
        out.write(result.describe() + "\n")
        if result.accepted:
            out.write(f"conclusion: {to_text(pf.conclusion)}\n")
    return 0 if result.accepted else 1


def _run_oracle(cfg: RunConfig, out: TextIO) -> int:
    if cfg.formula is None and cfg.file is None:
        formulas = regression_corpus()
    else:
        formulas = _formulas(cfg)
    logics = [cfg.logic] if cfg.logic else list(ALL_LOGICS)
    disagreements = 0
    checked = 0
    for a in formulas:
        for logic in logics:
            fast = decide(logic, a)
            try:
                slow = brute_force_decide(logic, a, cfg.max_worlds, cfg.budget)
            except BudgetExceeded as exc:
                out.write(f"skipped {logic} {to_text(a)}: {exc}\n")
                continue
            checked += 1
            # a bounded Valid is not evidence either way
            if fast.valid != slow.valid and (slow.complete or not slow.valid):
                disagreements += 1
                out.write(f"DISAGREE {logic} {to_text(a)}: decide={fast.kind} "
                          f"brute_force={slow.kind}\n")
    if cfg.emit == "json":
        out.write(json.dumps({"checked": checked, "disagreements": disagreements}) + "\n")
    else:
        out.write(f"checked {checked} (formula, logic) pairs, {disagreements} disagreements\n")
    return 0 if disagreements == 0 else 1


def _run_corpus(cfg: RunConfig, out: TextIO) -> int:
    gen = FormulaGenerator(cfg.seed, max_sub=cfg.max_sub)
    for a in gen.formulas(cfg.count):
        out.write(to_text(a) + "\n")
    return 0


_RUNNERS = {
    "decide": _run_decide,
    "check-model": _run_check_model,
    "check-proof": _run_check_proof,
    "oracle": _run_oracle,
    "corpus": _run_corpus,
}


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _RUNNERS[cfg.mode](cfg, out)
    except (UsageError, BudgetExceeded) as exc:
        err.write(f"error: {exc}\n")
        return 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nprov",
        description="Decide, model-check and proof-check the logics N, NR, NF and NRF.")
    p.add_argument("--logic", choices=[l.value for l in ALL_LOGICS], type=str.upper)
    p.add_argument("--mode", choices=MODES, default="decide")
    p.add_argument("-f", "--formula", help="formula text, e.g. '[]p -> [][]p'")
    p.add_argument("--file", help="formula list, model JSON or proof file, depending on mode")
    p.add_argument("--emit", choices=EMITS, default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-worlds", type=int, default=None,
                   help="oracle world bound (default: the complete small-model bound)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="oracle enumeration budget")
    p.add_argument("--max-sub", type=int, default=14, help="corpus: bound on |Sub(A)|")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        mode=args.mode,
        logic=Logic(args.logic) if args.logic else None,
        formula=args.formula,
        file=args.file,
        emit=args.emit,
        seed=args.seed,
        count=args.count,
        max_worlds=args.max_worlds,
        budget=args.budget,
        max_sub=args.max_sub,
    )
    return run(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
