"""Decision procedures for the non-normal provability logics N, NR, NF and NRF."""

from .decide import CountermodelError, Verdict, WorldType, decide, extract_model, world_types
from .logics import ALL_LOGICS, Logic
from .oracle import brute_force_decide, small_model_bound
from .proofs import Proof, check_proof, parse_proof
from .propcore import abstraction, is_tautology, tautological_consequence
from .semantics import (NFrame, NModel, check_conditions, forces, is_serial_for,
                        is_transitive_for, valid_in_frame, valid_in_model)
from .syntax import (BOT, TOP, And, Atom, Bot, Box, Formula, Imp, Not, Or, ParseError, chi,
                     closure, complement, parse, subformulas, to_text)

__version__ = "0.1.0"

__all__ = [
    "ALL_LOGICS", "BOT", "TOP", "And", "Atom", "Bot", "Box", "CountermodelError", "Formula",
    "Imp", "Logic", "NFrame", "NModel", "Not", "Or", "ParseError", "Proof", "Verdict",
    "WorldType", "abstraction", "brute_force_decide", "check_conditions", "check_proof", "chi",
    "closure", "complement", "decide", "extract_model", "forces", "is_serial_for",
    "is_tautology", "is_transitive_for", "parse", "parse_proof", "small_model_bound",
    "subformulas", "tautological_consequence", "to_text", "valid_in_frame", "valid_in_model",
    "world_types",
]
