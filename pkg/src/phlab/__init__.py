"""Ordinals below epsilon_0, budgeted fast-growing hierarchies, the slow
function F_diamond and finite Paris-Harrington search."""
from .descent import Descent, certify_step_down, check_descent
from .hierarchy import (
    Budget,
    Exceeded,
    FunctionBase,
    StepLimit,
    Value,
    f_eps0_eval,
    fgh_eval,
    fund_seq,
    hierarchy_eval,
    meshes,
    step_down,
)
from .ordinals import Ordinal, compare, decode_digits, encode_digits, omega_stack, parse, render
from .ramsey import Coloring, find_witness, min_witness, ph_holds, sigma, solovay_chain_check
from .slow import cantor_pair, cantor_unpair, f_diamond, f_eps0_inverse, slow_hierarchy_eval

__version__ = "0.1.0"

__all__ = [
    "Budget", "Coloring", "Descent", "Exceeded", "FunctionBase", "Ordinal", "StepLimit", "Value",
    "cantor_pair", "cantor_unpair", "certify_step_down", "check_descent", "compare", "decode_digits",
    "encode_digits", "f_diamond", "f_eps0_eval", "f_eps0_inverse", "fgh_eval", "find_witness",
    "fund_seq", "hierarchy_eval", "meshes", "min_witness", "omega_stack", "parse", "ph_holds",
    "render", "sigma", "slow_hierarchy_eval", "solovay_chain_check", "step_down",
]
