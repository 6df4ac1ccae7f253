"""bnpair: a self-contained optimal Ate pairing over Barreto-Naehrig curves
at the 128-bit security level, with an instrumented hardware cost model.

Quick start::

    from bnpair import paper_params, g1_generator, g2_generator, optimal_ate

    par = paper_params()
    e = optimal_ate(g1_generator(par), g2_generator(par), par)
"""

from .costmodel import (
    CycleModel,
    OpCounts,
    compose_symbolic,
    counting,
    efficiency,
    predict_cycles,
    simulate_dual_schedule,
    with_counting,
)
from .curve import (
    G1Point,
    G2Point,
    SparseLine,
    addition_step,
    doubling_step,
    g1_generator,
    g1_scalar_mul,
    g2_frobenius_psi,
    g2_generator,
    g2_scalar_mul,
)
from .fp import PrimeModulus
from .pairing import (
    PairingError,
    PairingResult,
    final_exponentiation,
    miller_loop,
    optimal_ate,
)
from .params import (
    BnParams,
    PAPER_B,
    PAPER_T,
    ParamError,
    derive_params,
    naf_recode,
    paper_params,
    tiny_params,
)

__version__ = "0.1.0"

__all__ = [
    "BnParams",
    "CycleModel",
    "G1Point",
    "G2Point",
    "OpCounts",
    "PAPER_B",
    "PAPER_T",
    "PairingError",
    "PairingResult",
    "ParamError",
    "PrimeModulus",
    "SparseLine",
    "addition_step",
    "compose_symbolic",
    "counting",
    "derive_params",
    "doubling_step",
    "efficiency",
    "final_exponentiation",
    "g1_generator",
    "g1_scalar_mul",
    "g2_frobenius_psi",
    "g2_generator",
    "g2_scalar_mul",
    "miller_loop",
    "naf_recode",
    "optimal_ate",
    "paper_params",
    "predict_cycles",
    "simulate_dual_schedule",
    "tiny_params",
    "with_counting",
]
