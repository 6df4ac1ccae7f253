#!/usr/bin/env python3
"""Walk through the library end to end.

Derives parameters for the toy curve (p = 103) and the 254-bit production
curve, computes an optimal Ate pairing on each, and checks bilinearity.
Run it from the repository root after installing the package:

    python3 demos/pairing_walkthrough.py
"""

import random
import time

from bnpair import curve, pairing, params, tower


def show_params(par):
    print(f"  params_id  : {par.params_id}")
    print(f"  t          : {hex(par.t)}")
    print(f"  p ({par.p.bit_length()} bits) : {hex(par.p)}")
    print(f"  r ({par.r.bit_length()} bits) : {hex(par.r)}")
    print(f"  tower      : beta = {par.beta}, xi = {par.xi}, {par.twist_type}-type twist")
    nonzero = sum(1 for d in par.s_naf if d)
    print(f"  |s| NAF    : {len(par.s_naf)} digits, {nonzero} nonzero")


def run_curve(name, par, trials):
    print(f"== {name} ==")
    show_params(par)

    rng = random.Random(2026)
    P = curve.g1_generator(par)
    Q = curve.g2_generator(par)

    t0 = time.perf_counter()
    base = pairing.optimal_ate(P, Q, par).value
    dt = time.perf_counter() - t0
    print(f"  e(P, Q) computed in {dt * 1e3:.1f} ms")
    print(f"  e(P, Q)^r == 1 : {tower.fp12_pow(base, par.r, par) == tower.fp12_one(par)}")

    for i in range(trials):
        a = rng.randrange(1, par.r)
        b = rng.randrange(1, par.r)
        lhs = pairing.optimal_ate(
            curve.g1_scalar_mul(P, a, par),
            curve.g2_scalar_mul(Q, b, par),
            par,
        ).value
        rhs = tower.fp12_pow(base, a * b % par.r, par)
        status = "ok" if lhs == rhs else "MISMATCH"
        print(f"  e([a]P, [b]Q) == e(P, Q)^ab  (trial {i + 1}): {status}")
        assert lhs == rhs
    print()


def main():
    run_curve("toy curve (t = 1)", params.tiny_params(), trials=3)
    run_curve("production curve (254-bit)", params.paper_params(), trials=2)
    print("all checks passed")


if __name__ == "__main__":
    main()
