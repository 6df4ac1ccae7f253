#!/usr/bin/env python3
"""Cost-model report: instrumented operation counts for the full pairing and
predicted wall-clock time under each architecture profile, side by side with
the reference design points.

    python3 demos/cost_report.py
"""

from bnpair import costmodel, curve, pairing, params
from bnpair.costmodel import CycleModel, with_counting


def main():
    par = params.paper_params()
    P = curve.g1_generator(par)
    Q = curve.g2_generator(par)

    print("counting one full pairing (Miller loop + final exponentiation)...")
    _, counts = with_counting(
        lambda: pairing.final_exponentiation(pairing.miller_loop(P, Q, par), par)
    )

    interesting = ("m", "m_beta", "a", "m2", "s2", "a2", "m_xi", "i2")
    d = counts.as_dict()
    print("  " + "  ".join(f"{k}={d.get(k, 0)}" for k in interesting))
    print()

    model = CycleModel()
    header = f"{'profile':<10} {'cycles':>12} {'predicted':>11} {'reference':>11} {'delta':>8}  {'eff.':>5}"
    print(header)
    print("-" * len(header))
    for profile in costmodel.PROFILES:
        cycles = costmodel.predict_cycles(counts, model, profile, p=par.p)
        ms = cycles / costmodel.PROFILE_FREQ_HZ[profile] * 1e3
        ref = costmodel.DESIGN_REFERENCE[profile]
        delta = (ms - ref["time_ms"]) / ref["time_ms"]
        eff = costmodel.efficiency(
            costmodel.DATAPATH_BITS, ref["slices"], ref["dsp"], ref["bram"], ms / 1e3
        )
        print(
            f"{profile:<10} {cycles:>12} {ms:>9.2f}ms {ref['time_ms']:>9.2f}ms "
            f"{delta:>+7.1%}  {eff:>5.2f}"
        )

    print()
    print("symbolic single/dual rows:")
    for fn in sorted(costmodel._SYMBOLIC_SINGLE):
        single = costmodel.compose_symbolic(fn, costmodel.SINGLE_DESIGN).render()
        dual = costmodel.compose_symbolic(fn, costmodel.DUAL_DESIGN).render()
        print(f"  {fn:<15} single: {single}")
        print(f"  {'':<15} dual  : {dual}")


if __name__ == "__main__":
    main()
