"""Adjudicate typeset closed-form and Bloch coefficients against the pipeline.

Prints every printed coefficient that disagrees with the value implied by the
eigenvalue formulas, with the max error of each against brute-force capacities.
"""

import argparse
import math

import numpy as np

from hawking_battery.analytic import CLOSED_FORMS, Noise, derived_radical_coefficient
from hawking_battery.verify import bloch_errata, closed_form_errata, grid_axes


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--points", type=int, default=51, help="(eta, k) grid size per axis")
    parser.add_argument("--density", type=int, default=11, help="Bloch check cube size per axis")
    args = parser.parse_args()

    print("radical coefficients at p = 0.3, eta_b = pi/6")
    for form in CLOSED_FORMS:
        if form.printed is None:
            continue
        derived = derived_radical_coefficient(form.region, form.noise)
        flag = "" if math.isclose(float(form.printed), derived, abs_tol=1e-15) else "  <-- differs"
        print(f"  {form.label:<22} printed {str(form.printed):>8}  derived {derived:.6f}{flag}")

    findings = closed_form_errata(tuple(Noise), args.points)
    ps, etas, ks = grid_axes(args.density)
    P, E, K = np.meshgrid(ps, etas, ks, indexing="ij")
    findings += bloch_errata(tuple(Noise), P, E, K, math.pi / 6)
    print(f"\n{len(findings)} finding(s)")
    for f in findings:
        print(f.line())


if __name__ == "__main__":
    main()
