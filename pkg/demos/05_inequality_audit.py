"""Audit of the inequality chains behind the sharp two-crossing length bound.

The bound splits on the length of the shortest closed loop inside the
geodesic.  Long loops feed a one-variable function whose minimum is located by
bisection and sits strictly above 2log(5+2 sqrt 6); short loops feed a
concavity argument whose bottom constant 2asinh4 - 2asinh2 clears the same
threshold.  Every displayed inequality gets a margin on a dense grid.
"""

from hypcross.verifier import (
    constants,
    find_bound_minimum,
    length_bound,
    length_bound_deriv,
    run_verify_suite,
)

tab = constants()
print("sharp bounds: one crossing", tab.bound_one_crossing, "| two crossings", tab.bound_two_crossings)
print("their gap", tab.gap, "stays below the case split", tab.case_split)

print("\nderivative signs bracketing the minimum:")
print("  at 3:    ", length_bound_deriv(3.0))
print("  at 25/8: ", length_bound_deriv(25.0 / 8.0))
br = find_bound_minimum()
print(f"bisection root {br.root:.12f} (residual {br.residual:.1e})")
print("minimum value", length_bound(br.root), "> two-crossing bound", tab.bound_two_crossings)

print("\nfull audit:")
rep = run_verify_suite()
width = max(len(c.id) for c in rep.checks)
for c in rep.checks:
    print(f"  {c.id:<{width}}  {'PASS' if c.passed else 'FAIL'}  margin {c.margin:+.3e}")
print("\nsuite passed:", rep.passed)
