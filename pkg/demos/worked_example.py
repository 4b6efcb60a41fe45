"""Tour of the 2x2 worked example.

A = diag(0, 3) is Hermitian; the perturbed matrix [[-1,-1],[1,1]] is
nilpotent, so both of its eigenvalues are 0 and the true spectral
distance is exactly 3 while ||E||_F is only sqrt(7).  Every bound in the
catalog has to sit above 3.
"""

import math

from spectra_perturb import evaluate_all, fixture, frobenius_norm

case = fixture("intro_2x2")
report = evaluate_all(case)

print("A =")
print(case.a.real)
print("A + E =")
print(case.a_tilde.real)
print()
print(f"||E||_F  = {frobenius_norm(case.e):.6f}  (= sqrt(7) = {math.sqrt(7):.6f})")
print(f"d2       = {report.d2:.6f}")
print(f"d_inf    = {report.d_inf:.6f}")
print()
print(f"{'id':<18} {'family':<14} {'value':>10}   note")
for bv in report.bounds:
    if not bv.applicable:
        print(f"{bv.id:<18} {bv.family:<14} {'--':>10}   not applicable here")
        continue
    gap = bv.value - report.d2
    note = ""
    if bv.family == "delta_estimate":
        note = "estimates ||Delta||_F, not d2"
    elif gap < 1e-9:
        note = "tight"
    print(f"{bv.id:<18} {bv.family:<14} {bv.value:>10.6f}   {note}")
print()
print("violations:", list(report.violations) or "none")
