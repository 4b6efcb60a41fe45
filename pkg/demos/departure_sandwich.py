# The departure from normality ||Delta||_F of a matrix is not computable
# from the spectrum alone, but two commutator-based estimates enclose it:
#
#     sun_delta_lower(M)  <=  ||Delta||_F  <=  henrici_delta_upper(M)
#
# The nilpotent Jordan block makes all three coincide; random dense
# matrices show the gap growing with n.

import numpy as np

from spectra_perturb import (
    departure_from_normality,
    frobenius_norm,
    henrici_delta_upper,
    sun_delta_lower,
)

jordan = np.array([[0.0, 1.0], [0.0, 0.0]])
print("Jordan block [[0,1],[0,0]]:")
print(f"  lower    = {sun_delta_lower(jordan):.12f}")
print(f"  exact    = {departure_from_normality(jordan):.12f}")
print(f"  upper    = {henrici_delta_upper(jordan):.12f}")
print()

rng = np.random.Generator(np.random.Philox(key=np.array([7, 0], dtype=np.uint64)))
print(f"{'n':>4} {'lower':>10} {'departure':>10} {'upper':>10} {'upper/exact':>12}")
for n in (2, 4, 8, 16, 32):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m /= frobenius_norm(m)
    lo = sun_delta_lower(m)
    mid = departure_from_normality(m)
    hi = henrici_delta_upper(m)
    assert lo <= mid + 1e-9 and mid <= hi + 1e-9
    print(f"{n:>4} {lo:>10.6f} {mid:>10.6f} {hi:>10.6f} {hi / mid:>12.2f}")

print()
print("the upper estimate scales like n^(3/4), so it loosens quickly;")
print("the lower one stays within a small factor of the truth")
