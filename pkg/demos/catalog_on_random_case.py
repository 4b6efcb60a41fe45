"""Evaluate the full catalog on one random normal-matrix case and show
how the families tighten as they use more structure."""

import sys

from spectra_perturb import EnsembleSpec, evaluate_all, frobenius_norm, random_case

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2024
n = int(sys.argv[2]) if len(sys.argv) > 2 else 8

case = random_case(EnsembleSpec(n=n, kind="normal", trace_mode="generic", seed=seed))
report = evaluate_all(case)

print(f"n = {n}, seed = {seed}, ||E||_F = {frobenius_norm(case.e):.4f}")
print(f"true distance d2 = {report.d2:.6f}\n")

by_family: dict[str, list] = {}
for bv in report.bounds:
    by_family.setdefault(bv.family, []).append(bv)

for family, items in by_family.items():
    print(family)
    for bv in items:
        if bv.value is None:
            print(f"    {bv.id:<14} --")
        else:
            print(f"    {bv.id:<14} {bv.value:10.6f}   (+{bv.value - report.d2:.6f} above d2)"
                  if family != "delta_estimate"
                  else f"    {bv.id:<14} {bv.value:10.6f}")
print()

applicable = [bv for bv in report.bounds
              if bv.applicable and bv.family != "delta_estimate"]
best = min(applicable, key=lambda bv: bv.value)
print(f"sharpest bound: {best.id} = {best.value:.6f} "
      f"(slack {best.value - report.d2:.6f})")
