"""Which bound wins how often?

Runs a short seeded campaign and prints, per bound, the number of trials
where it was the smallest applicable distance bound, plus the worst
slack it ever left above the true distance.
"""

import sys

from spectra_perturb import CampaignConfig, run_campaign

kind = sys.argv[1] if len(sys.argv) > 1 else "normal"
trials = int(sys.argv[2]) if len(sys.argv) > 2 else 300

config = CampaignConfig(
    trials=trials, n_min=2, n_max=12, kind=kind, trace_mode="generic", seed=42
)
summary = run_campaign(config)

print(f"kind = {kind}, trials = {trials}, violations = {summary.violation_count}\n")
print(f"{'id':<18} {'wins':>6} {'max slack':>12}")
for bid, count in sorted(summary.wins.items(), key=lambda kv: -kv[1]):
    slack = summary.max_slack[bid]
    if slack is None:
        continue
    print(f"{bid:<18} {count:>6} {slack:>12.6f}")

nz = summary.ordering["nonzero_trace_trials"]
print(f"\nstrict-sharpness counts over {nz} nonzero-trace trials:")
for key, value in summary.ordering.items():
    if key != "nonzero_trace_trials":
        print(f"  {key:<22} {value}/{nz}")
