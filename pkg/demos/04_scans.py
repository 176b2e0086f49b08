# %% [markdown]
# # Property and scan reports
#
# Random scans are reproducible from the seed and independent of the shard count.

# %%
import json

from c4c4det.verify import RANDOM_BOX, ScanConfig, completeness_scan, run_property_suite, soundness_scan

cfg = ScanConfig(RANDOM_BOX, box_radius=4, samples=5000, seed=42)
props = run_property_suite(cfg)
print("property violations:", len(props.violations))
print(json.dumps(dict(props.guard_hits), indent=1))

sound = soundness_scan(cfg)
print("soundness:", sound.checked, "checked,", len(sound.violations), "non-members")

# %%
comp = completeness_scan(odd_bound=801, even_cofactor_bound=21, a_bound=20_000)
print("witnessed:", comp.checked, dict(comp.guard_hits))
