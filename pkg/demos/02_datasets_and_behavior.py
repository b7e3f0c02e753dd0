"""Dataset recipes, the binary container, and behavior estimation.

Run:  python3 demos/02_datasets_and_behavior.py
"""

import os
import tempfile

import numpy as np

from offlab import data
from offlab.behavior import fit_behavior

# The five standard recipes are mixtures of policy references.
for kind in ("med", "med_seed", "uni", "uni_med", "uni_exp"):
    recipe = data.standard_recipe(kind, seed=0)
    refs = ", ".join(f"{r} (w={w:g})" for r, w in recipe.components)
    print(f"{kind:>8s}: {refs}")

# Generate a small uniform catch dataset and inspect it.
ds = data.generate_dataset(data.standard_recipe("uni"), "catch",
                           n_transitions=1000)
share = np.bincount(ds.actions.astype(int), minlength=3) / len(ds)
print(f"\ncatch/uni: {len(ds)} transitions, action shares "
      f"{np.round(share, 2)}, mean reward {ds.rewards.mean():+.3f}")

# Round-trip through the checksummed binary container.
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "catch_uni.ds")
    data.save_dataset(ds, path)
    loaded = data.load_dataset(path)
    print(f"container round-trip identical: {loaded == ds} "
          f"({os.path.getsize(path)} bytes)")

# Fit a neural behavior estimate; on uniform data its cross-entropy should
# approach log(3).
model = fit_behavior(ds, backend="neural", steps=1500)
p = model.probs(ds.observations)
rows = np.arange(len(ds))
nll = -np.mean(np.log(p[rows, ds.actions.astype(int)]))
print(f"behavior fit NLL {nll:.3f} vs log(3) = {np.log(3):.3f}")
