"""Ensemble-with-prior uncertainty: high off the data, exact on counts.

Run:  python3 demos/03_uncertainty.py
"""

import numpy as np

from offlab import data, envs
from offlab.behavior import fit_behavior
from offlab.uncertainty import (CountUncertainty, FactoredUncertainty,
                                calibrate_scale, fit_state_uncertainty)

# Fit the ensemble on one cluster of states and probe another.
rng = np.random.default_rng(0)
train = rng.standard_normal((512, 4)) * 0.3
far = train + 5.0
ens = fit_state_uncertainty(train, B=3, M=16, width=32, depth=2,
                            steps=2000, lr=1e-3, seed=0)
u_in = ens.state_uncertainty(train).mean()
u_out = ens.state_uncertainty(far).mean()
print(f"ensemble u(s): on-data {u_in:.4f}, off-data {u_out:.4f} "
      f"(ratio {u_out / u_in:.2f})")

# On tabular data the factored composition u(s)/sqrt(beta) collapses to the
# count rule 1/sqrt(n(s, a)).
chain = envs.chain_mdp()
ds = data.generate_dataset(data.standard_recipe("uni"), "tabular",
                           n_transitions=2000, mdp=chain)
beh = fit_behavior(ds, backend="tabular")
counts = CountUncertainty(beh)
factored = FactoredUncertainty(counts, beh, delta_beta=0.0)
eye = np.eye(chain.n_states)
print("\nstate  n(s,a)        1/sqrt(n)           factored")
for s in range(chain.n_states):
    n_sa = beh.action_counts(eye[s])
    print(f"  s{s}   {n_sa}  {np.round(counts.state_action(eye[s])[0], 4)} "
          f"{np.round(factored.state_action(eye[s])[0], 4)}")

# Hyperparameters are normalized by the batch-mean calibration scale.
print(f"\ncalibration scale (mean u over one fixed batch): "
      f"{calibrate_scale(counts, ds):.4f}")
