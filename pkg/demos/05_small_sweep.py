"""End-to-end mini sweep on the tabular chain with a report.

Trains behavior cloning, a random baseline, and the constrained agent over
a small eps_eval grid, then writes summary tables and SVG plots.  Takes a
couple of minutes on one core.

Run:  python3 demos/05_small_sweep.py [output_dir]
"""

import os
import sys

from offlab.harness import ExperimentConfig, report, run_sweep

root = sys.argv[1] if len(sys.argv) > 1 else "runs/demo_sweep"
training = {"steps": 20_000, "lr": 1e-2, "target_period": 200}

for algorithm, grid in (("random", {}), ("bc", {}),
                        ("gen_deep_spibb", {"eps_eval": [0.0, 0.1, 1.0]})):
    cfg = ExperimentConfig(env="chain", dataset="uni", algorithm=algorithm,
                           grid=grid, seeds=[0, 1, 2], training=dict(training),
                           eval_episodes=50, output_dir=root)
    results = run_sweep(cfg)
    ok = sum(r.status == "ok" for r in results)
    print(f"{algorithm}: {ok}/{len(results)} cells ok")

out = report(os.path.join(root, "results"))
print()
for row in out["summary"]:
    print(f"{row['algorithm']:>16s}  {row['mean_return']:7.3f} "
          f"+- {row['standard_error']:.3f}  (best cell {row['cell_slug']})")
print(f"\ntables and plots under {os.path.dirname(out['summary_csv'])}")
