"""Driver for the desk-scale ordering sweep (resumable; safe to rerun)."""
import sys, time
from offlab.harness import ExperimentConfig, run_sweep

ROOT = "/root/pkg/runs/acceptance8"
for dataset in ("uni_exp", "med"):
    for algorithm in ("bc", "pessimism", "gen_deep_spibb"):
        cfg = ExperimentConfig(env="cartpole", dataset=dataset,
                               algorithm=algorithm, seeds=list(range(10)),
                               preset="quick", output_dir=ROOT)
        t0 = time.time()
        results = run_sweep(cfg)
        ok = sum(r.status == "ok" for r in results)
        print(f"{dataset}/{algorithm}: {ok}/{len(results)} ok "
              f"in {time.time()-t0:.0f}s", flush=True)
        for r in results:
            if r.status != "ok":
                print("  FAILED:", r.cell, r.error, flush=True)
print("done")
