import math
import os

import pandas as pd

from limpack.bounds import random_sampling_bound
from limpack.generators import gen_random_regular
from limpack.random_packing import LLL, SAMPLE_REPAIR, monte_carlo_sizes, spawn_seeds, summarize_sizes

# ✅ Paths
results_dir = "results"
summary_path = os.path.join(results_dir, "monte_carlo.csv")
os.makedirs(results_dir, exist_ok=True)

# ✅ Experiment grid: random r-regular graphs, both randomised methods
runs = int(os.getenv("LIMPACK_MC_RUNS", "200"))
n_jobs = int(os.getenv("LIMPACK_N_JOBS", "1"))
grid = [(60, 3, 2), (120, 3, 2), (200, 10, 5), (200, 10, 3)]

rows = []
for n, r, k in grid:
    g = gen_random_regular(n, r, seed=n * r + k)
    bound = random_sampling_bound(n, r, k)
    seeds = spawn_seeds(n * 1000 + k, runs)
    for method in (SAMPLE_REPAIR, LLL):
        sizes = monte_carlo_sizes(g, k, seeds, method=method, n_jobs=n_jobs)
        summary = summarize_sizes(sizes)
        rows.append({
            "n": n, "r": r, "k": k, "method": method,
            "mean": summary["mean"], "stderr": summary["stderr"],
            "bound": bound, "success_rate": sizes["success"].mean(),
            "all_valid": bool(sizes["valid"].all()),
        })
        print(f"📊 n={n} r={r} k={k} {method}: mean {summary['mean']:.2f} ± {summary['stderr']:.2f} "
              f"(bound {bound:.2f})")

table = pd.DataFrame(rows)
table["above_bound"] = table["mean"] >= table["bound"] - 2 * table["stderr"]
table["ratio"] = table["mean"] / table["bound"].where(table["bound"] > 0, math.nan)
table.to_csv(summary_path, index=False)
print(f"✅ Summary saved to: {summary_path}")
