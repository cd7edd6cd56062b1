import os

from limpack.bench import run_bench

# ✅ Paths
results_dir = "results"
table_path = os.path.join(results_dir, "paper_suite.csv")
os.makedirs(results_dir, exist_ok=True)

# ✅ Run every method on every case of the suite
seed = int(os.getenv("LIMPACK_DEFAULT_SEED", "0"))
print(f"📂 Running suite 'paper' with seed {seed}")
table = run_bench("paper", seed=seed, timing=True)

# ✅ Gap between each method and the exact optimum
table["gap"] = table["exact"] - table["size"]
print(table.groupby("method")["gap"].agg(["mean", "max"]).to_string())

if not table["valid"].all():
    raise RuntimeError("❌ A method returned an invalid packing:\n" + table[~table["valid"]].to_string())

table.to_csv(table_path, index=False)
print(f"✅ Table saved to: {table_path}")
