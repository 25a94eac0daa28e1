"""Synthetic benchmark: teacher vs 3-channel students on the shipped spec and seed.

    python3 benchmarks/synthetic_benchmark.py [--config configs/benchmark.json] [--workers N]

Runs (or reuses) the content-addressed ``synth``/``preprocess``/``sweep`` run
directories under $TSAK_RUNS, then writes ``benchmark.json`` next to the
sweep outputs with the macro-F1 margins and wall time.
"""
import argparse
import json
import os
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

from tsak import cli  # noqa: E402

SCLOGIT = "SCLogit_a0.99_t4"
# thresholds the benchmark is judged against (points of macro-F1)
TEACHER_MARGIN = 0.08
KD_MARGIN = 0.03


def evaluate(summary):
    runs = summary["runs"]
    f1 = {k: v["f1"] for k, v in runs.items()}
    checks = {
        "a_teacher_minus_baseline": f1["Teacher"] - f1["Baseline"],
        "b_sclogit_minus_baseline": f1[SCLOGIT] - f1["Baseline"],
        "c_combirep_minus_attnrep": f1["CombiRep_a0.99"] - f1["AttnRep_a0.99"],
    }
    passed = {
        "a": checks["a_teacher_minus_baseline"] >= TEACHER_MARGIN,
        "b": checks["b_sclogit_minus_baseline"] >= KD_MARGIN,
        "c": checks["c_combirep_minus_attnrep"] >= 0.0,
    }
    return {"f1": f1, "margins": checks, "passed": passed}


def sweep_dir(config):
    return cli.run_dir("sweep", cli.load_config(config))


def run(config, workers=None):
    """Run the missing stages; returns the sweep directory."""
    extra = ["--workers", str(workers)] if workers else []
    t0 = time.time()
    cfg = cli.load_config(config)
    for stage in ("synth", "preprocess"):
        if not (cli.run_dir(stage, cfg) / "manifest.json").exists():
            if cli.main([stage, "--config", config] + (extra if stage == "preprocess" else [])) != 0:
                raise RuntimeError(f"{stage} failed")
    out = cli.run_dir("sweep", cfg)
    if not (out / "summary.json").exists():
        if cli.main(["sweep", "--config", config] + extra) != 0:
            raise RuntimeError("sweep failed")
        elapsed = time.time() - t0
        (out / "wall_time.json").write_text(json.dumps(
            {"seconds": elapsed, "workers": workers or cfg["workers"], "cpus": os.cpu_count()}))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--config", default=str(ROOT / "configs" / "benchmark.json"))
    ap.add_argument("--workers", type=int)
    args = ap.parse_args(argv)
    out = run(args.config, args.workers)
    summary = json.loads((out / "summary.json").read_text())
    result = evaluate(summary)
    wall = out / "wall_time.json"
    if wall.exists():
        result["wall_time"] = json.loads(wall.read_text())
    (out / "benchmark.json").write_text(json.dumps(result, indent=2, sort_keys=True))
    for k, v in result["f1"].items():
        print(f"{k:<20} macro-F1 {v:.4f}")
    for k, v in result["margins"].items():
        print(f"{k:<28} {v:+.4f}")
    print("criteria:", ", ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in result["passed"].items()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
