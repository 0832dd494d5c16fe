"""Compiled kernels vs the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-train]

Micro-benchmarks call both implementations directly on parameter-sized
arrays. The end-to-end row trains the smoke config once per backend in a
subprocess, since the backend is chosen at import time.
"""
import argparse
import json
import os
import subprocess
import sys
import timeit
from pathlib import Path

import numpy as np

from uavmec import _fallback

try:
    from uavmec import _kernels
except ImportError:
    sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")

ROOT = Path(__file__).resolve().parents[1]
# critic input layer, trunk layer, a whole default actor
SIZES = {"512x43": 512 * 43, "128x128": 128 * 128, "actor (~62k)": 62_000, "1M": 1_000_000}

TRAIN_SNIPPET = """
import json, time
from uavmec import kernels
from uavmec.config import load_config
from uavmec.schemes import train
cfg = load_config({cfg!r})
t0 = time.perf_counter()
train("dtde", cfg.world, cfg.agent, 0, cfg.settings())
print(json.dumps({{"backend": kernels.BACKEND, "seconds": time.perf_counter() - t0}}))
"""


def micro(repeat: int):
    rng = np.random.default_rng(0)
    rows = []
    for label, n in SIZES.items():
        p, g, m = rng.normal(size=n), rng.normal(size=n), rng.normal(size=n) * 0.1
        v = np.abs(rng.normal(size=n)) * 0.01
        tmp = np.empty(n)
        number = max(1, 2_000_000 // n)
        cases = {
            "adam": (lambda: _kernels.adam_fused(p, g, m, v, 0.9, 0.999, 0.5, 1e-8, 1e-4),
                     lambda: _fallback.adam_fused(p, g, m, v, 0.9, 0.999, 0.5, 1e-8, 1e-4, tmp)),
            "soft_update": (lambda: _kernels.soft_update_fused(p, g, 0.005),
                            lambda: _fallback.soft_update_fused(p, g, 0.005)),
            "all_finite": (lambda: _kernels.all_finite(p), lambda: _fallback.all_finite(p)),
        }
        for name, (fast, slow) in cases.items():
            tc = min(timeit.repeat(fast, number=number, repeat=repeat)) / number
            tp = min(timeit.repeat(slow, number=number, repeat=repeat)) / number
            rows.append((name, label, tc, tp))
    return rows


def end_to_end():
    cfg = str(ROOT / "configs" / "smoke.json")
    out = []
    for pure in ("0", "1"):
        env = dict(os.environ, UAVMEC_PURE_PYTHON=pure)
        res = subprocess.run([sys.executable, "-c", TRAIN_SNIPPET.format(cfg=cfg)], env=env,
                             capture_output=True, text=True, check=True)
        out.append(json.loads(res.stdout.strip().splitlines()[-1]))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-train", action="store_true")
    args = ap.parse_args()
    print(f"{'kernel':<12}{'size':>14}{'cython (us)':>14}{'numpy (us)':>14}{'speedup':>10}")
    for name, label, tc, tp in micro(args.repeat):
        print(f"{name:<12}{label:>14}{tc * 1e6:>14.2f}{tp * 1e6:>14.2f}{tp / tc:>9.2f}x")
    if not args.skip_train:
        runs = end_to_end()
        print()
        print(f"{'smoke training (dtde, 50 episodes)':<40}{'seconds':>10}")
        for r in runs:
            print(f"  backend={r['backend']:<30}{r['seconds']:>10.2f}")


if __name__ == "__main__":
    main()
