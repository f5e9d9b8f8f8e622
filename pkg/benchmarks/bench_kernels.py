"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--images N]

Times the per-cell variation sampler and the conductance map on a 785x200
array (the hidden layer of the 784-200-10 network), then a small end-to-end
sweep run once per backend in a subprocess, since the backend is fixed at
import time.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from fefetsim import device as dv
from fefetsim import kernels, rng

SHAPE = (785, 200)

SWEEP_SNIPPET = """
import time, numpy as np
from fefetsim import experiments as ex, kernels, network as nw
model = nw.MLPModel.initialize(seed=1)
gen = np.random.default_rng(0)
x = gen.uniform(0, 1, ({n}, 784))
y = gen.integers(0, 10, {n})
cfg = ex.SweepConfig(trials=3)
t = time.perf_counter()
ex.temperature_sweep(cfg, model, x, y)
print(kernels.BACKEND, time.perf_counter() - t)
"""


def bench_kernels(repeat):
    params = dv.preset("GS-II")
    k0, k1 = rng.split_key(2024)
    vth = dv.level_thresholds(params, 2, 300.0)
    levels = np.random.default_rng(0).integers(0, 2, SHAPE).astype(np.int8)
    eps = np.random.default_rng(1).normal(0, 0.15, SHAPE)
    zeta = np.random.default_rng(2).normal(0, 1, SHAPE)
    nvt = params.n_ideality * dv.thermal_voltage(300.0)
    rows = []
    for name, mod in sorted(kernels.available_backends().items()):
        t_norm = min(timeit.repeat(lambda: mod.cell_normals(k0, k1, 0, *SHAPE, 0.15, -0.9), number=1, repeat=repeat))
        t_cond = min(
            timeit.repeat(lambda: mod.conductance_map(vth, levels, 0.5, nvt, params.k_gain, eps, zeta, 0.03), number=1, repeat=repeat)
        )
        rows.append((name, t_norm, t_cond))
    return rows


def bench_sweep(images):
    out = {}
    for pure in ("0", "1"):
        env = dict(os.environ, FEFETSIM_PURE_PYTHON=pure)
        proc = subprocess.run([sys.executable, "-c", SWEEP_SNIPPET.format(n=images)], env=env, capture_output=True, text=True, check=True)
        name, seconds = proc.stdout.split()
        out[name] = float(seconds)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--images", type=int, default=2000)
    args = ap.parse_args(argv)

    print(f"kernels on {SHAPE[0]}x{SHAPE[1]} cells, best of {args.repeat}")
    print(f"{'backend':<8} {'cell_normals ms':>16} {'conductance_map ms':>19}")
    for name, a, b in bench_kernels(args.repeat):
        print(f"{name:<8} {1e3 * a:>16.2f} {1e3 * b:>19.2f}")
    print(f"\nsweep: 3 temperatures x 3 trials, {args.images} images")
    for name, seconds in bench_sweep(args.images).items():
        print(f"{name:<8} {seconds:>8.2f} s")


if __name__ == "__main__":
    main()
