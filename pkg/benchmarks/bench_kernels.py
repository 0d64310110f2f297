"""Compare the numba kernels with the pure-Python fallback.

Each backend runs in its own interpreter because ``FULLAB_DISABLE_NUMBA`` is
read at import time. Timings exclude the first (compiling) call.

    python benchmarks/bench_kernels.py            # both backends, default sizes
    python benchmarks/bench_kernels.py --quick    # smaller workloads
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads(quick: bool):
    import numpy as np

    from fullab import sampling, spiral
    from fullab.graph_core import canonical_code
    from fullab.kernels import eigen, spiral as ks

    n_enum = 28 if quick else 32
    graphs = spiral.enumerate_isomers(30 if quick else 34)
    rng = np.random.default_rng(0)
    a = rng.standard_normal((40, 40))
    sym = a + a.T
    m = n_enum // 2 + 2

    def enum():
        ks.enumerate_block(m, 0, 1 << 40)

    def canon():
        for g in graphs:
            canonical_code(g)

    def eig():
        eigen.symmetric_eigenvalues(sym)

    def chain():
        cfg = sampling.SamplerConfig(28, seed=0, method="psw_chain", steps=20_000 if quick else 100_000,
                                     policy="energy", temperature=0.5)
        sampling.psw_chain(cfg)

    return {"enumerate_block": enum, "canonical_code": canon, "eigenvalues_40": eig, "psw_chain": chain}


def worker(quick: bool, repeats: int) -> dict:
    from fullab.kernels._jit import backend

    out = {"backend": backend()}
    for name, fn in _workloads(quick).items():
        fn()  # warm-up / compile
        best = float("inf")
        for _ in range(repeats):
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        out[name] = best
    return out


def run(flag: str, quick: bool, repeats: int) -> dict:
    env = dict(os.environ, FULLAB_DISABLE_NUMBA=flag)
    cmd = [sys.executable, __file__, "--worker", "--repeats", str(repeats)] + (["--quick"] if quick else [])
    res = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.quick, args.repeats)))
        return
    jit, py = run("0", args.quick, args.repeats), run("1", args.quick, args.repeats)
    print(f"{'kernel':<18}{jit['backend'] + ' [s]':>14}{py['backend'] + ' [s]':>14}{'speedup':>10}")
    for name in jit:
        if name == "backend":
            continue
        print(f"{name:<18}{jit[name]:>14.4f}{py[name]:>14.4f}{py[name] / jit[name]:>10.1f}")


if __name__ == "__main__":
    main()
