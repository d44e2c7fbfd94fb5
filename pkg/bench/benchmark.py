"""Compare the numba and numpy kernel backends on the batch sweeps.

Run directly:  python bench/benchmark.py [N]

The backend is chosen at import time, so each path runs in a fresh
subprocess with POLSPIN_DISABLE_NUMBA set accordingly.
"""

import json
import os
import subprocess
import sys
import timeit

_WORKER = """
import json, sys, timeit
import numpy as np
from polspin import kernels

n = int(sys.argv[1])
rng = np.random.default_rng(7)
raw = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
spinors = raw / np.linalg.norm(raw, axis=1, keepdims=True)
stokes = np.abs(rng.standard_normal((n, 4))) + 0.1

kernels.triads(spinors)  # warm up (jit compile on the numba path)
kernels.coherency_invariants(stokes)

reps = 5
t_triads = min(timeit.repeat(lambda: kernels.triads(spinors), number=1, repeat=reps))
t_inv = min(timeit.repeat(lambda: kernels.coherency_invariants(stokes), number=1, repeat=reps))
print(json.dumps({"backend": kernels.backend_name(), "triads": t_triads, "invariants": t_inv}))
"""


def run_backend(disable_numba, n):
    env = dict(os.environ, POLSPIN_DISABLE_NUMBA="1" if disable_numba else "0")
    out = subprocess.run(
        [sys.executable, "-c", _WORKER, str(n)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    results = [run_backend(True, n), run_backend(False, n)]
    print(f"batch size: {n}")
    print(f"{'kernel':<12} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    by_backend = {r["backend"]: r for r in results}
    if "numba" not in by_backend:
        print("numba unavailable; only the numpy path was timed")
    for kernel in ("triads", "invariants"):
        t_np = by_backend["numpy"][kernel]
        row = f"{kernel:<12} {1e3 * t_np:>12.3f}"
        if "numba" in by_backend:
            t_nb = by_backend["numba"][kernel]
            row += f" {1e3 * t_nb:>12.3f} {t_np / t_nb:>8.2f}x"
        print(row)


if __name__ == "__main__":
    main()
