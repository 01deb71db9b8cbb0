"""Compiled versus pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call both backends directly in one process.  The end-to-end
rows rerun this script with WEILCORR_PURE_PYTHON=1 in a subprocess, since the
backend is fixed at import.
"""
import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from weilcorr.kernels import _pykernels

try:
    from weilcorr.kernels import _ckernels
except ImportError:
    _ckernels = None


def euler(n):
    """prod (1 - q^k) to n terms; its inverse (partition numbers) stays inside int64 for n = 250."""
    out = [0] * n
    k = 0
    while True:
        for j in (k, -k) if k else (0,):
            e = j * (3 * j - 1) // 2
            if e < n:
                out[e] = -1 if j % 2 else 1
        if k * (3 * k - 1) // 2 >= n:
            return out
        k += 1


def kernel_cases(rng):
    a = [rng.randint(-10**6, 10**6) for _ in range(2000)]
    b = [rng.randint(-10**6, 10**6) for _ in range(2000)]
    b[0] = 1
    phi = [1, 0, -1, 0, 1]  # 12th cyclotomic polynomial x^4 - x^2 + 1
    # flattened 36 x 36 matrices of length-4 coefficient vectors
    A = [rng.randint(-9, 9) for _ in range(36 * 36 * 4)]
    B = [rng.randint(-9, 9) for _ in range(36 * 36 * 4)]
    return {
        "mul_trunc n=2000": ("mul_trunc", (a, b, 2000)),
        "div_trunc n=250": ("div_trunc", ([rng.randint(-9, 9) for _ in range(250)], euler(250), 250)),
        "cyc_matmul 36x36": ("cyc_matmul", (A, B, 36, phi)),
    }


def end_to_end(repeat):
    from weilcorr import BACKEND
    from weilcorr.discform import build
    from weilcorr.obstruct import build_f1_level12
    from weilcorr.weilrep import rho
    D = build(6)
    rows = {
        "f1 at T=600": timeit.timeit(lambda: build_f1_level12(600), number=repeat) / repeat,
        "rho(M) N1=6": timeit.timeit(lambda: rho(D, ((13, 8), (21, 13))), number=repeat) / repeat,
    }
    return BACKEND, rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end-only", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.end_to_end_only:
        print(json.dumps(end_to_end(args.repeat)))
        return

    rng = random.Random(1)
    print(f"{'case':<22}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, (fn, fargs) in kernel_cases(rng).items():
        py = timeit.timeit(lambda: getattr(_pykernels, fn)(*fargs), number=args.repeat) / args.repeat
        if _ckernels is None:
            print(f"{name:<22}{py * 1e3:>14.2f}{'n/a':>14}{'':>10}")
            continue
        cy = timeit.timeit(lambda: getattr(_ckernels, fn)(*fargs), number=args.repeat) / args.repeat
        if getattr(_ckernels, fn)(*fargs) != getattr(_pykernels, fn)(*fargs):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<22}{py * 1e3:>14.2f}{cy * 1e3:>14.2f}{py / cy:>9.1f}x")

    results = {}
    for pure in (True, False):
        env = dict(os.environ)
        env.pop("WEILCORR_PURE_PYTHON", None)
        if pure:
            env["WEILCORR_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, __file__, "--end-to-end-only", "--repeat", str(args.repeat)],
                             env=env, capture_output=True, text=True, check=True).stdout
        backend, rows = json.loads(out)
        results[backend] = rows
    for name in results.get("python", {}):
        py = results["python"][name]
        cy = results.get("cython", {}).get(name)
        cell = f"{cy * 1e3:>14.2f}{py / cy:>9.1f}x" if cy else f"{'n/a':>14}"
        print(f"{name:<22}{py * 1e3:>14.2f}{cell}")


if __name__ == "__main__":
    main()
