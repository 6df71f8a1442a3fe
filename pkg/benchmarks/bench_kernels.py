"""Time the exhaustive sweeps with numba and with the pure-numpy fallback.

Each backend runs in a fresh interpreter because the fallback is chosen
at import time from QSHUFFLE_PURE_NUMPY.

    python3 benchmarks/bench_kernels.py --sizes 5 6 7
"""
import argparse
import json
import os
import subprocess
import sys
import time

KINDS = ("stanley", "roundtrip", "inverse", "novick")


def run_backend(sizes, kinds):
    from qshuffle import _jit, sweep

    out = []
    for N in sizes:
        for kind in kinds:
            fn = getattr(sweep, f"{kind}_sweep")
            fn(min(N, 3))  # compile or load from cache outside the timing
            t0 = time.perf_counter()
            res = fn(N)
            out.append({
                "N": N, "kind": kind, "items": res.items, "failures": res.failures,
                "seconds": time.perf_counter() - t0,
            })
    print(json.dumps({"numba": _jit.USING_NUMBA, "rows": out}))


def spawn(pure, sizes, kinds):
    env = dict(os.environ)
    env.pop("QSHUFFLE_PURE_NUMPY", None)
    if pure:
        env["QSHUFFLE_PURE_NUMPY"] = "1"
    cmd = [sys.executable, __file__, "--backend", "--sizes", *map(str, sizes), "--kinds", *kinds]
    done = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(done.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--kinds", nargs="+", choices=KINDS, default=list(KINDS))
    ap.add_argument("--backend", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.backend:
        run_backend(args.sizes, args.kinds)
        return
    fast = spawn(False, args.sizes, args.kinds)
    slow = spawn(True, args.sizes, args.kinds)
    print(f"{'N':>2}  {'sweep':10} {'items':>10}  {'numba s':>9}  {'numpy s':>9}  {'speedup':>8}")
    for a, b in zip(fast["rows"], slow["rows"]):
        assert a["items"] == b["items"] and a["failures"] == b["failures"] == 0
        ratio = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        print(f"{a['N']:>2}  {a['kind']:10} {a['items']:>10}  {a['seconds']:9.4f}  {b['seconds']:9.4f}  {ratio:7.1f}x")


if __name__ == "__main__":
    main()
