"""Time the compiled MAC loop against the numpy fallback.

    python benchmarks/bench_kernels.py [--rows 256] [--inner 256] [--cols 128] [--d 8]

Both backends run the same faulted product and must agree bit for bit.
"""
import argparse
import time

import numpy as np

from fltlab import _backend
from fltlab.floatbits import get_format
from fltlab.systolic import FaultSite, tiled_mm


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--rows", type=int, default=256)
    p.add_argument("--inner", type=int, default=256)
    p.add_argument("--cols", type=int, default=128)
    p.add_argument("--d", type=int, default=8)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--formats", default="f32,f16,bf16")
    args = p.parse_args()

    rng = np.random.default_rng(0)
    a = rng.standard_normal((args.rows, args.inner))
    w = rng.standard_normal((args.inner, args.cols))
    macs = args.rows * args.inner * args.cols
    backends = _backend.available()
    print(f"{args.rows}x{args.inner} @ {args.inner}x{args.cols}, d={args.d}, {macs / 1e6:.1f}M MACs")
    print(f"{'format':6} {'fault':6} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for name in args.formats.split(","):
        fmt = get_format(name)
        for label, fault in (("none", None),
                             ("down", FaultSite.make("down", 1, 2, fmt.exponent_lsb, 1))):
            times, outs = [], []
            for b in backends:
                t, out = _time(lambda: tiled_mm(a, w, args.d, fault, 0.0, fmt, backend=b),
                               args.repeat)
                times.append(t)
                outs.append(out.view(np.uint32))
            same = all(np.array_equal(outs[0], o) for o in outs[1:])
            speed = f"{times[-1] / times[0]:8.1f}x" if len(times) > 1 else "       -"
            print(f"{fmt.name:6} {label:6} " + " ".join(f"{t:11.4f}s" for t in times)
                  + f" {speed}" + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
