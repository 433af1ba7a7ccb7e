"""Time the compiled and pure-Python clique kernels on the built-in certificates.

    python benchmarks/bench_kernels.py [--repeat N] [--names r4_16 r5_14 ...]

Prints one row per certificate with the wall-clock time of a full
verification under each backend and the speed-up.
"""

import argparse
import time

from ramseycert import _pykernel
from ramseycert.certificate import BUILTIN_NAMES, EXTRA_BUILTIN_NAMES, builtin_certificate
from ramseycert.verifier import verify

try:
    from ramseycert import _ckernel
except ImportError:
    _ckernel = None


def best_of(cert, kernel, repeat, use_bound):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = verify(cert, kernel=kernel, use_bound=use_bound)
        times.append(time.perf_counter() - t0)
    return min(times), report.valid


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1)
    parser.add_argument("--names", nargs="*", default=list(BUILTIN_NAMES + EXTRA_BUILTIN_NAMES))
    parser.add_argument("--bound", action="store_true", help="enable greedy-coloring bounds")
    parser.add_argument("--skip-python", action="store_true", help="time the compiled kernel only")
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print(f"{'certificate':<14}{'valid':>7}{'cython s':>11}{'python s':>11}{'speed-up':>10}")
    totals = [0.0, 0.0]
    for name in args.names:
        cert = builtin_certificate(name)
        c_time = p_time = None
        if _ckernel is not None:
            c_time, valid = best_of(cert, _ckernel, args.repeat, args.bound)
            totals[0] += c_time
        if not args.skip_python:
            p_time, valid = best_of(cert, _pykernel, args.repeat, args.bound)
            totals[1] += p_time
        fmt = lambda t: f"{t:11.3f}" if t is not None else f"{'-':>11}"
        ratio = f"{p_time / c_time:9.1f}x" if c_time and p_time else f"{'-':>10}"
        print(f"{name:<14}{str(valid):>7}{fmt(c_time)}{fmt(p_time)}{ratio}", flush=True)
    print(f"{'total':<14}{'':>7}{totals[0]:11.3f}{totals[1]:11.3f}")


if __name__ == "__main__":
    main()
