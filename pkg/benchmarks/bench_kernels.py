"""Time the compiled and pure-Python special-function kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--size 20000]
"""

import argparse
import importlib
import random
import timeit


def _inputs(size, seed=0):
    rnd = random.Random(seed)
    beta = []
    for _ in range(size):
        x = rnd.random()
        beta.append((rnd.uniform(0.5, 5000.0), 0.5, x, 1.0 - x))
    gamma = [(0.5, rnd.uniform(0.0, 40.0)) for _ in range(size)]
    lbeta = [(rnd.uniform(0.1, 1e4), rnd.uniform(0.1, 1e4)) for _ in range(size)]
    return beta, gamma, lbeta


def bench(mod, beta, gamma, lbeta, repeat):
    betainc, gammainc, log_beta = mod.betainc, mod.gammainc, mod.log_beta
    cases = {
        "betainc (t tail)": lambda: [betainc(*a) for a in beta],
        "gammainc (chi-square)": lambda: [gammainc(*a) for a in gamma],
        "log_beta": lambda: [log_beta(*a) for a in lbeta],
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in cases.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--size", type=int, default=20_000)
    args = parser.parse_args()

    beta, gamma, lbeta = _inputs(args.size)
    results = {"python": bench(importlib.import_module("linprob._pykernels"), beta, gamma, lbeta, args.repeat)}
    try:
        compiled = importlib.import_module("linprob._ckernels")
    except ImportError:
        print("compiled kernels not built; only the pure-Python backend is timed")
    else:
        results["cython"] = bench(compiled, beta, gamma, lbeta, args.repeat)

    print(f"{args.size} calls per kernel, best of {args.repeat}")
    print(f"{'kernel':<24}{'python us/call':>16}{'cython us/call':>16}{'speedup':>10}")
    for name, py_time in results["python"].items():
        py_us = 1e6 * py_time / args.size
        if "cython" in results:
            c_us = 1e6 * results["cython"][name] / args.size
            print(f"{name:<24}{py_us:>16.2f}{c_us:>16.2f}{py_us / c_us:>9.1f}x")
        else:
            print(f"{name:<24}{py_us:>16.2f}{'-':>16}{'-':>10}")


if __name__ == "__main__":
    main()
