"""Benchmark the compiled kernels against the numpy fallback.

Times the fingerprint pipeline (coefficient matrix + F matrix +
characteristic polynomial over all canonical partitions) and the raw
kernels on random states.  Run from the repository root:

    python benchmarks/bench_kernels.py --qubits 4 --repeat 2000
"""

import argparse
import time

import numpy as np

from sloccinv import SeededGenerator, canonical_partitions, random_state
from sloccinv import _kernels_py

try:
    from sloccinv import _core
except ImportError:
    _core = None


def _time(func, args_list, repeat):
    start = time.perf_counter()
    for _ in range(repeat):
        for args in args_list:
            func(*args)
    return (time.perf_counter() - start) / (repeat * len(args_list))


def bench_backend(kernels, states, blocks, repeat):
    results = {}
    f_args = [(s.amps, s.n, rb) for s in states for rb in blocks]
    results["build_fmatrix"] = _time(kernels.build_fmatrix, f_args, repeat)
    fs = [kernels.build_fmatrix(*args) for args in f_args]
    results["charpoly"] = _time(kernels.charpoly_coeffs, [(f,) for f in fs], repeat)
    results["det_lu"] = _time(kernels.det_lu, [(f,) for f in fs], repeat)

    def pipeline(amps, n, rb):
        kernels.charpoly_coeffs(kernels.build_fmatrix(amps, n, rb))

    results["pipeline"] = _time(pipeline, f_args, repeat)
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, default=4)
    parser.add_argument("--states", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    gen = SeededGenerator(args.seed)
    states = [random_state(args.qubits, gen) for _ in range(args.states)]
    blocks = [
        np.asarray(p.row_block, dtype=np.intc) for p in canonical_partitions(args.qubits)
    ]

    print(f"qubits={args.qubits} states={args.states} partitions={len(blocks)} "
          f"repeat={args.repeat}")
    py = bench_backend(_kernels_py, states, blocks, args.repeat)
    if _core is None:
        print("compiled extension not built; numpy fallback only\n")
        rows = {"python": py}
    else:
        cy = bench_backend(_core, states, blocks, args.repeat)
        rows = {"python": py, "compiled": cy}

    names = list(py)
    header = f"{'kernel':<16}" + "".join(f"{k:>14}" for k in rows)
    if len(rows) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in names:
        line = f"{name:<16}"
        for k in rows:
            line += f"{rows[k][name] * 1e6:>12.2f}us"
        if len(rows) == 2:
            line += f"{py[name] / cy[name]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
