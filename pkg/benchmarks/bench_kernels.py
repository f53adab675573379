#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-Python fallback.

Runs each hot kernel on both backends with identical inputs, checks the
outputs agree, and prints a timing table.  ``--full`` scales the workloads
up to something closer to the acceptance sweeps.
"""

import argparse
import time

from rightgroups.kernels import available_backends


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def workloads(full):
    scale = 10 if full else 1
    r5 = bytes([j for _ in range(5) for j in range(5)])
    z5 = bytes([(i + j) % 5 for i in range(5) for j in range(5)])
    yield ("enumerate_associative_tables(4)",
           "enumerate_associative_tables", (4,))
    yield (f"sample_associative_tables(5, {300 * scale})",
           "sample_associative_tables", (5, 300 * scale, 0))
    yield (f"sample_associative_tables(6, {200 * scale})",
           "sample_associative_tables", (6, 200 * scale, 0))
    yield ("enumerate_group_tables(6)", "enumerate_group_tables", (6,))
    if full:
        yield ("enumerate_group_tables(8)", "enumerate_group_tables", (8,))
    yield ("enumerate_homs(R5 -> R5)", "enumerate_homs", (5, r5, 5, r5))
    yield ("enumerate_homs(Z5 -> R5)", "enumerate_homs", (5, z5, 5, r5))


def bench_condition_flags(backends, full):
    name, ref = backends[0]
    count = 20_000 if full else 2_000
    tables = ref.sample_associative_tables(6, count, 1)
    rows = []
    for bname, mod in backends:
        t0 = time.perf_counter()
        flags = [mod.condition_flags(6, t) for t in tables]
        rows.append((bname, time.perf_counter() - t0, flags))
    for bname, _, flags in rows[1:]:
        assert flags == rows[0][2], "backends disagree on condition_flags"
    return f"condition_flags x {count} (n=6)", [(b, t) for b, t, _ in rows]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="acceptance-scale workloads")
    args = parser.parse_args()

    backends = available_backends()
    names = [name for name, _ in backends]
    print(f"backends: {', '.join(names)}")
    if len(backends) < 2:
        print("compiled extension unavailable; timing pure backend only")

    header = f"{'workload':<44}" + "".join(f"{n:>12}" for n in names)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    def emit(label, rows):
        line = f"{label:<44}"
        for _, secs in rows:
            line += f"{secs * 1000:>10.1f}ms"
        if len(rows) == 2:
            line += f"{rows[1][1] / max(rows[0][1], 1e-9):>9.1f}x"
        print(line)

    for label, fname, fargs in workloads(args.full):
        rows = []
        ref = None
        for bname, mod in backends:
            secs, out = timed(getattr(mod, fname), *fargs)
            if ref is None:
                ref = out
            else:
                assert out == ref, f"backends disagree on {label}"
            rows.append((bname, secs))
        emit(label, rows)

    label, rows = bench_condition_flags(backends, args.full)
    emit(label, rows)


if __name__ == "__main__":
    main()
