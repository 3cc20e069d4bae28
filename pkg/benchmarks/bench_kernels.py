#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Per-kernel workloads exercise each hot loop at the scale where it
dominates the fuzzing suite, and an end-to-end batch of full invariant
reports is timed with every call site rebound to one backend at a time.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import statistics
import time

KERNEL_NAMES = ("subset_lcms", "minimal_transversals", "dominance_masks",
                "rank_int", "rank_modp")


def _kernel_workloads():
    rng = random.Random(2024)

    lcm_inputs = []
    for _ in range(40):
        q, n = 12, 8
        lcm_inputs.append(
            (tuple(tuple(rng.randrange(0, 4) for _ in range(n)) for _ in range(q)), n)
        )

    transversal_inputs = []
    for _ in range(300):
        n = 14
        edges = [rng.randrange(1, 1 << n) for _ in range(rng.randrange(4, 10))]
        transversal_inputs.append((edges, n))

    dominance_inputs = []
    for _ in range(4000):
        q, n = 8, 8
        rows = tuple(tuple(rng.randrange(0, 4) for _ in range(n)) for _ in range(q))
        members = tuple(sorted(rng.sample(range(q), rng.randrange(2, q + 1))))
        dominance_inputs.append((rows, members))

    rank_inputs = []
    for _ in range(400):
        nr, nc = rng.randrange(8, 16), rng.randrange(8, 16)
        rank_inputs.append(
            [[rng.randrange(-1, 2) for _ in range(nc)] for _ in range(nr)]
        )

    return [
        (
            "subset_lcms (q=12)",
            lambda impl: [impl.subset_lcms(rows, n) for rows, n in lcm_inputs],
        ),
        (
            "minimal_transversals (n=14)",
            lambda impl: [
                impl.minimal_transversals(edges, n, 10**6)
                for edges, n in transversal_inputs
            ],
        ),
        (
            "dominance_masks (q=8)",
            lambda impl: [
                impl.dominance_masks(rows, members)
                for rows, members in dominance_inputs
            ],
        ),
        (
            "rank_int (~12x12)",
            lambda impl: [impl.rank_int(mat) for mat in rank_inputs],
        ),
    ]


class _rebound_kernels:
    """Temporarily point every kernel call site at one backend."""

    def __init__(self, impl):
        self.impl = impl

    def __enter__(self):
        import monodom._kernels as sel

        self.saved = {name: getattr(sel, name) for name in KERNEL_NAMES}
        for name in KERNEL_NAMES:
            setattr(sel, name, getattr(self.impl, name))

    def __exit__(self, *exc):
        import monodom._kernels as sel

        for name, fn in self.saved.items():
            setattr(sel, name, fn)


def _report_batch():
    from monodom.verify import FuzzParams, check_report, random_ideal

    params = FuzzParams(n_max=4, q_max=6, exp_max=3, trials=150, seed=7)
    results = []
    for t in range(params.trials):
        report = check_report(random_ideal(params, t))
        results.append((report.codim, report.odom, report.pd))
    return results


def _time(fn, repeat):
    samples = []
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.mean(samples), value


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    from monodom._kernels import py as pure

    try:
        from monodom._kernels import _fast as fast
    except ImportError:
        print("compiled kernels are not built; run pip install -e . first")
        return 1

    header = f"{'workload':32s} {'pure best':>12s} {'compiled best':>14s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, fn in _kernel_workloads():
        p_best, _, p_out = _time(lambda: fn(pure), args.repeat)
        f_best, _, f_out = _time(lambda: fn(fast), args.repeat)
        if p_out != f_out:
            raise SystemExit(f"backends disagree on {name}")
        print(
            f"{name:32s} {p_best * 1e3:9.1f} ms {f_best * 1e3:11.1f} ms "
            f"{p_best / f_best:7.1f}x"
        )

    with _rebound_kernels(pure):
        p_best, _, p_out = _time(_report_batch, args.repeat)
    with _rebound_kernels(fast):
        f_best, _, f_out = _time(_report_batch, args.repeat)
    if p_out != f_out:
        raise SystemExit("backends disagree on full reports")
    print(
        f"{'150 full reports (end-to-end)':32s} {p_best * 1e3:9.1f} ms "
        f"{f_best * 1e3:11.1f} ms {p_best / f_best:7.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
