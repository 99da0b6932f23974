"""Time the compiled Sinkhorn kernels against the NumPy fallback.

    python benchmarks/bench_sinkhorn.py
    python benchmarks/bench_sinkhorn.py --batch 256 --classes 10 --iterations 50 --repeat 5

For every shape it runs one forward plus one backward sweep per backend,
reports the best wall time of ``--repeat`` runs, and checks that both
backends agree on potentials and gradients.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from warreg.kernels import BACKENDS, get_backend


def problem(batch: int, classes: int, lam: float, seed: int):
    rng = np.random.default_rng(seed)
    a = rng.dirichlet(np.ones(classes), size=batch)
    b = rng.dirichlet(np.ones(classes), size=batch)
    C = rng.uniform(0.1, 1.0, size=(classes, classes))
    C = (C + C.T) / 2
    np.fill_diagonal(C, 0.0)
    g_u, g_v = rng.normal(size=(batch, classes)), rng.normal(size=(batch, classes))
    return np.log(a), np.log(b), -C / lam, g_u, g_v


def run(kern, la, lb, M, n_iter, g_u, g_v):
    U, V = kern.forward(la, lb, M, n_iter)
    ga, gb = kern.backward(U, V, la, lb, M, g_u, g_v)
    return U, V, ga, gb


def best_time(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, nargs="+", default=[1, 64, 256])
    ap.add_argument("--classes", type=int, nargs="+", default=[3, 10])
    ap.add_argument("--iterations", type=int, default=50)
    ap.add_argument("--lam", type=float, default=0.05)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if "cython" not in BACKENDS:
        print("compiled extension not built; only the NumPy backend is available")
    names = sorted(BACKENDS)
    header = f"{'batch':>6} {'classes':>7} " + " ".join(f"{n + ' ms':>11}" for n in names)
    if len(names) == 2:
        header += f" {'speedup':>8} {'max diff':>9}"
    print(f"forward + backward, {args.iterations} iterations, lambda={args.lam}")
    print(header)
    for C in args.classes:
        for N in args.batch:
            inputs = problem(N, C, args.lam, seed=N * 100 + C)
            la, lb, M, g_u, g_v = inputs
            timings, outputs = {}, {}
            for name in names:
                kern = get_backend(name)
                outputs[name] = run(kern, la, lb, M, args.iterations, g_u, g_v)
                timings[name] = best_time(
                    lambda: run(kern, la, lb, M, args.iterations, g_u, g_v), args.repeat
                )
            row = f"{N:>6} {C:>7} " + " ".join(f"{1e3 * timings[n]:>11.2f}" for n in names)
            if len(names) == 2:
                diff = max(float(np.max(np.abs(x - y)))
                           for x, y in zip(outputs["cython"], outputs["numpy"]))
                row += f" {timings['numpy'] / timings['cython']:>7.1f}x {diff:>9.1e}"
            print(row)


if __name__ == "__main__":
    main()
