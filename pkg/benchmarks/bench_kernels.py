"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from trineg import _kernels
from trineg.semantics import IMPLICATION_TABLES, compile_formula
from trineg.syntax import atoms, random_formula


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    d = np.linspace(0.0, 1.0, 1_000_001)
    rng = np.random.default_rng(0)
    names: list[str] = []
    while len(names) < 9:  # big enough for a 3^n table that dominates call overhead
        f = random_formula(rng, [f"p{i}" for i in range(10)], 8)
        names = atoms(f)
    ops, prog_args = compile_formula(f, names)
    imp = IMPLICATION_TABLES["lukasiewicz"]

    cases = [
        ("int_neg_array, 1e6 degrees", lambda: _kernels.int_neg_array_numpy(d, 0.8, False),
         lambda: _kernels.int_neg_array_numba(d, 0.8, False)),
        (f"eval_program, {len(names)} atoms, {len(ops)} ops", lambda: _kernels.eval_program_numpy(ops, prog_args, len(names), imp),
         lambda: _kernels.eval_program_numba(ops, prog_args, len(names), imp)),
    ]
    print(f"{'kernel':<40} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for label, np_fn, nb_fn in cases:
        nb_fn()  # compile outside the timing
        assert np.array_equal(np_fn(), nb_fn())
        t_np, t_nb = best(np_fn, args.repeat), best(nb_fn, args.repeat)
        print(f"{label:<40} {t_np * 1e3:>10.2f} {t_nb * 1e3:>10.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
