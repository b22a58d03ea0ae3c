"""Compare the matrix engine against the combinatorial criteria on every
nonzero datum up to a dimension bound and print a per-algebra summary.

    python3 scripts/oracle_sweep.py --max-dim 6 --seed 0
"""

import argparse
import random
import time

from nilorbits.cli import selftest_algebras
from nilorbits.core import is_zero_datum
from nilorbits.matrixlab import analyze_triple, build_model, complete_standard_triple, extract_datum
from nilorbits.orbits import enumerate_orbit_data, negation_stable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    total = bad = 0
    start = time.perf_counter()
    print(f"{'algebra':<12}{'data':>6}{'stable':>8}{'agree':>7}{'no rational conj':>18}")
    for alg in selftest_algebras(args.max_dim):
        data = [d for d in enumerate_orbit_data(alg) if not is_zero_datum(d)]
        if not data:
            continue
        stable = agree = irrational = 0
        for d in data:
            t = build_model(alg, d)
            t = complete_standard_triple(t.x, t.ambient, rng)
            rep = analyze_triple(t)
            expected = negation_stable(alg, d).stable
            ok = extract_datum(t) == d and rep.verdict.stable == expected
            agree += ok
            stable += expected
            irrational += rep.verdict.stable and rep.conjugator is None
        total += len(data)
        bad += len(data) - agree
        print(f"{alg.label():<12}{len(data):>6}{stable:>8}{agree:>7}{irrational:>18}")
    print(f"{total} data, {bad} disagreements, {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
