#!/usr/bin/env python3
"""Random-theory agreement between the graph expansion and the Gaussian oracle.

    python scripts/feynman_oracle_check.py --trials 5 --order 3
"""

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from kolmex.feynman import Theory, gaussian_oracle, graph_expansion
from kolmex.rng import SplitMix64


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--order", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    gen = SplitMix64(args.seed)
    for trial in range(args.trials):
        c3 = Fraction(*gen.fraction_pair(9, 6))
        c4 = Fraction(*gen.fraction_pair(9, 6))
        theory = Theory.single_color(c3=c3, c4=c4)
        t0 = time.time()
        e = graph_expansion(theory, args.order)
        o = gaussian_oracle(theory, args.order)
        status = "ok" if e.coeffs == o.coeffs else "MISMATCH"
        print(
            f"trial {trial}: c3={c3} c4={c4} -> {status} "
            f"({time.time() - t0:.2f}s)"
        )
        if status != "ok":
            print(f"  expansion: {e.pretty()}")
            print(f"  oracle:    {o.pretty()}")
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
