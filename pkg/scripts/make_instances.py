"""Write a JSON-lines instance file for ``satake-fl verify-fl --instances``.

The fixed set is the rank-2, r=2 sweep over q in {2, 3}.  ``--random K`` appends K
random diagonal ``delta`` pairs per q whose norms are regular, drawn with ``--seed``.
"""

import argparse
import json
import random
import sys

from satake_fl.errors import NotRegular
from satake_fl.localfield import GF, format_series
from satake_fl.orbital import conductor, norm_map
from satake_fl.selftest import random_series

FIXED = {
    3: [("1", "g"), ("g", "g^2"), ("1", "g^3"), ("1", "1+pi"), ("g", "g+g^2*pi"), ("g*pi", "pi^-1"), ("pi", "g^3*pi^-1")],
    2: [("1", "1+g*pi"), ("g", "g+g^2*pi"), ("1", "g+g^2*pi"), ("pi", "g*pi^-1"), ("g*pi", "pi^-1"), ("pi", "pi^-1")],
}
LAMBDAS = ([0, 0], [1, -1])


def random_pairs(p: int, k: int, rng: random.Random, max_kappa: int = 2):
    field = GF(p, 2)
    found = []
    while len(found) < k:
        pair = tuple(random_series(rng, field, 0, 2, unit=True) for _ in range(2))
        try:
            kappa = conductor(norm_map(pair, 2, p))
        except NotRegular:
            continue
        if kappa <= max_kappa:
            found.append(tuple(format_series(x, with_field=False) for x in pair))
    return found


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", default="-")
    ap.add_argument("--random", type=int, default=0, metavar="K")
    ap.add_argument("--seed", type=int, default=0)
    ns = ap.parse_args(argv)
    rng = random.Random(ns.seed)
    out = sys.stdout if ns.output == "-" else open(ns.output, "w")
    with out:
        for p, rows in FIXED.items():
            rows = rows + random_pairs(p, ns.random, rng)
            for lam in LAMBDAS:
                for delta in rows:
                    out.write(json.dumps({"p": p, "a": 1, "r": 2, "lambda": lam, "delta": list(delta)}) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
