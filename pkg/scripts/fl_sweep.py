"""Run a fundamental-lemma sweep and write one JSON report per instance.

Reads instances in the ``make_instances.py`` format (default: its fixed set) and
writes reports as JSON lines, followed by a one-line summary on stderr.
"""

import argparse
import json
import sys
import time

from satake_fl.coweights import Coweight
from satake_fl.errors import WindowUnstable
from satake_fl.localfield import GF, parse_series
from satake_fl.orbital import fl_check

import make_instances


def load(path):
    if path is None:
        return [{"p": p, "a": 1, "r": 2, "lambda": lam, "delta": list(d)}
                for p, rows in make_instances.FIXED.items() for lam in make_instances.LAMBDAS for d in rows]
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances")
    ap.add_argument("-o", "--output", default="fl_sweep.jsonl")
    ns = ap.parse_args(argv)
    equal = unstable = total = 0
    with open(ns.output, "w") as out:
        for inst in load(ns.instances):
            p, a, r = inst["p"], inst.get("a", 1), inst.get("r", 2)
            field = GF(p, a * r)
            delta = tuple(parse_series(s, field) for s in inst["delta"])
            t0 = time.perf_counter()
            try:
                rep = fl_check(delta, Coweight(inst["lambda"]), p, a, r, inst.get("window"), inst.get("prec"))
                obj = rep.to_json()
                equal += rep.equal
            except WindowUnstable as e:
                obj = {"instance": inst, "error": "WindowUnstable", "message": str(e)}
                unstable += 1
            obj["seconds"] = round(time.perf_counter() - t0, 3)
            out.write(json.dumps(obj) + "\n")
            total += 1
    print(f"{equal}/{total} equal, {unstable} unstable; reports in {ns.output}", file=sys.stderr)
    return 0 if equal == total else 1


if __name__ == "__main__":
    sys.exit(main())
