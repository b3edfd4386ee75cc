"""Evaluate every bound on a batch of channels and count where each inequality is tight.

Rows go to stdout as CSV; a summary of tight and violated comparisons goes to stderr.
"""

import argparse
import csv
import random
import sys
from collections import Counter

from combibounds.bounds import caro_wei, dsl, dsu, ldl, ldu_iterated, mdl, mdu, motzkin_straus
from combibounds.channel import compose, confusability
from combibounds.lp import SolverConfig, fractional_packing, integer_covering, integer_packing
from combibounds.zoo import deletion_channel, grain_channel, random_channel



def survey(name: str, A, config: SolverConfig) -> dict:
    G = confusability(A)
    B = compose(A, A.transpose())
    alpha = integer_packing(A, config)
    kappa_b = integer_covering(B, config)
    return {
        "channel": name,
        "inputs": A.num_inputs,
        "outputs": A.num_outputs,
        "mdl": mdl(B).exact,
        "dsl": dsl(B).exact,
        "ldl": ldl(B).exact,
        "motzkin_straus": motzkin_straus(G).exact,
        "caro_wei": caro_wei(G).exact,
        "lp_B": fractional_packing(B).value,
        "kappa_B": kappa_b.value,
        "alpha": alpha.value,
        "proved": alpha.optimality_proved and kappa_b.optimality_proved,
        "lp_A": fractional_packing(A).value,
        "ldu1_A": ldu_iterated(A).exact,
        "dsu_A": dsu(A).exact,
        "mdu_A": mdu(A).exact,
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=50, help="number of random channels")
    ap.add_argument("--max-side", type=int, default=12)
    ap.add_argument("--structured-max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--node-limit", type=int, default=None)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    config = SolverConfig(node_limit=args.node_limit)
    items = []
    for i in range(args.random):
        nx, ny = rng.randint(1, args.max_side), rng.randint(1, args.max_side)
        items.append((f"random#{i}", random_channel(nx, ny, rng.uniform(0.1, 0.6), rng)))
    for n in range(2, args.structured_max_n + 1):
        items += [(f"deletion:{n}", deletion_channel(n)), (f"grain:{n}", grain_channel(n))]

    rows = [survey(name, A, config) for name, A in items]
    out = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    out.writeheader()
    for r in rows:
        out.writerow({k: str(v) for k, v in r.items()})

    pairs = [("mdl", "dsl"), ("dsl", "ldl"), ("ldl", "lp_B"), ("lp_B", "kappa_B"), ("kappa_B", "alpha"),
             ("mdl", "motzkin_straus"), ("motzkin_straus", "caro_wei"), ("caro_wei", "alpha"),
             ("lp_A", "ldu1_A"), ("ldu1_A", "dsu_A"), ("dsu_A", "mdu_A")]
    tight, broken = Counter(), Counter()
    for r in rows:
        for lo, hi in pairs:
            if r[lo] == r[hi]:
                tight[lo, hi] += 1
            elif r[lo] > r[hi] and r["proved"]:
                broken[lo, hi] += 1
    for lo, hi in pairs:
        print(f"# {lo} <= {hi}: tight on {tight[lo, hi]}/{len(rows)}, violated on {broken[lo, hi]}",
              file=sys.stderr)
    return 1 if broken else 0


if __name__ == "__main__":
    sys.exit(main())
