"""Oracle census of Cohen-Macaulay powers S/I_G^n (a_0 = a_1 = -inf).

    python3 scripts/cm_census.py --max-vertices 5 --max-n 3
"""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from srpowers.formulas import is_cm
from srpowers.graphs import condition_class, diameter, stanley_reisner
from srpowers.harness import enumerate_graphs
from srpowers.monomial import power
from srpowers.takayama import ai_oracle
from srpowers.values import NEG_INFINITY


@dataclass(frozen=True)
class CensusConfig:
    r_max: int = 5
    n_max: int = 3


def main(cfg: CensusConfig) -> None:
    positive = defaultdict(list)
    for r in range(3, cfg.r_max + 1):
        for G in enumerate_graphs(r, with_isolated=False):
            for n in range(1, cfg.n_max + 1):
                J = power(stanley_reisner(G), n)
                if ai_oracle(J, 0) is NEG_INFINITY and ai_oracle(J, 1) is NEG_INFINITY:
                    positive[n].append(G)
    for n, gs in sorted(positive.items()):
        print(f"n={n}: {len(gs)} Cohen-Macaulay")
        for G in gs:
            tag = "listed" if is_cm(G, n) else "missing from list"
            conn = "connected" if diameter(G) != float("inf") else "disconnected"
            print(f"  {G}  {condition_class(G)}  {conn}  {tag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    main(CensusConfig(args.max_vertices, args.max_n))
