"""Survey K on pairs where neither multipartition dominates the other."""

import argparse

from kostka_shoji.kostka import kostka
from kostka_shoji.verify import all_pairs
from kostka_shoji.multipartitions import dominates


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--max-size", type=int, default=5)
    args = ap.parse_args()

    pairs = nonzero = 0
    for lam, mu in all_pairs(args.max_r, args.max_size):
        if dominates(lam, mu) or dominates(mu, lam):
            continue
        pairs += 1
        poly = kostka(lam, mu).poly
        if poly:
            nonzero += 1
            print(f"nonzero: lam={lam} mu={mu} K={poly}")
    print(f"{pairs} non-comparable pairs (r <= {args.max_r}, size <= {args.max_size}); "
          f"{nonzero} with K != 0")


if __name__ == "__main__":
    main()
