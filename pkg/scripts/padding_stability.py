"""Compare K computed with N rows per component against N+1 rows (zero-padded).

Exploratory: reports how often the polynomial changes when a zero row is added.
"""

import argparse
from collections import Counter

from kostka_shoji.kostka import kostka
from kostka_shoji.multipartitions import dominates, enumerate_multipartitions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-r", type=int, default=2)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--show", type=int, default=5, help="print this many changed pairs per r")
    args = ap.parse_args()

    for r in range(1, args.max_r + 1):
        stats = Counter()
        shown = 0
        for size in range(1, args.max_size + 1):
            # the smallest N that holds every multipartition of this size is size itself
            for N in range(1, size + 1):
                parts = enumerate_multipartitions(r, N, size)
                for lam in parts:
                    for mu in parts:
                        if not dominates(lam, mu):
                            continue
                        a = kostka(lam, mu).poly
                        b = kostka(lam.padded(N + 1), mu.padded(N + 1)).poly
                        key = "same" if a == b else "changed"
                        stats[key] += 1
                        if key == "changed" and shown < args.show:
                            shown += 1
                            print(f"  r={r} N={N} lam={lam} mu={mu}: {a}  ->  {b}")
        print(f"r={r}: {stats['same']} unchanged, {stats['changed']} changed by padding")


if __name__ == "__main__":
    main()
