"""Decompose Euler characteristics for every mu of a given size and compare with K."""

import argparse
import time

from kostka_shoji.multipartitions import enumerate_multipartitions
from kostka_shoji.verify import cor33_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--size", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=3)
    args = ap.parse_args()

    cases = [(mu, args.max_degree) for mu in enumerate_multipartitions(args.r, args.n, args.size)]
    start = time.perf_counter()
    res = cor33_suite(cases)
    print(res.report())
    print(f"{len(cases)} weights mu, {time.perf_counter() - start:.1f}s")
    raise SystemExit(0 if res.passed else 1)


if __name__ == "__main__":
    main()
