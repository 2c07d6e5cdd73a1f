"""Tabulate K over all dominant pairs and summarize positivity and degrees.

    python3 scripts/tabulate.py --max-r 2 --max-size 7 --out tables/
"""

import argparse
import json
import time
from pathlib import Path

from kostka_shoji.cli import render_table
from kostka_shoji.kostka import kostka_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-r", type=int, default=2)
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default=None, help="directory for one JSON table per (r, size)")
    args = ap.parse_args()

    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    for r in range(1, args.max_r + 1):
        for size in range(args.max_size + 1):
            start = time.perf_counter()
            table = kostka_table(r, max(size, 1), size, threads=args.threads)
            elapsed = time.perf_counter() - start
            negative = sum(1 for poly in table.values() if not poly.is_nonnegative())
            top = max((poly.degree() for poly in table.values() if poly), default=0)
            summary.append({"r": r, "size": size, "pairs": len(table), "negative": negative,
                            "max_degree": top, "seconds": round(elapsed, 2)})
            print(f"r={r} size={size}: {len(table)} pairs, {negative} with a negative coefficient, "
                  f"max degree {top}, {elapsed:.1f}s")
            if out_dir:
                (out_dir / f"kostka_r{r}_size{size}.json").write_text(render_table(table, "json"))
    if out_dir:
        (out_dir / "summary.json").write_text(json.dumps(summary, indent=1) + "\n")


if __name__ == "__main__":
    main()
