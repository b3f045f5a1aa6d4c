"""Verify every bound on the two standard corpora and write the JSON summaries.

    python scripts/verify_corpus.py [--out results/] [--with-u]
"""
import argparse
import json
import time
from pathlib import Path

from valuebound.gf import field_make
from valuebound.report import all_low_degree_maps, random_corpus, verify_maps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--with-u", action="store_true")
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    corpora = {
        "exhaustive_q2_n2_deg2": lambda: all_low_degree_maps(field_make(2), 2, 2),
        "random_q345_n12": lambda: random_corpus([3, 4, 5], [1, 2], args.count, args.seed),
    }
    failed = False
    for name, make in corpora.items():
        t0 = time.perf_counter()
        summary = verify_maps(make(), with_u=args.with_u).to_json()
        summary["seconds"] = round(time.perf_counter() - t0, 3)
        (args.out / f"{name}.json").write_text(json.dumps(summary, indent=2) + "\n")
        failed |= bool(summary["violations"])
        print(f"{name}: {summary['maps_tested']} maps, {len(summary['violations'])} violations, "
              f"{summary['seconds']}s")
    raise SystemExit(5 if failed else 0)


if __name__ == "__main__":
    main()
