"""Verify every registered reduction on random and planted instances."""

import argparse
import json
import sys
from dataclasses import dataclass

from subquad.generators import sample_instances
from subquad.reductions import REDUCTIONS, verify_reduction


@dataclass
class Suite:
    random_count: int = 500
    planted_count: int = 50
    seed: int = 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=Suite.random_count)
    ap.add_argument("--planted", type=int, default=Suite.planted_count)
    ap.add_argument("--seed", type=int, default=Suite.seed)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    suite = Suite(args.random, args.planted, args.seed)
    reports = []
    for idx, (src, tgt) in enumerate(sorted(REDUCTIONS)):
        base = suite.seed + 1000 * idx
        insts = (
            sample_instances(src, suite.random_count, seed=base)
            + sample_instances(src, suite.planted_count, seed=base + 1, planted="yes")
            + sample_instances(src, suite.planted_count, seed=base + 2, planted="no")
        )
        rep = verify_reduction(src, tgt, insts)
        reports.append(rep.as_dict())
        if not args.json:
            mark = "ok  " if rep.ok else "FAIL"
            print(f"{mark} {src} -> {tgt}: {rep.passed}/{len(insts)} max blowup {rep.max_blowup:.2f}")
    if args.json:
        print(json.dumps(reports, indent=2))
    return 0 if all(r["failed"] == 0 for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
