"""Run the closure scaling benchmark for every DAG family and archive the series."""

import argparse
from dataclasses import dataclass, field

from subquad.bench import BenchConfig, bench_closure


@dataclass
class Experiment:
    out_dir: str = "results"
    seed: int = 0
    repeats: int = 3
    sparse_sizes: tuple = tuple(2**k for k in range(10, 16))
    constant_sizes: tuple = tuple(2**k for k in range(10, 16))
    dense_sizes: tuple = (128, 256, 512, 1024)
    dense_density: float = 0.05
    families: tuple = field(default=("sparse", "constant", "dense"))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Experiment.out_dir)
    ap.add_argument("--seed", type=int, default=Experiment.seed)
    ap.add_argument("--repeats", type=int, default=Experiment.repeats)
    args = ap.parse_args()
    exp = Experiment(out_dir=args.out, seed=args.seed, repeats=args.repeats)
    sizes = {"sparse": exp.sparse_sizes, "constant": exp.constant_sizes, "dense": exp.dense_sizes}
    for fam in exp.families:
        cfg = BenchConfig(fam, sizes[fam], exp.repeats, exp.seed, exp.dense_density)
        rep = bench_closure(cfg, exp.out_dir)
        print(f"[{fam}] work exponent {rep.work_exponent:.3f} (residual {rep.work_residual:.3f}), "
              f"time exponent {rep.time_exponent:.3f} (residual {rep.time_residual:.3f})")
    print(f"raw series written to {exp.out_dir}/")


if __name__ == "__main__":
    main()
