"""Timing sweep over the square torus links T(n,n).

Prints one line per size with elapsed time and memo statistics, plus a
cumulative line for a shared-table run, so cache reuse across sizes is
visible.

Usage: python scripts/benchmark.py [--max-n 10] [--shared]
"""

import argparse
import time
from dataclasses import dataclass

from torhom.recursion import MemoTable, eval_p
from torhom.sequences import pair_validate


@dataclass
class BenchConfig:
    max_n: int = 10
    shared: bool = False


def run(cfg: BenchConfig) -> None:
    shared_memo = MemoTable()
    for n in range(1, cfg.max_n + 1):
        memo = shared_memo if cfg.shared else MemoTable()
        t0 = time.perf_counter()
        series = eval_p(pair_validate("0" * n, "0" * n), memo)
        elapsed = time.perf_counter() - t0
        stats = memo.stats()
        print(f"T({n:2d},{n:2d})  {elapsed:8.3f}s  entries={stats.entries:6d}  "
              f"terms={len(series.num.terms):7d}  den={series.den.as_dict()}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--shared", action="store_true",
                        help="share one memo table across all sizes")
    args = parser.parse_args()
    run(BenchConfig(max_n=args.max_n, shared=args.shared))


if __name__ == "__main__":
    main()
