"""Tabulate graded ranks of torus links T(m,n) over a rectangle of
parameters, in any of the three output formats.

Usage: python scripts/torus_table.py [--max-m 5] [--max-n 5]
       [--format human|latex|json] [--normalized]
"""

import argparse
from dataclasses import dataclass

from torhom.links import TorusLinkSpec, normalized_homology, torus_link_homology
from torhom.recursion import MemoTable
from torhom.ring import render


@dataclass
class TableConfig:
    max_m: int = 5
    max_n: int = 5
    fmt: str = "human"
    normalized: bool = False


def run(cfg: TableConfig) -> None:
    memo = MemoTable()
    for m in range(1, cfg.max_m + 1):
        for n in range(m, cfg.max_n + 1):
            spec = TorusLinkSpec(m, n)
            if cfg.normalized:
                series = normalized_homology(spec, memo)
            else:
                series = torus_link_homology(spec, memo)
            print(f"T({m},{n}) = {render(series, cfg.fmt)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--format", dest="fmt", default="human",
                        choices=("human", "latex", "json"))
    parser.add_argument("--normalized", action="store_true")
    args = parser.parse_args()
    run(TableConfig(max_m=args.max_m, max_n=args.max_n, fmt=args.fmt,
                    normalized=args.normalized))


if __name__ == "__main__":
    main()
