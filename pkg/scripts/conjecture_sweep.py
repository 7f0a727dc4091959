#!/usr/bin/env python3
"""Sweep average intersection numbers across the bundled code pairs.

For each pair and mask weight the sweep prints the exact value, its
decimal form, and the distance to the conjectured round target for
that weight, when one is on file.
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from jacweight.averages import delta_closed
from jacweight.cli import decimal_string
from jacweight.codes import load_code
from jacweight.refvalues import CONJECTURE_TARGETS

DEFAULT_PAIRS = (
    "e8,e8",
    "e8x2,e8x2",
    "d16plus,e8x2",
    "d16plus,d16plus",
    "g24,g24",
    "d24plus,d24plus",
    "g24,d24plus",
)


@dataclass(frozen=True)
class SweepConfig:
    pairs: tuple[str, ...] = DEFAULT_PAIRS
    weights: tuple[int, ...] = (1, 2, 3)
    digits: int = 12
    targets: dict = field(default_factory=lambda: dict(CONJECTURE_TARGETS))


def parse_args() -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--pair",
        action="append",
        dest="pairs",
        metavar="C,D",
        help="code pair as two fixture names; repeatable",
    )
    ap.add_argument("--max-weight", type=int, default=3)
    ap.add_argument("--digits", type=int, default=12)
    ns = ap.parse_args()
    pairs = tuple(ns.pairs) if ns.pairs else DEFAULT_PAIRS
    return SweepConfig(
        pairs=pairs, weights=tuple(range(1, ns.max_weight + 1)), digits=ns.digits
    )


def main() -> int:
    cfg = parse_args()
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_code(name)
        return cache[name]

    for spec in cfg.pairs:
        cn, dn = (s.strip() for s in spec.split(","))
        code_c, code_d = get(cn), get(dn)
        for k in cfg.weights:
            if k > code_c.n:
                break
            w = (1,) * k + (0,) * (code_c.n - k)
            value = delta_closed(code_c, code_d, w)
            dec = decimal_string(value, cfg.digits)
            target = cfg.targets.get(k)
            if target is None:
                gap = "target:-"
            else:
                gap = f"target:{target} gap:{decimal_string(abs(value - Fraction(target)), cfg.digits)}"
            print(f"{cn},{dn}  wt={k}  {value}  {dec}  {gap}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
