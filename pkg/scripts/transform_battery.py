#!/usr/bin/env python3
"""Randomized check of the duality transforms against direct dual enumeration.

Draws random codes over a mix of rings, applies each transform, and
compares the result with the enumerator of the explicitly computed dual.
Exits nonzero if any trial disagrees.
"""

import argparse
import random
from dataclasses import dataclass

from jacweight.codes import LinearCode
from jacweight.enumerators import (
    jacobi,
    joint_jacobi,
    macwilliams_both,
    macwilliams_first,
    macwilliams_second,
    macwilliams_single,
)
from jacweight.rings import field_ring, modular_ring

RING_MENU = (
    ("F2", lambda: field_ring(2)),
    ("F3", lambda: field_ring(3)),
    ("F4", lambda: field_ring(2, 2)),
    ("Z4", lambda: modular_ring(4)),
)


@dataclass(frozen=True)
class BatteryConfig:
    trials: int = 8
    seed: int = 0
    max_n: int = 5


def parse_args() -> BatteryConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=5)
    return BatteryConfig(**vars(ap.parse_args()))


def random_code(ring, n, rows, rng) -> LinearCode:
    while True:
        gens = tuple(
            tuple(rng.randrange(ring.order) for _ in range(n)) for _ in range(rows)
        )
        if any(any(g) for g in gens):
            return LinearCode(ring, n, gens)


def run_trial(rng, max_n) -> list[str]:
    label, make = RING_MENU[rng.randrange(len(RING_MENU))]
    ring = make()
    n = rng.randrange(3, max_n + 1)
    code_c = random_code(ring, n, 2, rng)
    code_d = random_code(ring, n, 1, rng)
    dual_c = code_c.dual()
    dual_d = code_d.dual()
    w = tuple(rng.randrange(ring.order) for _ in range(n))

    failures = []
    if macwilliams_single(jacobi(code_c, w), len(code_c.words)) != jacobi(dual_c, w):
        failures.append(f"single {label} n={n}")
    joint = joint_jacobi(code_c, code_d, w)
    if macwilliams_first(joint, len(code_c.words)) != joint_jacobi(dual_c, code_d, w):
        failures.append(f"first {label} n={n}")
    if macwilliams_second(joint, len(code_d.words)) != joint_jacobi(code_c, dual_d, w):
        failures.append(f"second {label} n={n}")
    if macwilliams_both(joint, len(code_c.words), len(code_d.words)) != joint_jacobi(
        dual_c, dual_d, w
    ):
        failures.append(f"both {label} n={n}")
    return failures


def main() -> int:
    cfg = parse_args()
    rng = random.Random(cfg.seed)
    bad = []
    for t in range(cfg.trials):
        bad.extend(run_trial(rng, cfg.max_n))
    checks = cfg.trials * 4
    if bad:
        for item in bad:
            print(f"FAIL {item}")
        print(f"{len(bad)} of {checks} checks failed")
        return 1
    print(f"all {checks} transform checks agree with direct dual enumeration")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
