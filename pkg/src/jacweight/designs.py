"""Support designs of weight classes.

The supports of the words of one weight form a multiset of blocks.
The checks here are exhaustive: coverage of every t-subset of the
coordinate set is counted with block multiplicity, and a design means
that count is the same everywhere.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .codes import BudgetExceeded, LinearCode, enumeration_budget, weight

__all__ = [
    "BlockMultiset",
    "DesignReport",
    "supports",
    "is_t_design",
    "is_t_homogeneous",
    "lambda_identity_holds",
]


@dataclass(frozen=True)
class BlockMultiset:
    """Multiset of k-subsets of an n-point set, kept with repeats."""

    n: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for block in self.blocks:
            if len(block) != self.k or len(set(block)) != self.k:
                raise ValueError("every block must have k distinct points")
            if any(not 0 <= p < self.n for p in block):
                raise ValueError("block point out of range")


@dataclass(frozen=True)
class DesignReport:
    """Coverage summary of a block multiset at one t.

    lam is the common coverage when every t-subset is met equally
    often, and None otherwise.  Undersized classes (block size below
    t) never report a lam.
    """

    n: int
    weight: int
    t: int
    lam: int | None
    min_coverage: int
    max_coverage: int
    block_count: int

    @property
    def is_design(self) -> bool:
        return self.lam is not None

    def to_json_obj(self):
        return {
            "weight": self.weight,
            "t": self.t,
            "lambda": self.lam,
            "min": self.min_coverage,
            "max": self.max_coverage,
        }


def supports(code: LinearCode, target_weight: int) -> BlockMultiset:
    """Blocks of coordinate supports of the words of one weight."""
    blocks = []
    for u in code.words:
        if weight(u) == target_weight:
            blocks.append(tuple(i for i, x in enumerate(u) if x != 0))
    return BlockMultiset(code.n, target_weight, tuple(blocks))


def is_t_design(bm: BlockMultiset, t: int) -> DesignReport:
    """Exhaustive coverage scan of all t-subsets of the point set."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t > bm.k:
        raise ValueError(f"t={t} exceeds block size {bm.k}")
    n_subsets = math.comb(bm.n, t)
    if n_subsets > enumeration_budget():
        raise BudgetExceeded(
            f"scanning {n_subsets} subsets exceeds the enumeration budget"
        )
    cover: Counter = Counter()
    for block in bm.blocks:
        for sub in itertools.combinations(block, t):
            cover[sub] += 1
    if len(cover) < n_subsets:
        min_cov = 0
    else:
        min_cov = min(cover.values())
    max_cov = max(cover.values(), default=0)
    lam = min_cov if min_cov == max_cov else None
    return DesignReport(
        n=bm.n,
        weight=bm.k,
        t=t,
        lam=lam,
        min_coverage=min_cov,
        max_coverage=max_cov,
        block_count=len(bm.blocks),
    )


def is_t_homogeneous(code: LinearCode, t: int):
    """Whether every nonzero weight class is a t-design.

    Returns the overall verdict and one report per nonzero weight
    with words present; the full-support class counts, the zero word
    does not.
    """
    dist = code.weight_distribution()
    reports = []
    verdict = True
    for w in sorted(dist):
        if w == 0:
            continue
        bm = supports(code, w)
        if t > w:
            reports.append(
                DesignReport(
                    n=code.n,
                    weight=w,
                    t=t,
                    lam=None,
                    min_coverage=0,
                    max_coverage=0,
                    block_count=len(bm.blocks),
                )
            )
            verdict = False
            continue
        report = is_t_design(bm, t)
        reports.append(report)
        if not report.is_design:
            verdict = False
    return verdict, reports


def lambda_identity_holds(report: DesignReport) -> bool:
    """Counting identity lam * C(n,t) = #blocks * C(k,t) for designs."""
    if report.lam is None:
        raise ValueError("identity applies only to verified designs")
    lhs = report.lam * math.comb(report.n, report.t)
    rhs = report.block_count * math.comb(report.weight, report.t)
    return lhs == rhs
