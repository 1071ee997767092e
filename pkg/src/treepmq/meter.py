"""Query-local counting of weight-vs-weight comparisons.

Only query-time comparisons between real weights count toward an oracle's
budget.  Integer comparisons (depths, ranks, ids) and every preprocessing
comparison are free.  ``NONE_WEIGHT`` operands never reach a metered
comparison: empty segments are skipped, costing nothing.

Metered call sites (the full audit; everything else is preprocessing):

* ``meter.metered_min`` / ``meter.fold_min`` - used by ``oracles.brute_query``
  and the traced Python query path.
* ``oracles._query_fold_step`` inside ``oracles._query_kernel`` - the segment
  fold of the layered oracle (compiled query path).
* the single ``min`` in the boundary-depth branch of the same kernel.

Counters are owned by a single query invocation, so concurrent queries never
observe each other's counts.
"""
from __future__ import annotations

from .tree import NONE_WEIGHT


class ComparisonCounter:
    """Mutable query-local counter, passed down a query call chain."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


def metered_min(counter: ComparisonCounter, a: int, b: int) -> int:
    """min(a, b) over real weights, charging exactly one comparison."""
    assert a != NONE_WEIGHT and b != NONE_WEIGHT, "NONE operand in metered comparison"
    counter.count += 1
    return a if a <= b else b


def fold_min(counter: ComparisonCounter, values) -> int:
    """Minimum of a sequence, skipping NONE entries without charge.

    m real entries cost exactly m-1 comparisons; an all-NONE (or empty)
    sequence folds to NONE_WEIGHT at zero cost.
    """
    acc = NONE_WEIGHT
    for v in values:
        if v == NONE_WEIGHT:
            continue
        if acc == NONE_WEIGHT:
            acc = v
        else:
            acc = metered_min(counter, acc, v)
    return acc
