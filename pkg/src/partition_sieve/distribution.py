"""Exact distribution tables for partition statistics, and pairwise
identical-distribution verification over a range of n.

A table holds the numerators |{pi in P(n) : X(pi) = j}|; probabilities are
the exact rationals count / p(n). Comparison verdicts are computed from
exact counts only, never from floating point.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .partitions import descending_part_sequences
from .statistics import Statistic

__all__ = [
    "ComparisonReport",
    "ComparisonVerdict",
    "DistributionTable",
    "compare",
    "distribution_bruteforce",
    "render_table_csv",
    "render_table_json",
    "render_table_text",
    "worker_count",
]

THREADS_ENV_VAR = "PARTITION_SIEVE_THREADS"
_CHUNK = 2048


def worker_count() -> int:
    """Worker count from the environment (default 1); must be >= 1."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{THREADS_ENV_VAR} must be >= 1, got {value}")
    return value


@dataclass(frozen=True, eq=False)
class DistributionTable:
    """Exact counts {j: |{pi in P(n) : X(pi) = j}|} with their sum.

    Absent j means count 0; zero counts are never stored. For full
    enumerations the total equals p(n).
    """

    n: int
    counts: dict[int, int]
    total: int

    def __init__(self, n: int, counts: Mapping[int, int]):
        clean = {}
        for j, c in counts.items():
            if j < 0:
                raise ValueError(f"statistic value must be >= 0, got {j}")
            if c < 0:
                raise ValueError(f"count must be >= 0, got {c} at j={j}")
            if c:
                clean[j] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "counts", clean)
        object.__setattr__(self, "total", sum(clean.values()))

    def marginal(self, j: int) -> int:
        """The count at j (0 if absent)."""
        return self.counts.get(j, 0)

    def probability(self, j: int) -> Fraction:
        """Exact Prob(X = j) as a rational; presentation only, never compared."""
        return Fraction(self.marginal(j), self.total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __repr__(self) -> str:
        body = ", ".join(f"{j}: {c}" for j, c in sorted(self.counts.items()))
        return f"DistributionTable(n={self.n}, counts={{{body}}}, total={self.total})"


def distribution_bruteforce(
    stat: Statistic, n: int, *, threads: int | None = None
) -> DistributionTable:
    """Tally the statistic over every partition of n by full enumeration.

    With threads > 1 the enumeration stream is split into chunks tallied by
    a worker pool; counts merge by exact addition, so the result is
    identical to the sequential one. threads=None reads the
    PARTITION_SIEVE_THREADS environment variable.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if threads is None:
        threads = worker_count()
    rule = stat.counts_evaluator(n)
    stream = descending_part_sequences(n)
    if threads == 1:
        tally: Counter[int] = Counter()
        for seq in stream:
            tally[rule(Counter(seq))] += 1
        return DistributionTable(n, tally)

    def tally_chunk(chunk: list[tuple[int, ...]]) -> Counter[int]:
        local: Counter[int] = Counter()
        for seq in chunk:
            local[rule(Counter(seq))] += 1
        return local

    tally = Counter()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = iter(lambda: list(itertools.islice(stream, _CHUNK)), [])
        for partial in pool.map(tally_chunk, chunks):
            tally.update(partial)
    return DistributionTable(n, tally)


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome at one n: identical count maps, or the smallest differing j."""

    n: int
    identical: bool
    j: int | None = None
    count_x: int | None = None
    count_y: int | None = None


@dataclass(frozen=True)
class ComparisonReport:
    label_x: str
    label_y: str
    n_from: int
    n_to: int
    verdicts: tuple[ComparisonVerdict, ...]

    @property
    def identical_everywhere(self) -> bool:
        return all(v.identical for v in self.verdicts)

    def first_divergence(self) -> ComparisonVerdict | None:
        return next((v for v in self.verdicts if not v.identical), None)


def first_count_difference(
    a: Mapping[int, int], b: Mapping[int, int]
) -> tuple[int, int, int] | None:
    """Smallest j where two count maps differ, with both counts; None if equal."""
    for j in sorted(set(a) | set(b)):
        if a.get(j, 0) != b.get(j, 0):
            return j, a.get(j, 0), b.get(j, 0)
    return None


def compare(
    stat_x: Statistic,
    stat_y: Statistic,
    n_from: int,
    n_to: int,
    *,
    threads: int | None = None,
) -> ComparisonReport:
    """Check Prob_n(X=j) = Prob_n(Y=j) for every n in [n_from, n_to].

    Both sides are full enumerations of P(n), so equal count maps mean equal
    distributions exactly. A divergent verdict carries the smallest j whose
    counts differ.
    """
    if not 0 <= n_from <= n_to:
        raise ValueError(f"need 0 <= n_from <= n_to, got [{n_from}, {n_to}]")
    verdicts = []
    for n in range(n_from, n_to + 1):
        tx = distribution_bruteforce(stat_x, n, threads=threads)
        ty = distribution_bruteforce(stat_y, n, threads=threads)
        diff = first_count_difference(tx.counts, ty.counts)
        if diff is None:
            verdicts.append(ComparisonVerdict(n, True))
        else:
            j, cx, cy = diff
            verdicts.append(ComparisonVerdict(n, False, j, cx, cy))
    return ComparisonReport(stat_x.label, stat_y.label, n_from, n_to, tuple(verdicts))


# --- render formats ----------------------------------------------------------
# Outputs are byte-stable: rows in ascending j, counts in decimal. Machine
# formats carry every numeric value as a decimal string so consumers never
# hit integer-width limits.


def render_table_text(table: DistributionTable, label: str | None = None) -> str:
    head = f"n={table.n}  total={table.total}"
    if label:
        head = f"{label}  {head}"
    width = max(len("count"), *(len(str(c)) for c in table.counts.values()), 1)
    jwidth = max(len("j"), *(len(str(j)) for j in table.counts), 1)
    lines = [head, f"{'j':>{jwidth}}  {'count':>{width}}"]
    for j, c in sorted(table.counts.items()):
        lines.append(f"{j:>{jwidth}}  {c:>{width}}")
    return "\n".join(lines)


def render_table_csv(table: DistributionTable) -> str:
    lines = ["n,j,count,total"]
    for j, c in sorted(table.counts.items()):
        lines.append(f"{table.n},{j},{c},{table.total}")
    return "\n".join(lines)


def render_table_json(table: DistributionTable, label: str | None = None) -> str:
    doc: dict = {}
    if label:
        doc["statistic"] = label
    doc["n"] = str(table.n)
    doc["counts"] = {str(j): str(c) for j, c in sorted(table.counts.items())}
    doc["total"] = str(table.total)
    return json.dumps(doc, indent=2)
