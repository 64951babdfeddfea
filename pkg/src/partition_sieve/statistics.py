"""Partition statistics: family-induced counts and native closed forms.

A family-induced statistic counts how many family members a partition
contains: X(pi) = |{i : F_i contained in pi}|. The native statistics apply
the equivalent direct rule (e.g. "number of even part sizes"); they exist
as independent oracles for the family-induced forms, so any disagreement
localizes a bug to one of two unrelated code paths.

All statistics are deterministic, total on partitions, and return
nonnegative integers. Instances are safe for concurrent use.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Mapping

from .families import FamilyPair, MultisetFamily, doubling_complement
from .partitions import Partition

__all__ = [
    "FamilyStatistic",
    "NativeStatistic",
    "Statistic",
    "native",
    "pair_statistics",
]

CountsRule = Callable[[Mapping[int, int]], int]


class Statistic:
    """Evaluator from partitions to nonnegative integers."""

    label: str

    def evaluate(self, partition: Partition) -> int:
        return self.counts_evaluator(partition.n)(partition.parts.as_dict())

    def counts_evaluator(self, n: int) -> CountsRule:
        """A rule over {size: multiplicity} maps, specialized to weight n.

        The specialization is what lets family-induced statistics resolve
        their relevant members once per n instead of once per partition.
        """
        raise NotImplementedError


class FamilyStatistic(Statistic):
    """X(pi) = number of family members contained in pi.

    Only members of weight <= n can occur in a partition of n, so
    evaluation restricts to the family's relevant indices for n. The
    resolved member list is cached per n (idempotent, so benign under
    concurrent construction).
    """

    def __init__(self, family: MultisetFamily, label: str | None = None):
        self.family = family
        self.label = label if label is not None else family.name
        self._patterns: dict[int, tuple[tuple[tuple[int, int], ...], ...]] = {}

    def patterns_for(self, n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        pats = self._patterns.get(n)
        if pats is None:
            pats = tuple(
                self.family.member(idx).items()
                for idx in self.family.relevant_indices(n)
            )
            self._patterns[n] = pats
        return pats

    def counts_evaluator(self, n: int) -> CountsRule:
        patterns = self.patterns_for(n)

        def rule(counts: Mapping[int, int]) -> int:
            hits = 0
            get = counts.get
            for pattern in patterns:
                for size, mult in pattern:
                    if get(size, 0) < mult:
                        break
                else:
                    hits += 1
            return hits

        return rule

    def __repr__(self) -> str:
        return f"FamilyStatistic({self.label!r})"


class NativeStatistic(Statistic):
    """A named closed-form rule on the {size: multiplicity} map."""

    def __init__(self, label: str, rule: CountsRule):
        self.label = label
        self._rule = rule

    def counts_evaluator(self, n: int) -> CountsRule:
        return self._rule

    def __repr__(self) -> str:
        return f"NativeStatistic({self.label!r})"


def _even_sizes(counts: Mapping[int, int]) -> int:
    return sum(1 for s in counts if s % 2 == 0)


def _repeated_sizes(counts: Mapping[int, int]) -> int:
    return sum(1 for m in counts.values() if m >= 2)


def _square_sizes(counts: Mapping[int, int]) -> int:
    return sum(1 for s in counts if math.isqrt(s) ** 2 == s)


def _mult_ge_size(counts: Mapping[int, int]) -> int:
    return sum(1 for s, m in counts.items() if m >= s)


def _mod6_x(counts: Mapping[int, int]) -> int:
    return sum(1 for s in counts if s % 6 in (2, 3, 4))


def _mod6_y_prose(counts: Mapping[int, int]) -> int:
    # Literal reading: any multiple of 3 counts, repetition only matters for
    # the rest. Diverges from the weight-matched mod6 family at n=6.
    return sum(1 for s, m in counts.items() if s % 3 == 0 or m >= 2)


def _consecutive_even(counts: Mapping[int, int]) -> int:
    return sum(1 for s in counts if s % 2 == 0 and s + 2 in counts)


def _consecutive_repeated(counts: Mapping[int, int]) -> int:
    return sum(1 for s, m in counts.items() if m >= 2 and counts.get(s + 1, 0) >= 2)


_SIMPLE_NATIVES: dict[str, CountsRule] = {
    "even_sizes": _even_sizes,
    "repeated_sizes": _repeated_sizes,
    "square_sizes": _square_sizes,
    "mult_ge_size": _mult_ge_size,
    "mod6_X": _mod6_x,
    "mod6_Y_prose": _mod6_y_prose,
    "consecutive_even": _consecutive_even,
    "consecutive_repeated": _consecutive_repeated,
}

NATIVE_NAMES = tuple(sorted(_SIMPLE_NATIVES)) + ("andrews_Y", "mult_ge", "not_in_M2")


def native(
    name: str,
    *,
    d: int | None = None,
    m1: Iterable[int] | None = None,
) -> NativeStatistic:
    """Construct a native statistic by name.

    mult_ge requires d >= 1; not_in_M2 and andrews_Y require the explicit
    M1 list. The remaining names take no parameters: even_sizes,
    repeated_sizes, square_sizes, mult_ge_size, mod6_X, mod6_Y_prose,
    consecutive_even, consecutive_repeated.
    """
    if name == "mult_ge":
        if d is None or d < 1:
            raise ValueError(f"mult_ge requires an integer d >= 1, got {d!r}")
        return NativeStatistic(
            f"mult_ge({d})",
            lambda counts, _d=d: sum(1 for m in counts.values() if m >= _d),
        )
    if name in ("not_in_M2", "andrews_Y"):
        if m1 is None:
            raise ValueError(f"{name} requires the M1 list")
        m1set = frozenset(m1)
        if name == "not_in_M2":
            m2 = frozenset(doubling_complement(m1set))
            return NativeStatistic(
                "not_in_M2",
                lambda counts, _m2=m2: sum(1 for s in counts if s not in _m2),
            )
        return NativeStatistic(
            "andrews_Y",
            lambda counts, _m1=m1set: sum(
                1 for s, m in counts.items() if s not in _m1 or m >= 2
            ),
        )
    if d is not None or m1 is not None:
        raise ValueError(f"native {name!r} takes no parameters")
    try:
        rule = _SIMPLE_NATIVES[name]
    except KeyError:
        raise ValueError(
            f"unknown native statistic {name!r}; known: {', '.join(NATIVE_NAMES)}"
        ) from None
    return NativeStatistic(name, rule)


def pair_statistics(pair: FamilyPair) -> tuple[FamilyStatistic, FamilyStatistic]:
    """The (X, Y) statistics induced by a pair's F and G families."""
    return (
        FamilyStatistic(pair.F, label=f"{pair.name}.X"),
        FamilyStatistic(pair.G, label=f"{pair.name}.Y"),
    )
