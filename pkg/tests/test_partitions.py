import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_sieve import (
    Multiset,
    NotContainedError,
    Partition,
    count_containing,
    count_partitions,
    enumerate_partitions,
)
from partition_sieve.partitions import descending_part_sequences

from oracles import (
    count_containing_bruteforce,
    count_partitions_dp,
    partitions_recursive,
)

multisets = st.dictionaries(
    st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=4), max_size=5
).map(Multiset)


class TestMultiset:
    def test_weight_empty(self):
        assert Multiset().weight == 0

    def test_weight_counts_multiplicity(self):
        assert Multiset({2: 1, 4: 1}).weight == 6
        assert Multiset({1: 2, 2: 2}).weight == 6

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            Multiset({0: 1})
        with pytest.raises(ValueError):
            Multiset({3: 0})
        with pytest.raises(ValueError):
            Multiset({-2: 1})

    def test_contains(self):
        outer = Multiset({3: 1, 2: 2, 1: 1})
        assert outer.contains(Multiset({2: 2}))
        assert not Multiset({3: 1, 1: 1}).contains(Multiset({2: 1}))
        assert outer.contains(Multiset())

    def test_remove(self):
        assert Multiset({2: 2, 1: 1}).remove(Multiset({2: 2})) == Multiset({1: 1})
        assert Multiset({4: 1}).remove(Multiset()) == Multiset({4: 1})
        assert Multiset({3: 2}).remove(Multiset({3: 1})) == Multiset({3: 1})

    def test_remove_requires_containment(self):
        with pytest.raises(NotContainedError):
            Multiset({3: 1}).remove(Multiset({2: 1}))

    def test_union_max_multiplicity(self):
        assert Multiset({2: 1, 4: 1}).union(Multiset({4: 1, 6: 1})) == Multiset(
            {2: 1, 4: 1, 6: 1}
        )
        assert Multiset({1: 2, 2: 2}).union(Multiset({2: 2, 3: 2})) == Multiset(
            {1: 2, 2: 2, 3: 2}
        )
        a = Multiset({5: 3})
        assert a.union(Multiset()) == a

    def test_from_parts(self):
        assert Multiset.from_parts([4, 2, 2, 1]) == Multiset({1: 1, 2: 2, 4: 1})

    def test_hashable(self):
        assert len({Multiset({2: 1}), Multiset({2: 1}), Multiset({2: 2})}) == 2

    @given(multisets, multisets)
    def test_remove_inverts_add(self, outer, pattern):
        combined = outer.add(pattern)
        assert combined.contains(pattern)
        assert combined.remove(pattern) == outer
        assert combined.weight == outer.weight + pattern.weight

    @given(multisets, multisets)
    def test_union_commutative(self, a, b):
        assert a.union(b) == b.union(a)

    @given(multisets, multisets, multisets)
    def test_union_associative(self, a, b, c):
        assert a.union(b).union(c) == a.union(b.union(c))

    @given(multisets)
    def test_union_idempotent(self, a):
        assert a.union(a) == a

    @given(multisets, multisets, multisets)
    def test_containing_both_iff_containing_union(self, pi, a, b):
        both = pi.contains(a) and pi.contains(b)
        assert both == pi.contains(a.union(b))


class TestPartition:
    def test_empty_partition_of_zero(self):
        empty = Partition()
        assert empty.n == 0
        assert str(empty) == ""

    def test_canonical_text(self):
        assert str(Partition.from_parts([2, 4, 1, 2])) == "4,2,2,1"

    def test_weight_is_n(self):
        assert Partition.from_parts([3, 3, 1]).n == 7


class TestEnumeration:
    def test_n0_single_empty(self):
        assert list(enumerate_partitions(0)) == [Partition()]

    def test_n4_canonical_order(self):
        got = [p.part_sequence() for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_n10_has_42(self):
        assert sum(1 for _ in enumerate_partitions(10)) == 42

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(-1))

    @pytest.mark.parametrize("n", range(13))
    def test_matches_independent_enumerator(self, n):
        ours = sorted(p.part_sequence() for p in enumerate_partitions(n))
        reference = sorted(partitions_recursive(n))
        assert ours == reference

    def test_duplicate_free_and_deterministic(self):
        for n in range(16):
            first = list(descending_part_sequences(n))
            assert len(set(first)) == len(first)
            assert first == list(descending_part_sequences(n))

    def test_reverse_lexicographic(self):
        for n in range(2, 14):
            seqs = list(descending_part_sequences(n))
            assert seqs == sorted(seqs, reverse=True)

    def test_streams_independent(self):
        a = enumerate_partitions(5)
        b = enumerate_partitions(5)
        next(a)
        assert next(b).part_sequence() == (5,)


class TestCountPartitions:
    def test_negative_is_zero(self):
        assert count_partitions(-3) == 0

    def test_known_values(self):
        assert count_partitions(0) == 1
        assert count_partitions(6) == 11
        assert count_partitions(100) == 190569292

    def test_against_dp_oracle(self):
        for n in range(61):
            assert count_partitions(n) == count_partitions_dp(n)

    def test_matches_enumeration(self):
        for n in range(21):
            assert count_partitions(n) == sum(1 for _ in enumerate_partitions(n))

    def test_thread_safe_fill(self):
        # Concurrent cold reads must all land on the same exact values.
        results = {}

        def fill(seed):
            results[seed] = [count_partitions(n) for n in range(seed, 200, 7)]

        threads = [threading.Thread(target=fill, args=(s,)) for s in range(7)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for seed, values in results.items():
            assert values == [count_partitions_dp(n) for n in range(seed, 200, 7)]


class TestCountContaining:
    def test_examples(self):
        assert count_containing(4, Multiset({2: 2})) == 1
        assert count_containing(6, Multiset({2: 1, 4: 1})) == 1
        assert count_containing(10, Multiset({3: 1})) == 15

    def test_pattern_heavier_than_n(self):
        assert count_containing(3, Multiset({5: 1})) == 0

    @given(
        st.integers(min_value=0, max_value=20),
        st.dictionaries(
            st.integers(min_value=1, max_value=8),
            st.integers(min_value=1, max_value=3),
            max_size=4,
        ),
    )
    @settings(max_examples=60, deadline=None)
    def test_against_bruteforce(self, n, entries):
        pattern = Multiset(entries)
        assert count_containing(n, pattern) == count_containing_bruteforce(
            n, pattern.items()
        )
