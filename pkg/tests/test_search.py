import pytest

from conftest import brute_rainbow_free, canonical_colorings
from rainbow_lab.coloring import is_canonical, is_rainbow_free
from rainbow_lab.errors import InputError
from rainbow_lab.modcore import CyclicInstance
from rainbow_lab.search import (
    SearchConfig,
    enumerate_rainbow_free,
    iter_rainbow_free_colorings,
    max_rainbow_free_r,
    rb_oracle,
)


class TestSearchConfig:
    def test_rejects_nonpositive_budget(self):
        with pytest.raises(InputError):
            SearchConfig(time_budget=0)


class TestMaxRainbowFreeR:
    def test_prime_schur(self):
        out = max_rainbow_free_r(CyclicInstance(5, 1))
        assert out.r_max == 3
        assert out.exhausted
        assert out.witness.is_exact_with(3)
        assert is_rainbow_free(out.witness, 1)

    def test_small_cases(self):
        assert max_rainbow_free_r(CyclicInstance(3, 1)).r_max == 2
        assert max_rainbow_free_r(CyclicInstance(9, 3)).r_max == 3

    def test_witness_is_lex_least_canonical(self):
        out = max_rainbow_free_r(CyclicInstance(7, 1))
        assert is_canonical(out.witness.colors)
        stream = enumerate_rainbow_free(CyclicInstance(7, 1), out.r_max)
        assert out.witness == next(iter(stream))

    def test_deterministic_across_runs(self):
        a = max_rainbow_free_r(CyclicInstance(10, 1))
        b = max_rainbow_free_r(CyclicInstance(10, 1))
        assert (a.r_max, a.witness, a.nodes_explored, a.exhausted) == (
            b.r_max,
            b.witness,
            b.nodes_explored,
            b.exhausted,
        )

    def test_parallel_matches_serial(self):
        for n, k in ((10, 1), (12, 1), (9, 3)):
            serial = max_rainbow_free_r(CyclicInstance(n, k))
            parallel = max_rainbow_free_r(
                CyclicInstance(n, k), SearchConfig(parallel=True)
            )
            assert parallel.r_max == serial.r_max
            assert parallel.exhausted == serial.exhausted
            assert parallel.witness == serial.witness

    def test_budget_exhaustion_is_inconclusive(self):
        out = max_rainbow_free_r(
            CyclicInstance(26, 1), SearchConfig(time_budget=0.005)
        )
        assert not out.exhausted

    def test_max_r_caps_the_search(self):
        out = max_rainbow_free_r(CyclicInstance(8, 1), SearchConfig(max_r=2))
        assert out.r_max == 2


class TestRbOracle:
    def test_examples(self):
        assert rb_oracle(CyclicInstance(5, 1)).value == 4
        assert rb_oracle(CyclicInstance(12, 1)).value == 5

    def test_convention_value_n_plus_one(self):
        result = rb_oracle(CyclicInstance(2, 1))
        assert result.value == 3  # = n + 1: no 2-coloring of Z_2 forces a rainbow

    def test_detail_and_conclusive_flag(self):
        result = rb_oracle(CyclicInstance(6, 1))
        assert result.conclusive
        assert result.detail["exhausted"]
        assert result.detail["r_max"] == result.value - 1
        assert result.detail["nodes_explored"] > 0

    def test_inconclusive_on_tiny_budget(self):
        result = rb_oracle(CyclicInstance(26, 1), SearchConfig(time_budget=0.005))
        assert not result.conclusive


class TestEnumerateRainbowFree:
    def test_empty_for_z3_three_colors(self):
        assert list(enumerate_rainbow_free(CyclicInstance(3, 1), 3)) == []

    def test_single_trivial_coloring(self):
        stream = list(enumerate_rainbow_free(CyclicInstance(2, 1), 1))
        assert [c.colors for c in stream] == [(0, 0)]

    def test_z5_three_colorings_have_singleton_class(self):
        stream = list(enumerate_rainbow_free(CyclicInstance(5, 1), 3))
        assert stream
        for c in stream:
            assert min(len(s) for s in c.color_classes().values()) == 1

    def test_canonical_unique_lexicographic(self):
        stream = [c.colors for c in enumerate_rainbow_free(CyclicInstance(8, 1), 3)]
        assert all(is_canonical(cs) for cs in stream)
        assert len(set(stream)) == len(stream)
        assert stream == sorted(stream)

    def test_rejects_r_out_of_range(self):
        with pytest.raises(InputError):
            enumerate_rainbow_free(CyclicInstance(5, 1), 6)

    def test_partial_flag_on_budget_exhaustion(self):
        stream = enumerate_rainbow_free(
            CyclicInstance(24, 1), 3, SearchConfig(time_budget=0.005)
        )
        list(stream)
        assert stream.partial

    def test_single_pass_matches_per_r_streams(self):
        inst = CyclicInstance(9, 3)
        combined = {c.colors for c in iter_rainbow_free_colorings(inst, min_r=2, max_r=4)}
        per_r = {
            c.colors
            for r in (2, 3, 4)
            for c in enumerate_rainbow_free(inst, r)
        }
        assert combined == per_r


class TestBruteForceCrossCheck:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_enumeration_matches_unpruned_brute_force(self, n):
        for k in (0, 1, 2, 3):
            found = {
                c.colors
                for c in iter_rainbow_free_colorings(CyclicInstance(n, k), min_r=1)
            }
            expected = {
                cols
                for cols in canonical_colorings(n)
                if brute_rainbow_free(cols, n, k)
            }
            assert found == expected, (n, k)


class TestMonotonicity:
    def test_feasible_color_counts_are_downward_closed(self, rf_small_all_k):
        # supports rb = r_max + 1: the set of r admitting a rainbow-free exact
        # r-coloring is an interval [1, r_max] (r = 1, 2 always feasible)
        for (n, k), colorings in rf_small_all_k.items():
            feasible = {c.num_colors() for c in colorings}
            if feasible:
                assert feasible == set(range(3, max(feasible) + 1)), (n, k)
