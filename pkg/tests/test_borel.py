import random

import pytest

from agraph.borel import (
    VertexSet,
    brute_force_enumerate,
    enumerate_borel_fixed,
    is_borel_fixed,
    is_borel_fixed_by_complement,
    is_borel_fixed_members,
    terminal_ideal,
)
from agraph.errors import InvalidParameterError, VertexCapExceeded
from agraph.monomials import minimalize


def distinct_partitions(d: int, largest: int | None = None) -> int:
    """Independent counting oracle: partitions of d into distinct parts."""
    if d == 0:
        return 1
    largest = d if largest is None else largest
    return sum(distinct_partitions(d - part, part - 1)
               for part in range(min(d, largest), 0, -1))


class TestIsBorelFixed:
    def test_terminal(self):
        for n, d in ((2, 3), (3, 7), (5, 2)):
            assert is_borel_fixed(terminal_ideal(n, d))

    def test_running_example_both_sides(self, cubic_ideal, successor_ideal):
        assert is_borel_fixed(cubic_ideal)
        assert is_borel_fixed(successor_ideal)

    def test_missing_exchange(self):
        # x1^2 in the ideal forces x1*x2 in, which is absent
        assert not is_borel_fixed(minimalize(2, [(2, 0), (0, 2)]))

    def test_generator_check_equals_member_check(self):
        for n, d in ((2, 5), (3, 4)):
            for I in _all_artinian_ideals(n, d):
                assert is_borel_fixed(I) == is_borel_fixed_members(I)

    def test_generator_check_equals_complement_check(self):
        for n, d in ((2, 5), (3, 4)):
            for I in _all_artinian_ideals(n, d):
                assert is_borel_fixed(I) == is_borel_fixed_by_complement(I)


def _all_artinian_ideals(n, d):
    # every Artinian monomial ideal of colength d, via the brute-force route
    # but without the Borel filter
    from agraph.borel import _ideal_from_standard_set
    from agraph.monomials import times_var, unit

    level = {frozenset({unit(n)})}
    for _ in range(d - 1):
        nxt = set()
        for S in level:
            for m in S:
                for i in range(1, n + 1):
                    cand = times_var(m, i)
                    if cand in S:
                        continue
                    if all(cand[k] == 0
                           or tuple(e - (1 if t == k else 0) for t, e in enumerate(cand)) in S
                           for k in range(n)):
                        nxt.add(S | {cand})
        level = nxt
    return [_ideal_from_standard_set(n, S) for S in level]


class TestTerminalIdeal:
    def test_shapes(self):
        assert terminal_ideal(2, 3).gens == ((3, 0), (0, 1))
        assert terminal_ideal(1, 5).gens == ((5,),)
        I = terminal_ideal(3, 10)
        assert I.gens == ((10, 0, 0), (0, 1, 0), (0, 0, 1))
        assert I.colength() == 10

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParameterError):
            terminal_ideal(0, 3)
        with pytest.raises(InvalidParameterError):
            terminal_ideal(2, 0)


class TestEnumeration:
    def test_one_variable(self):
        for d in (1, 3, 7):
            vs = enumerate_borel_fixed(1, d)
            assert vs.ideals == (minimalize(1, [(d,)]),)

    def test_two_three(self):
        vs = enumerate_borel_fixed(2, 3)
        assert set(vs.ideals) == {
            minimalize(2, [(3, 0), (0, 1)]),
            minimalize(2, [(2, 0), (1, 1), (0, 2)]),
        }

    def test_three_three(self):
        vs = enumerate_borel_fixed(3, 3)
        assert set(vs.ideals) == {
            minimalize(3, [(3, 0, 0), (0, 1, 0), (0, 0, 1)]),
            minimalize(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)]),
        }

    def test_every_vertex_is_borel_of_right_colength(self):
        for n, d in ((2, 6), (3, 5), (4, 4)):
            vs = enumerate_borel_fixed(n, d)
            assert len(set(vs.ideals)) == len(vs.ideals)
            assert terminal_ideal(n, d) in vs.ideals
            for I in vs.ideals:
                assert is_borel_fixed(I)
                assert I.colength() == d

    def test_vertex_cap_is_loud(self):
        with pytest.raises(VertexCapExceeded) as err:
            enumerate_borel_fixed(2, 6, max_vertices=2)
        assert err.value.partial_count == 2

    def test_json_round_trip(self):
        vs = enumerate_borel_fixed(3, 4)
        assert VertexSet.from_json(vs.to_json()) == vs


class TestOracles:
    def test_counts_behind_the_filter(self):
        # colength three in the plane: three ideals exist, two are Borel
        assert len(_all_artinian_ideals(2, 3)) == 3
        assert len(brute_force_enumerate(2, 3)) == 2

    def test_two_six(self):
        assert len(brute_force_enumerate(2, 6)) == 4

    def test_one_variable_trivially_borel(self):
        for d in (1, 4):
            assert len(brute_force_enumerate(1, d)) == 1

    def test_set_equality_with_fast_route(self):
        for n in (1, 2, 3):
            for d in range(1, 7):
                fast = enumerate_borel_fixed(n, d)
                slow = brute_force_enumerate(n, d)
                assert fast.ideals == slow.ideals, (n, d)

    def test_plane_counts_match_distinct_partitions(self):
        counts = [len(enumerate_borel_fixed(2, d)) for d in range(1, 11)]
        oracle = [distinct_partitions(d) for d in range(1, 11)]
        assert counts == oracle
        assert oracle == [1, 1, 2, 2, 3, 4, 5, 6, 8, 10]

    def test_brute_force_scale_guard(self):
        with pytest.raises(InvalidParameterError):
            brute_force_enumerate(5, 3)
