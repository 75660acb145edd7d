"""Triple search: index inversion, value-side brute force, and their
agreement, including on synthetic tables with planted solutions."""

import pytest

from triboverify.triples import (TripleCandidate, admissible, brute_force,
                                 search, uvw_from_xyz, verify_triple)
from triboverify.tribonacci import trib


class FakeTable:
    """Fake sequence with a planted triple (1, 2, 3) at indices (5, 6, 7)."""

    VALS = [0, 0, 1, 1, 2, 3, 4, 7, 13, 24, 44, 81, 149]

    def value(self, n):
        return self.VALS[n]

    def values_upto(self, bound):
        return [(n, v) for n, v in enumerate(self.VALS) if v <= bound]

    def first_index(self, value):
        for n, v in enumerate(self.VALS):
            if v == value:
                return n
        return None


def test_inversion_rejects_known_index_triples():
    # u**2 = 18/12, then 36/23, then 72/43: none are integers
    assert uvw_from_xyz(5, 6, 7) is None
    assert uvw_from_xyz(5, 7, 8) is None
    assert uvw_from_xyz(6, 7, 9) is None
    with pytest.raises(ValueError):
        uvw_from_xyz(3, 6, 7)
    with pytest.raises(ValueError):
        uvw_from_xyz(6, 6, 7)


def test_verify_triple_rejects_near_misses():
    assert verify_triple(1, 3, 6) is None    # 19 not in the sequence
    assert verify_triple(1, 2, 3) is None    # 3 not in the sequence
    assert verify_triple(1, 3, 12) is None   # 37 not in the sequence
    with pytest.raises(ValueError):
        verify_triple(2, 2, 3)
    with pytest.raises(ValueError):
        verify_triple(0, 1, 2)


def test_admissible():
    assert admissible(5, 6, 7)
    assert not admissible(5, 6, 12)   # x + y <= z
    assert not admissible(4, 6, 7)    # x below the floor
    assert not admissible(6, 6, 7)
    assert admissible(5, 20, 24, use_gcd_prune=True)   # floor is 4
    assert not admissible(7, 38, 40, use_gcd_prune=True)  # floor is 8
    assert admissible(8, 38, 40, use_gcd_prune=True)


def test_search_empty_on_real_sequence():
    assert search(6) == []
    assert search(8) == []
    assert search(30) == []


def test_search_prune_does_not_change_answer():
    assert search(60) == search(60, use_gcd_prune=True) == []


def test_search_jobs_deterministic():
    assert search(40, jobs=4) == search(40)


def test_brute_force_empty_on_real_sequence():
    assert brute_force(3) == []
    assert brute_force(100) == []
    assert brute_force(500) == []


def test_planted_triple_found_by_both_strategies():
    ft = FakeTable()
    assert uvw_from_xyz(5, 6, 7, ft) == (1, 2, 3)
    assert verify_triple(1, 2, 3, ft) == (5, 6, 7)
    fs = search(12, table=ft)
    fb = brute_force(10, table=ft)
    planted = TripleCandidate(5, 6, 7, 1, 2, 3)
    assert planted in fs
    assert planted in fb
    # the fake table happens to admit a second triple; both routes agree on
    # the complete answer, not just the planted row
    assert fs == fb == [planted, TripleCandidate(5, 7, 8, 1, 2, 6)]


def test_candidates_satisfy_defining_equations():
    ft = FakeTable()
    for c in search(12, table=ft):
        assert c.u * c.v + 1 == ft.value(c.x)
        assert c.u * c.w + 1 == ft.value(c.y)
        assert c.v * c.w + 1 == ft.value(c.z)
        assert c.u < c.v < c.w
        assert c.x < c.y < c.z


def test_divisibility_shortcut_is_sound():
    # every surviving index triple satisfies (T_x-1)(T_y-1) % (T_z-1) == 0;
    # check the contrapositive on a window of real index triples
    for z in range(7, 16):
        tz = trib(z) - 1
        for y in range(6, z):
            for x in range(5, y):
                if (trib(x) - 1) * (trib(y) - 1) % tz == 0:
                    # divisibility alone does not make a triple
                    assert uvw_from_xyz(x, y, z) is None
