import pytest
from hypothesis import given, strategies as st

import oracles
from envlat.counting import (GF_DENOMINATOR, d_seq, d_via_enumeration, d_via_gf, e_seq,
                             e_seq_unreorganized, gf_identity_check, orbit_count_series, series_mul)
from envlat.errors import ResourceLimitError

KNOWN_D = [1, 3, 11, 41, 151, 553, 2023, 7401, 27079, 99081, 362535, 1326505, 4853639]


def test_small_values():
    assert [d_seq(n) for n in range(13)] == KNOWN_D
    assert [e_seq(n) for n in range(5)] == [0, 1, 7, 33, 135]


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_networkx_count(n):
    assert d_via_enumeration(n) == oracles.d_bruteforce(n) == KNOWN_D[n]


def test_enumeration_up_to_twelve():
    assert [d_via_enumeration(n) for n in range(13)] == KNOWN_D


@given(st.integers(0, 200))
def test_rec_equals_gf(n):
    assert d_seq(n) == d_via_gf(n)


@given(st.integers(0, 50))
def test_two_recurrence_forms(n):
    assert e_seq(n) == e_seq_unreorganized(n)


@given(st.integers(1, 150))
def test_split_into_empty_and_nonempty_J(n):
    assert d_seq(n) == 2**n + e_seq(n)


def test_gf_linear_recurrence():
    for n in range(3, 120):
        assert d_seq(n) == 5 * d_seq(n - 1) - 6 * d_seq(n - 2) + 4 * d_seq(n - 3)


def test_big_integers_are_exact():
    assert d_seq(40) == 28847323000473192450759
    assert d_seq(500) > 2**500


def test_series_identity():
    assert gf_identity_check(0) and gf_identity_check(1) and gf_identity_check(40)
    assert gf_identity_check(200)


def test_series_mul():
    assert series_mul([1, 1], [1, -1], 3) == [1, 0, -1, 0]
    assert series_mul([1, 2, 3], list(GF_DENOMINATOR), 1) == [1, -3]


def test_negative_n():
    for f in (d_seq, e_seq, d_via_gf, d_via_enumeration, e_seq_unreorganized):
        with pytest.raises(ValueError):
            f(-1)


def test_enumeration_respects_cap():
    with pytest.raises(ResourceLimitError):
        d_via_enumeration(13)
    with pytest.raises(ResourceLimitError):
        d_via_enumeration(5, cap=4)


def test_orbit_count_series():
    s = orbit_count_series(5)
    assert s.d_values == tuple(KNOWN_D[:6]) and s.e_values[3] == 33
