import pytest

from seqlab.errors import BudgetExceeded
from seqlab.hard_enum import (
    catalan,
    closed_meander_count,
    dedekind_variant,
    hadamard_bound,
    hadamard_maxdet01,
    labeled_foldings,
    latin_squares_bruteforce,
    latin_squares_reduced,
    maxdet01_direct,
    meander_count,
    meander_growth_check,
    monotone_functions_bruteforce,
    monotone_functions_raw,
    noncrossing_matchings,
    pancake_f,
    pancake_f_reference,
    stamp_foldings,
    stored_hard_data,
)

MEANDERS = [1, 1, 2, 3, 8, 14, 42, 81, 262, 538, 1828]
STAMPS = [1, 1, 2, 5, 14, 38, 120, 353, 1148, 3527]


def test_pancake(frozen):
    values = [pancake_f(n) for n in range(1, 10)]
    assert values == [0, 1, 3, 4, 5, 7, 8, 9, 10]
    assert values[:8] == frozen["pancake_1_8"]
    assert [pancake_f_reference(n) for n in range(1, 8)] == values[:7]
    for n, f in enumerate(values, start=1):
        if n >= 6:
            assert f >= n + 1
        assert 3 * f <= 5 * n + 5
    with pytest.raises(BudgetExceeded):
        pancake_f(11)
    with pytest.raises(ValueError):
        pancake_f(0)


@pytest.mark.extended
def test_pancake_10():
    assert pancake_f(10) == 11


def test_latin_squares(frozen):
    values = [latin_squares_reduced(n) for n in range(1, 7)]
    assert values == [1, 1, 1, 4, 56, 9408]
    assert values[:4] == frozen["latin_reduced_1_4"]
    assert [latin_squares_bruteforce(n) for n in range(1, 5)] == values[:4]
    with pytest.raises(BudgetExceeded):
        latin_squares_reduced(8)


@pytest.mark.extended
def test_latin_squares_7():
    assert latin_squares_reduced(7) == 16942080


def test_dedekind_variant(frozen):
    assert [dedekind_variant(n) for n in range(1, 5)] == [1, 4, 18, 166]
    assert [monotone_functions_raw(n) for n in range(5)] == frozen["monotone_raw_0_4"]
    assert [monotone_functions_bruteforce(n) for n in range(5)] == frozen["monotone_raw_0_4"]
    with pytest.raises(BudgetExceeded):
        monotone_functions_raw(6)
    with pytest.raises(ValueError):
        dedekind_variant(0)


@pytest.mark.extended
def test_dedekind_variant_5():
    assert dedekind_variant(5) == 7579


def test_maxdet(frozen):
    values = [hadamard_maxdet01(n) for n in range(1, 6)]
    assert values == [1, 1, 2, 3, 5]
    assert values[:4] == frozen["maxdet01_1_4"]
    assert [maxdet01_direct(n) for n in range(1, 6)] == values
    assert hadamard_maxdet01(3) == hadamard_bound(3)
    with pytest.raises(BudgetExceeded):
        hadamard_maxdet01(8)


@pytest.mark.extended
def test_maxdet_6_7():
    assert hadamard_maxdet01(6) == 9
    assert hadamard_maxdet01(7) == 32 == hadamard_bound(7)


def test_hadamard_bound():
    assert hadamard_bound(3) == 2
    assert hadamard_bound(7) == 32
    assert hadamard_bound(11) == 1458
    with pytest.raises(ValueError):
        hadamard_bound(5)


def test_noncrossing_matchings_are_catalan():
    for n in range(8):
        assert len(noncrossing_matchings(tuple(range(2 * n)))) == catalan(n)


def test_meanders(frozen):
    assert [meander_count(n) for n in range(1, 12)] == MEANDERS
    assert meander_count(5) == 8
    closed = [closed_meander_count(n) for n in range(1, 6)]
    assert closed == frozen["closed_meanders_1_5"]
    # a closed meander with 2n crossings opens into an open one with 2n - 1
    assert closed == MEANDERS[0::2][:5]
    with pytest.raises(ValueError):
        meander_count(0)
    with pytest.raises(BudgetExceeded):
        meander_count(40)


def test_meander_catalan_bracket():
    report = meander_growth_check(5)
    for row in report["rows"]:
        assert row["bracket_M_2n"] and row["bracket_closed"]
    assert report["rows"][3]["M_2n"] == 81 and 14 <= 81 <= 196
    assert report["rows"][0]["catalan"] == 1


def test_meander_submultiplicativity_is_contradicted_by_the_listing():
    # read literally on the open listing, M_4 = 3 > M_2 * M_2 = 1
    failures = meander_growth_check(5)["submultiplicative_failures"]
    assert (1, 1, 3, 1) in failures


def test_stamp_foldings(frozen):
    assert [stamp_foldings(n) for n in range(1, 11)] == STAMPS
    assert STAMPS[:8] == frozen["stamp_foldings_1_8"]
    assert [labeled_foldings(n) for n in range(1, 9)] == frozen["labeled_foldings_1_8"]
    with pytest.raises(BudgetExceeded):
        stamp_foldings(13)


def test_stored_hard_data():
    data = stored_hard_data()
    assert data["A1231"][2] == (1, 1, 1, 1, 0, 1, 1, 4, 0)
    assert data["A1116"][2][7] == 240
    assert data["A1676"][2][6] == 28
    assert data["A7299"][2] == (1, 1, 1, 5, 3, 60, 487)
