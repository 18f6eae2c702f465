import pytest

from rfw import (BudgetError, CapacityError, Word, count_A_explicit,
                 enumerate_A, verify_overlap, verify_palindromic)

A5_WORDS = ["01011", "01101", "01110", "10011",
            "10101", "10110", "11001", "11010"]


def as_strings(ws):
    return sorted(str(w) for w in ws)


def test_small_generations_match_published_lists():
    assert as_strings(enumerate_A(1)) == ["0"]
    assert as_strings(enumerate_A(2)) == ["1"]
    assert as_strings(enumerate_A(3)) == ["01", "10"]
    assert as_strings(enumerate_A(4)) == ["011", "101", "110"]
    assert as_strings(enumerate_A(5)) == A5_WORDS


def test_generation_zero_is_empty():
    assert len(enumerate_A(0)) == 0


def test_lengths_are_fibonacci():
    for n in range(1, 9):
        ws = enumerate_A(n)
        lengths = {len(w) for w in ws}
        assert len(lengths) == 1


def test_canonical_order_is_ascending_packed_value():
    packed = enumerate_A(7).packed
    assert (packed[1:] > packed[:-1]).all()


def test_membership():
    a5 = enumerate_A(5)
    assert Word.parse("01011") in a5
    assert Word.parse("00000") not in a5
    assert Word.parse("0101") not in a5   # wrong length


def test_budget_guard():
    with pytest.raises(BudgetError):
        enumerate_A(9, budget=10**6)
    # n = 10 exceeds the default 1e8 budget by two orders of magnitude
    with pytest.raises(BudgetError):
        enumerate_A(10)
    assert count_A_explicit(10) == 37623398400


def test_capacity_guard():
    with pytest.raises(CapacityError):
        enumerate_A(11, budget=10**30)


@pytest.mark.parametrize("n", range(1, 10))
def test_palindromic_closure(n):
    assert verify_palindromic(n).ok


@pytest.mark.parametrize("n", range(4, 9))
def test_overlap_identity(n):
    assert verify_overlap(n).ok


def test_recursion_identity_directly():
    # A_n = A_{n-1}A_{n-2} u A_{n-2}A_{n-1} as literal word sets
    for n in range(3, 8):
        big, small = enumerate_A(n - 1), enumerate_A(n - 2)
        rebuilt = big.product(small).union(small.product(big))
        assert rebuilt == enumerate_A(n)


def test_repeated_enumeration_identical():
    first = enumerate_A(8).packed.tobytes()
    second = enumerate_A(8).packed.tobytes()
    assert first == second
