import pytest

from abelicomp.errors import EmptySubset
from abelicomp.finite_field import make_field
from abelicomp.group_core import make_group
from abelicomp.oracle import brute_subset_count
from abelicomp.subset_waring import (
    UNKNOWN, NotReached, check_theorem1_hypothesis, count_subset_restricted, diagonal_count,
    sumset_cover, waring_number,
)

Z5, Z6, Z7 = make_group([5]), make_group([6]), make_group([7])


def test_count_examples():
    assert count_subset_restricted(Z5, [Z5.nonzero_elements] * 3, 1) == 13
    assert count_subset_restricted(Z6, [{1}, {2}], 3) == 1
    squares = {0, 1, 2, 4}
    assert count_subset_restricted(Z7, [squares, squares], 3) == brute_subset_count(Z7, [squares] * 2, 3) == 2
    with pytest.raises(EmptySubset):
        count_subset_restricted(Z5, [{1}, set()], 1)


def test_hypothesis_examples():
    assert check_theorem1_hypothesis(Z6, [{0, 3}]) == [[False]]
    assert check_theorem1_hypothesis(Z5, [{1, 2}]) == [[True]]
    G = make_group([2, 3])
    assert check_theorem1_hypothesis(G, [{(0, 0), (1, 1)}]) == [UNKNOWN]
    assert check_theorem1_hypothesis(G, [{(0, 0), (1, 0), (0, 1), (1, 1)}]) == [[True, True]]


def test_diagonal_examples():
    F = make_field(5)
    assert diagonal_count(F, [1, 1], [2, 2], 3) == 4
    F7 = make_field(7)
    # d_j = 1 is the unrestricted count: (6^3 + 1) / 7 for a nonzero target
    assert diagonal_count(F7, [1, 1, 1], [1, 1, 1], 2) == 31
    assert diagonal_count(F7, [1], [2], 0) == 0


def test_waring_examples():
    F = make_field(7)
    assert waring_number(F, 2) == 2
    assert waring_number(F, 3) == 3
    assert waring_number(F, 1) == 1
    assert waring_number(F, 3, max_m=2) == NotReached(2)
    # k = q-1 gives {0,1}: needs q-1 summands
    assert waring_number(make_field(11), 10) == 10


def test_waring_monotone_in_subset():
    G = Z7
    base = {0, 1, 6}
    for extra in range(7):
        assert sumset_cover(G, base | {extra}, 10) <= sumset_cover(G, base, 10)
