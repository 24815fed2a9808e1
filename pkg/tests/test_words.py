import pytest
from hypothesis import given, strategies as st

from braidcoset.words import (BraidWord, IndexGrid, WordSyntaxError, admissible_grids,
                              ascending, descending, format_word, free_reduce, grid_word,
                              parse_word, shift, support_upper, tau, theta, theta_grid, unshift)

letters = st.lists(st.integers(1, 6).flatmap(lambda i: st.sampled_from((i, -i))), max_size=12)


def test_parse_examples():
    assert parse_word("s2 s1").pairs() == [(2, 1), (1, 1)]
    assert parse_word("s1 s1^-1") == BraidWord()
    omega = parse_word("s2^-1 s3 s1 s3 s2")
    assert len(omega) == 5
    assert omega.letters == (-2, 3, 1, 3, 2)


@pytest.mark.parametrize("text", ["", "1", "e", "  "])
def test_identity_spellings(text):
    assert parse_word(text) == BraidWord()


@pytest.mark.parametrize("text,position", [
    ("s0", 1), ("s1 t2", 3), ("s1s2", 2), ("s2^-2", 2), ("x", 0), ("s1 s2^", 5),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text)
    assert err.value.position == position


def test_free_reduce_examples():
    assert free_reduce([1, -1]) == BraidWord()
    assert free_reduce([]) == BraidWord()
    assert free_reduce([2, 3, -3, 2]).letters == (2, 2)


@given(letters)
def test_format_round_trip(xs):
    w = free_reduce(xs)
    assert parse_word(format_word(w)) == w


@given(letters)
def test_words_stay_reduced(xs):
    w = BraidWord(tuple(xs))
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))
    assert (w * w.inverse()) == BraidWord()


def test_theta_small_cases():
    assert theta(2, 0).letters == (2, 1, 3, 2)
    for beta in range(4):
        assert theta(1, beta).letters == (beta + 1,)
    assert support_upper(theta(5, 3)) == 12
    assert theta(5, 3).letters[:5] == (8, 7, 6, 5, 4)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("beta", range(4))
def test_theta_shape(n, beta):
    w = theta(n, beta)
    assert len(w) == n * n
    assert support_upper(w) == 2 * n + beta - 1
    assert w == shift(beta, theta(n, 0))
    assert w == theta_grid(n, beta).row_word()
    assert w == BraidWord(sum((tau(i, n, beta).letters for i in range(n)), ()))


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("beta", range(3))
def test_tau_grows_by_one_letter(m, beta):
    for i in range(m):
        assert tau(i, m + 1, beta) == BraidWord((m + beta + 1 + i,)) * tau(i, m, beta)


def test_shift_and_unshift():
    w = parse_word("s1 s3^-1")
    assert shift(2, w) == parse_word("s3 s5^-1")
    assert unshift(2, shift(2, w)) == w
    with pytest.raises(ValueError):
        unshift(1, w)


def test_runs():
    assert descending(4, 2).letters == (4, 3, 2)
    assert ascending(2, 4).letters == (2, 3, 4)
    assert descending(1, 2) == BraidWord()


def test_grid_validation():
    with pytest.raises(ValueError):
        IndexGrid(((1, 2),))
    with pytest.raises(ValueError):
        IndexGrid(((3, 2), (2, 1)))
    g = IndexGrid.bracket(5, 3, 6, 4)
    assert g.entries == ((5, 4, 3), (6, 5, 4))
    assert grid_word(g, "row").letters == (5, 4, 3, 6, 5, 4)
    assert grid_word(g, "column").letters == (5, 6, 4, 5, 3, 4)
    with pytest.raises(ValueError):
        IndexGrid.bracket(5, 3, 6, 5)


def test_paper_grid_example_entries():
    g = IndexGrid(tuple(tuple(3 + i - j for j in range(1, 4)) for i in range(1, 4)))
    assert g == IndexGrid.bracket(3, 1, 5, 3)


def test_admissible_grid_counts():
    # 1 x l grids are l-subsets of 1..m in decreasing order
    assert sum(1 for _ in admissible_grids(1, 3, 6)) == 20
    for grid in admissible_grids(2, 2, 5):
        IndexGrid(grid)
    # 2 x 2 grids with entries <= 4: a > b, c > d, c > a, d > b
    assert sum(1 for _ in admissible_grids(2, 2, 4)) == 6
