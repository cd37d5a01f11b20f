import pytest

from runwords import oracle

B4_NO_11 = ["0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"]
B4_NO_111 = [
    "0000", "0001", "0010", "0011", "0100", "0101", "0110",
    "1000", "1001", "1010", "1011", "1100", "1101",
]


def test_enumerate_known_values():
    r = oracle.enumerate_words(4, 2)
    assert r.word_count == 8
    assert r.total_ones == 10
    r = oracle.enumerate_words(4, 3)
    assert r.word_count == 13
    assert r.total_ones == 22


def test_enumerate_empty_word():
    r = oracle.enumerate_words(0, 2)
    assert r.word_count == 1
    assert r.total_ones == 0
    assert r.distribution == (1,)


def test_enumerate_internal_consistency():
    for k in (2, 3):
        for n in range(0, 12):
            r = oracle.enumerate_words(n, k)
            assert r.word_count == sum(r.distribution)
            assert r.total_ones == sum(m * c for m, c in enumerate(r.distribution))


def test_list_words_known_sets():
    assert oracle.list_words(4, 2) == B4_NO_11
    assert oracle.list_words(4, 3) == B4_NO_111
    assert oracle.list_words(1, 2) == ["0", "1"]
    assert oracle.list_words(3, 3) == ["000", "001", "010", "011", "100", "101", "110"]


def test_list_words_sorted_and_counted():
    for k in (2, 3, 4):
        for n in range(0, 10):
            words = oracle.list_words(n, k)
            assert words == sorted(words)
            assert len(words) == oracle.enumerate_words(n, k).word_count
            assert all("1" * k not in w for w in words)


def test_budgets_enforced():
    with pytest.raises(ValueError, match="budget"):
        oracle.enumerate_words(25, 2)
    with pytest.raises(ValueError, match="budget"):
        oracle.list_words(17, 2)


def test_rejects_bad_params():
    with pytest.raises(ValueError):
        oracle.enumerate_words(4, 1)
    with pytest.raises(ValueError):
        oracle.list_words(-1, 2)
