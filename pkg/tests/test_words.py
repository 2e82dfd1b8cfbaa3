import pytest
from hypothesis import given, strategies as st

from arithtri.config import EnumerationCapError
from arithtri.triangles import TriangleKind, nonlinear_row, pascal_row
from arithtri.words import (
    IndexKind,
    Word,
    grouped_expression,
    histogram,
    iter_words,
    p_index,
    q_index,
    q_index_reversed,
    word_from_ordinal,
)
from oracles import all_words, quasi_binary


@pytest.mark.parametrize("m, letters", [(5, "BAB"), (0, "AAA"), (7, "BBB")])
def test_word_from_ordinal(m, letters):
    assert word_from_ordinal(3, m).letters == letters


@pytest.mark.parametrize("m", [-1, 8])
def test_word_from_ordinal_range(m):
    with pytest.raises(ValueError, match="out of range"):
        word_from_ordinal(3, m)


def test_p_index_table():
    assert [p_index(w) for w in iter_words(3)] == [0, 1, 1, 2, 1, 2, 2, 3]


def test_q_index_table():
    assert [q_index(w) for w in iter_words(3)] == [0, 1, 2, 3, 3, 4, 5, 6]
    assert q_index(Word.from_letters("ABB")) == q_index(Word.from_letters("BAA")) == 3
    assert q_index(Word.from_letters("AAA")) == 0


@pytest.mark.parametrize("n", range(0, 11))
def test_word_indices_against_string_oracle(n):
    words = list(iter_words(n))
    assert [w.letters for w in words] == all_words(n)
    assert [q_index(w) for w in words] == [quasi_binary(s) for s in all_words(n)]
    assert [p_index(w) for w in words] == [s.count("B") for s in all_words(n)]


@pytest.mark.parametrize("n, kind, expected", [
    (3, IndexKind.Q, [1, 1, 1, 2, 1, 1, 1]),
    (3, IndexKind.P, [1, 3, 3, 1]),
    (1, IndexKind.Q, [1, 1]),
])
def test_histogram_examples(n, kind, expected):
    assert list(histogram(n, kind).coeffs) == expected


def test_histogram_kind():
    assert histogram(3, IndexKind.Q).kind is TriangleKind.NONLINEAR
    assert histogram(3, IndexKind.P).kind is TriangleKind.LINEAR


def test_histogram_cap():
    with pytest.raises(EnumerationCapError, match="cap 5"):
        histogram(6, IndexKind.Q, cap=5)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("ARITHTRI_ENUM_CAP", "4")
    with pytest.raises(EnumerationCapError):
        histogram(5, IndexKind.P)
    monkeypatch.setenv("ARITHTRI_ENUM_CAP", "30")
    assert histogram(5, IndexKind.P).total == 32


def test_histogram_chunking_is_deterministic(monkeypatch):
    import arithtri.words as words_mod
    full = histogram(12, IndexKind.Q)
    monkeypatch.setattr(words_mod, "_CHUNK", 37)
    assert histogram(12, IndexKind.Q) == full


@pytest.mark.parametrize("n", range(17))
def test_histograms_equal_rows(n):
    assert histogram(n, IndexKind.P) == pascal_row(n)
    assert histogram(n, IndexKind.Q) == nonlinear_row(n)


def test_grouped_expression_q3():
    g = grouped_expression(3, IndexKind.Q)
    assert [c.index for c in g.classes] == list(range(7))
    assert [w.letters for w in g[3].members] == ["ABB", "BAA"]
    assert g[3].multiplicity == 2
    assert all(g[q].multiplicity == 1 for q in (0, 1, 2, 4, 5, 6))
    assert g.render() == "aaa + aab + aba + 2(abb) + bab + bba + bbb"


def test_grouped_expression_p3():
    g = grouped_expression(3, IndexKind.P)
    assert [w.letters for w in g[1].members] == ["AAB", "ABA", "BAA"]
    assert g.multiplicities == [1, 3, 3, 1]


def test_grouped_expression_q2():
    g = grouped_expression(2, IndexKind.Q)
    assert [[w.letters for w in c.members] for c in g.classes] == [["AA"], ["AB"], ["BA"], ["BB"]]


@pytest.mark.parametrize("n", range(9))
def test_grouped_multiplicities_are_rows(n):
    assert grouped_expression(n, IndexKind.P).multiplicities == list(pascal_row(n))
    assert grouped_expression(n, IndexKind.Q).multiplicities == list(nonlinear_row(n))
    assert sum(grouped_expression(n, IndexKind.Q).multiplicities) == 2 ** n


@pytest.mark.parametrize("n", range(13))
def test_reversed_weights_give_same_histogram(n):
    counts = [0] * (n * (n + 1) // 2 + 1)
    for w in iter_words(n):
        counts[q_index_reversed(w)] += 1
    assert counts == list(nonlinear_row(n))


@given(st.integers(0, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
def test_complement_identity_and_bounds(nm):
    n, m = nm
    w = Word(n, m)
    assert q_index(w) + q_index(w.complement()) == n * (n + 1) // 2
    assert p_index(w) <= n
    assert q_index(w) <= n * (n + 1) // 2


@given(st.integers(0, 16).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
def test_ordinal_round_trip(nm):
    n, m = nm
    w = word_from_ordinal(n, m)
    assert Word.from_letters(w.letters) == w
    assert int("".join(map(str, w.bits())) or "0", 2) == m
