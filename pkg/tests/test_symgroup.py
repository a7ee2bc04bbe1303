import pytest

from conftest import all_reduced_words
from spherehecke.symgroup import (
    Perm,
    all_perms,
    compose,
    from_word,
    identity,
    length,
    longest_element,
    mul_gen_left,
    reduced_word,
    transposition,
)


def test_compose_examples():
    s1 = transposition(1, 2)
    assert compose(s1, s1) == identity(2)
    s1, s2 = transposition(1, 3), transposition(2, 3)
    assert compose(s1, s2) == Perm([2, 3, 1])
    w = Perm([3, 1, 2])
    assert compose(w, identity(3)) == w
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_invalid_oneline():
    with pytest.raises(ValueError):
        Perm([1, 1, 2])
    with pytest.raises(ValueError):
        Perm([0, 1])


def test_length_examples():
    assert length(identity(4)) == 0
    assert length(transposition(1, 2)) == 1
    assert length(longest_element(3)) == 3
    assert length(longest_element(5)) == 10


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == ()
    # one-line [3,1,2] factors as s2 s1 under this composition convention
    assert reduced_word(Perm([3, 1, 2])) == (2, 1)
    assert reduced_word(longest_element(3)) == (1, 2, 1)


@pytest.mark.parametrize("kappa", [1, 2, 3, 4, 5])
def test_reduced_word_recovers_permutation(kappa):
    for w in all_perms(kappa):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert from_word(word, kappa) == w


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_reduced_word_is_lex_min(kappa):
    for w in all_perms(kappa):
        assert reduced_word(w) == min(all_reduced_words(w))


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_gen_multiplication_changes_length_by_one(kappa):
    for w in all_perms(kappa):
        for i in range(1, kappa):
            sw, lengthened = mul_gen_left(i, w)
            assert length(sw) == length(w) + (1 if lengthened else -1)


def test_length_subadditive():
    for u in all_perms(4):
        for v in all_perms(4):
            uv = compose(u, v)
            assert length(uv) <= length(u) + length(v)
            concat = reduced_word(u) + reduced_word(v)
            if length(uv) == length(u) + length(v):
                assert from_word(concat, 4) == uv


def test_inverse_and_json():
    w = Perm([3, 1, 4, 2])
    assert compose(w, w.inverse()) == identity(4)
    assert Perm.from_json(w.to_json()) == w
