import random

import pytest

from conftest import all_reduced_words, random_poly
from spherehecke.coeff import HBAR, ONE, IntPoly
from spherehecke.hecke import (
    HeckeElt,
    hecke_mul,
    hecke_mul_gen,
    hecke_mul_word,
    specialize,
    t_inverse,
    theta,
    theta_word,
)
from spherehecke.symgroup import Perm, all_perms, compose, identity, transposition


def random_hecke(rng: random.Random, kappa: int, n_terms: int = 3) -> HeckeElt:
    perms = list(all_perms(kappa))
    acc = HeckeElt.zero(kappa)
    for _ in range(n_terms):
        acc = acc + HeckeElt.basis(rng.choice(perms), random_poly(rng))
    return acc


def test_mul_gen_examples():
    s1 = transposition(1, 2)
    sq = hecke_mul_gen(HeckeElt.basis(s1), 1, "left")
    assert sq == HeckeElt.one(2) + HeckeElt.basis(s1, HBAR)
    assert hecke_mul_gen(HeckeElt.one(2), 1, "left") == HeckeElt.basis(s1)
    acc = hecke_mul_word(HeckeElt.one(3), [1, 2, 1], side="left")
    assert acc == HeckeElt.basis(Perm([3, 2, 1]))
    with pytest.raises(IndexError):
        hecke_mul_gen(HeckeElt.one(2), 2, "left")


def test_mul_examples():
    s1 = HeckeElt.basis(transposition(1, 2))
    assert hecke_mul(s1, s1) == HeckeElt.one(2) + s1.scale(HBAR)
    a = HeckeElt.basis(transposition(1, 2), IntPoly([1, 2]))
    assert hecke_mul(a, HeckeElt.one(2)) == a
    assert hecke_mul(s1 - HeckeElt.one(2, HBAR), s1) == HeckeElt.one(2)


def test_t_inverse():
    inv = t_inverse(1, 2)
    s1 = HeckeElt.basis(transposition(1, 2))
    assert inv == s1 - HeckeElt.one(2, HBAR)
    assert hecke_mul(inv, s1) == HeckeElt.one(2)
    assert hecke_mul(s1, inv) == HeckeElt.one(2)
    assert specialize(inv, 0) == {transposition(1, 2): 1}
    with pytest.raises(IndexError):
        t_inverse(3, 2)


def test_theta_small():
    assert theta(1) == HeckeElt.one(1)
    s1 = transposition(1, 2)
    assert theta(2) == HeckeElt.one(2) + HeckeElt.basis(s1, HBAR)
    # derived by hand: T1 (1 + h T2) T1 = T1^2 + h T1 T2 T1
    expected = (
        HeckeElt.one(3)
        + HeckeElt.basis(transposition(1, 3), HBAR)
        + HeckeElt.basis(Perm([3, 2, 1]), HBAR)
    )
    assert theta(3) == expected


def test_theta_word():
    assert theta_word(1) == []
    assert theta_word(2) == [1, 1]
    assert theta_word(4) == [1, 2, 3, 3, 2, 1]


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_theta_commutes_with_higher_generators(kappa):
    # The twist moves only the first strand, so it commutes with T_j for
    # j >= 2; this is what makes the differential respect x1 T_j = T_j x1.
    th = theta(kappa)
    for i in range(2, kappa):
        gen = HeckeElt.generator(i, kappa)
        assert hecke_mul(th, gen) == hecke_mul(gen, th)


def test_theta_is_central_only_for_two_strands():
    th = theta(2)
    gen = HeckeElt.generator(1, 2)
    assert hecke_mul(th, gen) == hecke_mul(gen, th)
    # For three or more strands the twist fails to commute with T_1:
    # theta T1 - T1 theta = h (T1T2 - T2T1) by direct expansion.
    th3 = theta(3)
    g1 = HeckeElt.generator(1, 3)
    diff = hecke_mul(th3, g1) - hecke_mul(g1, th3)
    expected = HeckeElt.basis(Perm([2, 3, 1]), HBAR) - HeckeElt.basis(
        Perm([3, 1, 2]), HBAR
    )
    assert diff == expected


@pytest.mark.parametrize("kappa", [2, 3, 4, 5])
def test_associativity_random(rng, kappa):
    for _ in range(30):
        a = random_hecke(rng, kappa)
        b = random_hecke(rng, kappa)
        c = random_hecke(rng, kappa)
        assert hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c))


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_basis_independence_of_reduced_word(rng, kappa):
    for w in all_perms(kappa):
        target = random_hecke(rng, kappa)
        results = {
            hecke_mul_word(target, word, side="left")
            for word in all_reduced_words(w)
        }
        assert len(results) == 1
        assert results.pop() == hecke_mul(HeckeElt.basis(w), target)


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_hbar_zero_collapses_to_group_algebra(kappa):
    for u in all_perms(kappa):
        for v in all_perms(kappa):
            prod = hecke_mul(HeckeElt.basis(u), HeckeElt.basis(v))
            assert specialize(prod, 0) == {compose(u, v): 1}


@pytest.mark.parametrize("kappa", [3, 4, 5])
def test_braid_relations(kappa):
    for i in range(1, kappa - 1):
        lhs = hecke_mul_word(HeckeElt.one(kappa), [i, i + 1, i], side="right")
        rhs = hecke_mul_word(HeckeElt.one(kappa), [i + 1, i, i + 1], side="right")
        assert lhs == rhs


def test_far_commutation():
    kappa = 5
    for i in range(1, kappa):
        for j in range(i + 2, kappa):
            lhs = hecke_mul_word(HeckeElt.one(kappa), [i, j], side="right")
            rhs = hecke_mul_word(HeckeElt.one(kappa), [j, i], side="right")
            assert lhs == rhs


def test_json_round_trip():
    elt = HeckeElt.basis(transposition(1, 2), HBAR)
    doc = elt.to_json()
    assert doc == {"kappa": 2, "terms": [{"w": [2, 1], "coeff": ["0", "1"]}]}
    assert HeckeElt.from_json(doc) == elt


def test_rank_of_free_module():
    assert len(list(all_perms(4))) == 24
