import random

import pytest

from spherehecke.braid import (
    BraidParseError,
    BraidWord,
    eval_braid,
    parse_braid,
    skein_residue,
    sphere_relation_class,
    sphere_word,
)
from spherehecke.coeff import HBAR, IntPoly
from spherehecke.dga import DgaConfig, d_generator
from spherehecke.hecke import HeckeElt, hecke_mul, specialize, theta
from spherehecke.symgroup import transposition


def test_parse_examples():
    assert parse_braid("s1 s1", 2).letters == (1, 1)
    assert parse_braid("1 -1", 3).letters == (1, -1)
    assert parse_braid("s2' s1", 3).letters == (-2, 1)
    assert parse_braid("", 2).letters == ()
    with pytest.raises(BraidParseError):
        parse_braid("s5", 3)
    with pytest.raises(BraidParseError):
        parse_braid("q1", 3)
    with pytest.raises(BraidParseError):
        parse_braid("0", 3)


def test_eval_examples():
    s1 = HeckeElt.basis(transposition(1, 2))
    assert eval_braid(parse_braid("s1 s1", 2)) == HeckeElt.one(2) + s1.scale(HBAR)
    assert eval_braid(parse_braid("1 -1", 2)) == HeckeElt.one(2)
    assert eval_braid(sphere_word(3)) == theta(3)
    assert eval_braid(sphere_word(5)) == theta(5)


def random_braid(rng: random.Random, kappa: int, max_len: int = 8) -> BraidWord:
    letters = tuple(
        rng.choice([1, -1]) * rng.randint(1, kappa - 1)
        for _ in range(rng.randint(0, max_len))
    )
    return BraidWord(kappa, letters)


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_eval_is_homomorphism(rng, kappa):
    for _ in range(25):
        u = random_braid(rng, kappa)
        v = random_braid(rng, kappa)
        assert eval_braid(u * v) == hecke_mul(eval_braid(u), eval_braid(v))


@pytest.mark.parametrize("kappa", [2, 3, 4])
def test_eval_of_inverse_pairs(rng, kappa):
    for _ in range(25):
        w = random_braid(rng, kappa)
        assert eval_braid(w * w.inverse()) == HeckeElt.one(kappa)


@pytest.mark.parametrize("kappa", [2, 3, 4, 5, 6])
def test_skein_residue_zero(kappa):
    for i in range(1, kappa):
        residue = skein_residue(i, kappa)
        assert residue.is_zero()
        # at h = 0 both crossings agree
        pos = eval_braid(BraidWord(kappa, (i,)))
        neg = eval_braid(BraidWord(kappa, (-i,)))
        assert specialize(pos, 0) == specialize(neg, 0)


@pytest.mark.parametrize("kappa", [1, 2, 3, 4, 5])
def test_sphere_relation_class(kappa):
    for c in (IntPoly([1]), IntPoly([1, 1])):
        cfg = DgaConfig(kappa, c)
        elt = sphere_relation_class(cfg)
        assert elt == d_generator(1, cfg)


def test_sphere_class_values():
    s1 = transposition(1, 2)
    elt = sphere_relation_class(DgaConfig(2))
    assert elt.hecke_part() == HeckeElt(2, {s1: HBAR})
    assert sphere_relation_class(DgaConfig(1)).is_zero()
